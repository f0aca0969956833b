#include "invloci/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace invloci {

Fraction UniPoly::eval(const Fraction& x) const {
    Fraction acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& rhs) const {
    std::vector<Fraction> r(std::max(c_.size(), rhs.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < c_.size()) r[i] += c_[i];
        if (i < rhs.c_.size()) r[i] += rhs.c_[i];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& rhs) const {
    return *this + rhs.scaled(-1);
}

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return UniPoly{};
    std::vector<Fraction> r(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) r[i + j] += c_[i] * rhs.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Fraction& s) const {
    std::vector<Fraction> r(c_);
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::divide_by_linear(const Fraction& root) const {
    if (is_zero()) throw calc_error("division of zero polynomial");
    // Synthetic division by (d - root).
    std::vector<Fraction> q(c_.size() - 1);
    Fraction carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    Fraction rem = c_[0] + carry * root;
    if (rem != 0) throw calc_error("not a root: remainder " + invloci::to_string(rem));
    return UniPoly(std::move(q));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Fraction& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Fraction a = c;
        if (!first) {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = denominator(a) == 1 && (numerator(a) == 1 || numerator(a) == -1);
        if (i == 0 || !unit) {
            if (denominator(a) == 1)
                out << numerator(a).str();
            else
                out << numerator(a).str() << "/" << denominator(a).str();
            if (i > 0) out << "*";
        } else if (numerator(a) == -1) {
            out << "-";
        }
        if (i > 1)
            out << var << "^" << i;
        else if (i == 1)
            out << var;
    }
    return out.str();
}

}  // namespace invloci
