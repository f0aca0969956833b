#ifndef INVLOCI_POLYNOMIAL_HPP
#define INVLOCI_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "invloci/fraction.hpp"

namespace invloci {

/// Univariate polynomial with rational coefficients, coefficient of d^i
/// at index i. Trailing zeros are stripped; the zero polynomial is the
/// empty coefficient list (degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Fraction> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Fraction& c) { return UniPoly({c}); }
    // d - root
    static UniPoly linear_root(const Fraction& root) { return UniPoly({-root, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Fraction>& coefficients() const { return c_; }
    Fraction coefficient(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)]
                                                           : Fraction(0);
    }
    Fraction leading() const { return c_.empty() ? Fraction(0) : c_.back(); }

    Fraction eval(const Fraction& x) const;  // Horner, exact

    UniPoly operator+(const UniPoly&) const;
    UniPoly operator-(const UniPoly&) const;
    UniPoly operator*(const UniPoly&) const;
    UniPoly scaled(const Fraction& s) const;

    // Exact division by (d - root); throws calc_error on nonzero remainder.
    UniPoly divide_by_linear(const Fraction& root) const;

    bool operator==(const UniPoly&) const = default;

    std::string to_string(const std::string& var = "d") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Fraction> c_;
};

}  // namespace invloci

#endif
