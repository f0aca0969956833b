#include "invloci/weights.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace invloci {

std::string WeightVector::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ",";
        out << w[i];
    }
    return out.str();
}

WeightVector WeightVector::parse(const std::string& csv) {
    WeightVector v;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw calc_error("empty weight in list: " + csv);
        std::size_t pos = 0;
        long long x = std::stoll(tok, &pos);
        if (pos != tok.size()) throw calc_error("bad weight '" + tok + "'");
        if (x < -kWeightBound || x > kWeightBound)
            throw calc_error("weight out of range: " + tok);
        v.w.push_back(x);
    }
    if (v.w.empty()) throw calc_error("empty weight list");
    return v;
}

bool all_distinct(const WeightVector& w) {
    auto s = w.w;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool validate_conic_weights(const WeightVector& w) {
    if (w.size() != 3) return false;
    std::vector<Weight> sums;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) sums.push_back(w[i] + w[j]);
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::vector<Weight> monomial_weights(int e, const std::vector<int>& J, const WeightVector& w,
                                     Weight shift) {
    if (e < 0) throw calc_error("negative degree");
    if (J.empty()) throw calc_error("empty variable subset");
    std::vector<Weight> out;
    // Exponent vectors of total degree e over |J| variables, decreasing
    // lex: the first variable's exponent runs from e down to 0.
    auto rec = [&](auto&& self, std::size_t pos, int rest, Weight acc) -> void {
        if (pos + 1 == J.size()) {
            out.push_back(acc + rest * w[static_cast<std::size_t>(J[pos])] + shift);
            return;
        }
        for (int a = rest; a >= 0; --a)
            self(self, pos + 1, rest - a, acc + a * w[static_cast<std::size_t>(J[pos])]);
    };
    rec(rec, 0, e, 0);
    return out;
}

WeightVector random_valid_weights(int n, const std::function<bool(const WeightVector&)>& validator,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Weight> dist(-64, 64);
    constexpr int kBudget = 10000;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        WeightVector v;
        v.w.resize(static_cast<std::size_t>(n) + 1);
        for (auto& x : v.w) x = dist(rng);
        if (validator(v)) return v;
    }
    throw search_exhausted_error("no valid weight vector after 10000 draws (n=" +
                                 std::to_string(n) + ")");
}

WeightVector default_conic_weights() { return WeightVector{0, 1, 3}; }

WeightVector default_plane_weights(int n) {
    WeightVector v;
    Weight x = 0;
    for (int i = 0; i <= n; ++i) {
        v.w.push_back(x);
        x = 2 * x + 1;
    }
    return v;
}

}  // namespace invloci
