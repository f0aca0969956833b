#ifndef INVLOCI_SERIES_HPP
#define INVLOCI_SERIES_HPP

#include <cstdint>
#include <vector>

#include "invloci/fraction.hpp"

namespace invloci {

/// A power series in one variable t truncated at a fixed order m:
/// coefficients of t^0 .. t^m, everything above discarded on the fly.
/// Total Chern and Segre classes live here, so the constant term is
/// normally 1.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeff_(static_cast<std::size_t>(order) + 1) {
        if (order < 1) throw calc_error("series order must be >= 1");
        coeff_[0] = 1;
    }

    static TruncatedSeries one(int order) { return TruncatedSeries(order); }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Fraction& operator[](int i) const { return coeff_[static_cast<std::size_t>(i)]; }
    Fraction& operator[](int i) { return coeff_[static_cast<std::size_t>(i)]; }

    // *= (1 + w t), truncated.
    TruncatedSeries& mul_linear(std::int64_t w) {
        for (int i = order(); i >= 1; --i) coeff_[i] += w * coeff_[i - 1];
        return *this;
    }

    // Multiplicative inverse up to the order; requires constant term 1.
    // s_0 = 1, s_i = -sum_{j=1..i} c_j s_{i-j}. This is the Segre
    // convention s(E) c(E) = 1.
    TruncatedSeries inverse() const;

    TruncatedSeries operator*(const TruncatedSeries& rhs) const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Fraction> coeff_;
};

}  // namespace invloci

#endif
