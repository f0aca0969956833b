#ifndef INVLOCI_WEIGHTS_HPP
#define INVLOCI_WEIGHTS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "invloci/errors.hpp"

namespace invloci {

// Torus weights are plain machine integers. With |w_i| <= 2^20 and
// monomial degrees <= 64 every intermediate weight sum fits in 64 bits;
// Fractions take over at the first division.
using Weight = std::int64_t;
inline constexpr Weight kWeightBound = 1 << 20;

/// The integer weights w_0..w_n of the C* action t.z_i = t^{w_i} z_i.
struct WeightVector {
    std::vector<Weight> w;

    WeightVector() = default;
    WeightVector(std::initializer_list<Weight> init) : w(init) {}
    explicit WeightVector(std::vector<Weight> v) : w(std::move(v)) {}

    std::size_t size() const { return w.size(); }
    Weight operator[](std::size_t i) const { return w[i]; }

    bool operator==(const WeightVector&) const = default;

    std::string to_string() const;                       // "0,1,3"
    static WeightVector parse(const std::string& csv);   // comma-separated
};

// True iff all w_i are pairwise distinct (Grassmannian genericity).
bool all_distinct(const WeightVector& w);

// Conic-space genericity: the six sums w_i + w_j (0 <= i <= j <= 2) are
// pairwise distinct. Requires exactly three weights.
bool validate_conic_weights(const WeightVector& w);

// Weights of the degree-e monomial basis in the variables J (indices
// into w), each shifted by `shift`. Enumeration follows the exponent
// vectors in decreasing lexicographic order, so the multiset order is
// deterministic. Size is C(e+|J|-1, |J|-1).
std::vector<Weight> monomial_weights(int e, const std::vector<int>& J, const WeightVector& w,
                                     Weight shift = 0);

// Seeded rejection sampling of an (n+1)-entry weight vector passing the
// validator; deterministic for a fixed seed. Throws search_exhausted_error
// after 10000 rejected draws.
WeightVector random_valid_weights(int n, const std::function<bool(const WeightVector&)>& validator,
                                  std::uint64_t seed);

// Default conic weights (0,1,3): smallest vector with distinct pair sums.
WeightVector default_conic_weights();

// Doubling-plus-one weights 0,1,3,7,15,...: pairwise differences are all
// distinct, which keeps Grassmannian tangent weights nonzero.
WeightVector default_plane_weights(int n);

}  // namespace invloci

#endif
