#ifndef INVLOCI_SYMFUN_HPP
#define INVLOCI_SYMFUN_HPP

#include <span>
#include <vector>

#include "invloci/fraction.hpp"
#include "invloci/series.hpp"
#include "invloci/weights.hpp"

namespace invloci {

// Total Chern class of a weight multiset: prod (1 + xi t) truncated at
// t^m, built by incremental linear multiplication (cost |ws| * m).
TruncatedSeries chern_series(std::span<const Weight> ws, int m);

// The elementary symmetric values c_1..c_m (c_0 = 1 implicit); c_i = 0
// for i beyond the multiset size.
std::vector<Fraction> chern_from_weights(std::span<const Weight> ws, int m);

// Coefficient of t^m in the inverse of the total Chern class, i.e. the
// top Segre coefficient at truncation order m.
Fraction segre_top(std::span<const Weight> ws, int m);

// e_g of the multiset; zero when g exceeds its size.
Fraction elementary_top(std::span<const Weight> ws, int g);

// Power sums p_1..p_kmax, p_k = sum xi^k.
std::vector<Fraction> power_sums(std::span<const Weight> ws, int kmax);

}  // namespace invloci

#endif
