#ifndef INVLOCI_BOTT_HPP
#define INVLOCI_BOTT_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "invloci/fraction.hpp"
#include "invloci/polynomial.hpp"
#include "invloci/weights.hpp"

namespace invloci {

/// Per-fixed-point localization data: the tangent weights of the ambient
/// space and the fiber weights of the bundle being integrated.
struct LocalizationDatum {
    std::string label;
    std::vector<Weight> tangent_weights;
    std::vector<Weight> fiber_weights;
};

/// Result of one localization sum. The contribution of every fixed point
/// is kept so that degenerate-weight failures stay diagnosable.
struct BottReport {
    Int degree;
    std::vector<std::pair<std::string, Fraction>> contributions;
    WeightVector weights_used;
    std::string family;
    int d = 0;
    int k = -1;
    int n = -1;
};

// Sum over fixed points of s_m(fiber) / prod(tangent), exact. Every datum
// must carry exactly m tangent weights, all nonzero. Throws
// localization_error (with the contribution dump) if the total is not an
// integer.
BottReport bott_sum_segre(std::span<const LocalizationDatum> data, int m);

// Same with numerator e_g(fiber) instead of the Segre coefficient.
BottReport bott_sum_chern_top(std::span<const LocalizationDatum> data, int g);

// Degree of the locus of plane foliations of degree d with an invariant
// smooth conic: 12-point localization sum at order 5. Requires d >= 2 and
// weights with pairwise-distinct pair sums.
BottReport conic_degree_report(int d, const WeightVector& w);
Int conic_degree(int d, const WeightVector& w);

// Codimension of the invariant-conic locus: 2(d-1).
Int conic_codimension(int d);

// Dimension of the space of degree-d foliations on P^n:
// (n+1) C(d+n,n) - C(d+n-1,n) - 1.
Int ambient_dimension(int n, int d);

// The closed form of the invariant-conic degree as a polynomial in d:
// (1/3840)(d-1)d(d+1)(d^7+25d^6+231d^5+795d^4+1856d^3+2468d^2+2256d+768).
// Used as the cross-check oracle for the localization path.
const UniPoly& conic_degree_formula();

}  // namespace invloci

#endif
