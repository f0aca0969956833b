#ifndef INVLOCI_GRASSMANN_HPP
#define INVLOCI_GRASSMANN_HPP

#include <vector>

#include "invloci/bott.hpp"
#include "invloci/weights.hpp"

namespace invloci {

/// A torus fixed point of G(k,n): the coordinate k-plane spanned by a
/// (k+1)-element subset of {0..n}.
struct CoordinatePlane {
    std::vector<int> span;  // strictly increasing indices, size k+1

    std::string label() const;
    bool operator==(const CoordinatePlane&) const = default;
};

// All C(n+1, k+1) coordinate planes in lexicographic order. Requires
// 0 <= k < n <= 8.
std::vector<CoordinatePlane> enumerate_planes(int k, int n);

// Localization data at a coordinate plane S:
//   tangent: { w_q - w_s : s in S, q not in S }, size g = (k+1)(n-k)
//   fiber:   { w_q - wt(mu) : q not in S, mu in M_d(S) },
//            size (n-k) C(d+k, k)
// Requires pairwise distinct weights; throws degenerate_weights_error on
// a zero tangent weight.
LocalizationDatum plane_localization_datum(const CoordinatePlane& S, int n, int d,
                                           const WeightVector& w);

// Degree of the locus of foliations on P^n with an invariant k-plane:
// localization sum of e_g over the coordinate planes.
BottReport plane_degree_report(int k, int n, int d, const WeightVector& w);
Int plane_degree(int k, int n, int d, const WeightVector& w);

// Closed form for k = n-1: C(C(d+n,n), n).
Int hyperplane_degree_closed(int n, int d);

// Codimension of the invariant-k-plane locus: (n-k)(C(k+d,d) - (k+1)).
Int plane_codimension(int k, int n, int d);

}  // namespace invloci

#endif
