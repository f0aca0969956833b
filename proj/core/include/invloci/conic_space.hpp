#ifndef INVLOCI_CONIC_SPACE_HPP
#define INVLOCI_CONIC_SPACE_HPP

#include <string>
#include <vector>

#include "invloci/weights.hpp"

namespace invloci {

// The twelve torus fixed points of the space of complete conics (the
// blowup of the P^5 of plane conics along the surface of double lines).
//
//   OffExceptional(i,j)     the conic z_i z_j, i < j            (3 points)
//   ExceptionalPair(i)      (z_i^2, zv_i^2 (x) z_j z_k), {j,k}
//                           the complement of i                 (3 points)
//   ExceptionalDouble(i,j)  (z_i^2, zv_i^2 (x) z_j^2), j != i   (6 points)
enum class ConicPointKind { OffExceptional, ExceptionalPair, ExceptionalDouble };

struct ConicFixedPoint {
    ConicPointKind kind;
    int i = 0;
    int j = -1;  // unused for ExceptionalPair

    // The index not named by the point (complement of {i,j}, or of {i}
    // together with j). Derived, never stored.
    int third() const;

    std::string label() const;

    bool operator==(const ConicFixedPoint&) const = default;
};

// All 12 fixed points in deterministic order: OffExceptional (lex),
// ExceptionalPair (by i), ExceptionalDouble (lex on (i,j)).
std::vector<ConicFixedPoint> enumerate_fixed_points();

// The five weights of the tangent space at a fixed point. Throws
// degenerate_weights_error if any weight vanishes.
std::vector<Weight> tangent_weights(const ConicFixedPoint& p, const WeightVector& w);

// The d(d+2) weights of the fiber of the vector-field bundle at a fixed
// point, from the eigenbases of the three limit cases.
std::vector<Weight> fiber_weights(const ConicFixedPoint& p, int d, const WeightVector& w);

}  // namespace invloci

#endif
