#ifndef INVLOCI_FRACTION_HPP
#define INVLOCI_FRACTION_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "invloci/errors.hpp"

namespace invloci {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: denominator > 0 and
// gcd(|num|, den) = 1, with zero stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Fraction = boost::multiprecision::cpp_rational;

inline Fraction frac(const Int& num, const Int& den) {
    if (den == 0) throw zero_denominator_error{};
    // The two-argument cpp_rational constructor rejects negative
    // denominators; division normalizes sign and reduces.
    return Fraction(num) / Fraction(den);
}

inline Fraction frac_add(const Fraction& a, const Fraction& b) { return a + b; }
inline Fraction frac_sub(const Fraction& a, const Fraction& b) { return a - b; }
inline Fraction frac_mul(const Fraction& a, const Fraction& b) { return a * b; }

inline Fraction frac_inv(const Fraction& a) {
    if (a == 0) throw zero_denominator_error{};
    return 1 / a;
}

inline Fraction frac_div(const Fraction& a, const Fraction& b) {
    if (b == 0) throw zero_denominator_error{};
    return a / b;
}

std::string to_string(const Fraction& a);  // "num/den", always with den
std::string to_string(const Int& a);       // plain decimal

// Extracts the numerator of an integral fraction; anything else means a
// localization bug or degenerate weights upstream.
inline Int frac_to_integer(const Fraction& a) {
    if (denominator(a) != 1) throw not_integral_error(to_string(a));
    return numerator(a);
}

Fraction parse_fraction(const std::string& s);  // "num" or "num/den"

// Exact binomial coefficient, 0 for k < 0 or k > n.
Int binomial(long n, long k);

}  // namespace invloci

#endif
