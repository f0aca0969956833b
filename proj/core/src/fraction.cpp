#include "invloci/fraction.hpp"

namespace invloci {

std::string to_string(const Fraction& a) {
    return numerator(a).str() + "/" + denominator(a).str();
}

std::string to_string(const Int& a) { return a.str(); }

Fraction parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Fraction(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return frac(num, den);
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after each step
    }
    return r;
}

}  // namespace invloci
