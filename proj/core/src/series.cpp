#include "invloci/series.hpp"

namespace invloci {

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeff_[0] != 1) throw calc_error("series inverse requires constant term 1");
    TruncatedSeries s(order());
    for (int i = 1; i <= order(); ++i) {
        Fraction acc = 0;
        for (int j = 1; j <= i; ++j) acc += coeff_[j] * s[i - j];
        s[i] = -acc;
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    if (order() != rhs.order()) throw calc_error("series order mismatch");
    TruncatedSeries p(order());
    for (int i = 0; i <= order(); ++i) {
        Fraction acc = 0;
        for (int j = 0; j <= i; ++j) acc += coeff_[j] * rhs[i - j];
        p[i] = acc;
    }
    return p;
}

}  // namespace invloci
