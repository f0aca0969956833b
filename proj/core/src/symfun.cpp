#include "invloci/symfun.hpp"

namespace invloci {

TruncatedSeries chern_series(std::span<const Weight> ws, int m) {
    TruncatedSeries s(m);
    for (Weight x : ws) s.mul_linear(x);
    return s;
}

std::vector<Fraction> chern_from_weights(std::span<const Weight> ws, int m) {
    if (m < 1) throw calc_error("chern order must be >= 1");
    TruncatedSeries s = chern_series(ws, m);
    std::vector<Fraction> c(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) c[static_cast<std::size_t>(i) - 1] = s[i];
    return c;
}

Fraction segre_top(std::span<const Weight> ws, int m) {
    return chern_series(ws, m).inverse()[m];
}

Fraction elementary_top(std::span<const Weight> ws, int g) {
    if (g > static_cast<int>(ws.size())) return 0;
    if (g == 0) return 1;
    return chern_series(ws, g)[g];
}

std::vector<Fraction> power_sums(std::span<const Weight> ws, int kmax) {
    if (kmax < 1) throw calc_error("kmax must be >= 1");
    std::vector<Fraction> p(static_cast<std::size_t>(kmax));
    for (Weight x : ws) {
        Int pw = 1;
        for (int k = 1; k <= kmax; ++k) {
            pw *= x;
            p[static_cast<std::size_t>(k) - 1] += pw;
        }
    }
    return p;
}

}  // namespace invloci
