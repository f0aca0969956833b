#include "invloci/grassmann.hpp"

#include <algorithm>
#include <sstream>

namespace invloci {

std::string CoordinatePlane::label() const {
    std::ostringstream out;
    out << "<";
    for (std::size_t i = 0; i < span.size(); ++i) {
        if (i) out << ",";
        out << "z" << span[i];
    }
    out << ">";
    return out.str();
}

std::vector<CoordinatePlane> enumerate_planes(int k, int n) {
    if (k < 0 || k >= n || n > 8) throw calc_error("need 0 <= k < n <= 8");
    std::vector<CoordinatePlane> planes;
    std::vector<int> cur(static_cast<std::size_t>(k) + 1);
    // Next lexicographic (k+1)-subset of {0..n}.
    for (int i = 0; i <= k; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        planes.push_back({cur});
        int i = k;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j) - 1] + 1;
    }
    return planes;
}

LocalizationDatum plane_localization_datum(const CoordinatePlane& S, int n, int d,
                                           const WeightVector& w) {
    if (static_cast<int>(w.size()) != n + 1) throw calc_error("weight count != n+1");
    std::vector<int> complement;
    for (int q = 0; q <= n; ++q)
        if (std::find(S.span.begin(), S.span.end(), q) == S.span.end()) complement.push_back(q);

    LocalizationDatum datum;
    datum.label = S.label();
    for (int s : S.span)
        for (int q : complement) {
            Weight t = w[static_cast<std::size_t>(q)] - w[static_cast<std::size_t>(s)];
            if (t == 0)
                throw degenerate_weights_error("zero tangent weight at " + S.label() +
                                               " for weights " + w.to_string());
            datum.tangent_weights.push_back(t);
        }
    // Fiber of Q (x) Sym^d(T dual): one copy of -M_d(S) shifted by each
    // quotient weight.
    for (int q : complement) {
        auto mw = monomial_weights(d, S.span, w, 0);
        for (Weight x : mw) datum.fiber_weights.push_back(w[static_cast<std::size_t>(q)] - x);
    }
    return datum;
}

BottReport plane_degree_report(int k, int n, int d, const WeightVector& w) {
    if (d < 1) throw calc_error("plane degree needs d >= 1");
    if (!all_distinct(w))
        throw degenerate_weights_error("weights not distinct: " + w.to_string());
    const int g = (k + 1) * (n - k);
    std::vector<LocalizationDatum> data;
    for (const auto& S : enumerate_planes(k, n))
        data.push_back(plane_localization_datum(S, n, d, w));
    BottReport report = bott_sum_chern_top(data, g);
    report.weights_used = w;
    report.family = "plane";
    report.d = d;
    report.k = k;
    report.n = n;
    return report;
}

Int plane_degree(int k, int n, int d, const WeightVector& w) {
    return plane_degree_report(k, n, d, w).degree;
}

Int hyperplane_degree_closed(int n, int d) {
    Int inner = binomial(d + n, n);
    // C(inner, n) with an arbitrary-precision top argument.
    Int r = 1;
    for (int i = 1; i <= n; ++i) {
        r *= inner - n + i;
        r /= i;
    }
    return r;
}

Int plane_codimension(int k, int n, int d) {
    return (Int(n) - k) * (binomial(k + d, d) - (k + 1));
}

}  // namespace invloci
