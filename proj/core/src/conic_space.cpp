#include "invloci/conic_space.hpp"

#include <algorithm>

namespace invloci {

namespace {

const std::vector<int> kAllVars{0, 1, 2};

// Removes exactly one occurrence of x from the multiset.
void remove_one(std::vector<Weight>& ms, Weight x) {
    auto it = std::find(ms.begin(), ms.end(), x);
    if (it == ms.end()) throw calc_error("fiber basis exclusion not found");
    ms.erase(it);
}

void append(std::vector<Weight>& dst, std::vector<Weight> src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace

int ConicFixedPoint::third() const {
    if (kind == ConicPointKind::ExceptionalPair) return -1;
    return 3 - i - j;
}

std::string ConicFixedPoint::label() const {
    auto z = [](int a) { return "z" + std::to_string(a); };
    switch (kind) {
        case ConicPointKind::OffExceptional:
            return z(i) + "*" + z(j);
        case ConicPointKind::ExceptionalPair: {
            int a = (i == 0) ? 1 : 0;
            int b = (i == 2) ? 1 : 2;
            return "(" + z(i) + "^2, " + z(a) + "*" + z(b) + ")";
        }
        case ConicPointKind::ExceptionalDouble:
            return "(" + z(i) + "^2, " + z(j) + "^2)";
    }
    return {};
}

std::vector<ConicFixedPoint> enumerate_fixed_points() {
    std::vector<ConicFixedPoint> pts;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            pts.push_back({ConicPointKind::OffExceptional, i, j});
    for (int i = 0; i < 3; ++i) pts.push_back({ConicPointKind::ExceptionalPair, i, -1});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (j != i) pts.push_back({ConicPointKind::ExceptionalDouble, i, j});
    return pts;
}

std::vector<Weight> tangent_weights(const ConicFixedPoint& p, const WeightVector& w) {
    if (w.size() != 3) throw calc_error("conic space needs three weights");
    std::vector<Weight> t;
    switch (p.kind) {
        case ConicPointKind::OffExceptional:
            // T_B = Hom(<z_i z_j>, S_2 / <z_i z_j>).
            for (int a = 0; a < 3; ++a)
                for (int b = a; b < 3; ++b) {
                    if (a == p.i && b == p.j) continue;
                    t.push_back(w[a] + w[b] - (w[p.i] + w[p.j]));
                }
            break;
        case ConicPointKind::ExceptionalPair: {
            int j = (p.i == 0) ? 1 : 0;
            int k = (p.i == 2) ? 1 : 2;
            t = {w[j] - w[p.i], w[k] - w[p.i], w[j] - w[k], w[k] - w[j],
                 w[j] + w[k] - 2 * w[p.i]};
            break;
        }
        case ConicPointKind::ExceptionalDouble: {
            int k = p.third();
            t = {w[p.j] - w[p.i], w[k] - w[p.i], w[k] - w[p.j], 2 * (w[k] - w[p.j]),
                 2 * (w[p.j] - w[p.i])};
            break;
        }
    }
    for (Weight x : t)
        if (x == 0)
            throw degenerate_weights_error("zero tangent weight at " + p.label() +
                                           " for weights " + w.to_string());
    return t;
}

std::vector<Weight> fiber_weights(const ConicFixedPoint& p, int d, const WeightVector& w) {
    if (d < 2) throw calc_error("fiber weights need d >= 2");
    if (w.size() != 3) throw calc_error("conic space needs three weights");
    std::vector<Weight> f;
    switch (p.kind) {
        case ConicPointKind::OffExceptional: {
            // {F1 X_{i,j} : F1 in M_{d-1}} u {F2 dz_k : F2 in M_d \ {z_k^d}}
            int k = p.third();
            f = monomial_weights(d - 1, kAllVars, w, 0);
            auto g = monomial_weights(d, kAllVars, w, -w[k]);
            remove_one(g, d * w[k] - w[k]);
            append(f, std::move(g));
            break;
        }
        case ConicPointKind::ExceptionalPair: {
            // {F1 z_i dz_j, F2 z_i dz_k : F in M_{d-1}} u
            // {F3 X_{j,k} : F3 in M_{d-1}(z_j, z_k)}
            int j = (p.i == 0) ? 1 : 0;
            int k = (p.i == 2) ? 1 : 2;
            f = monomial_weights(d - 1, kAllVars, w, w[p.i] - w[j]);
            append(f, monomial_weights(d - 1, kAllVars, w, w[p.i] - w[k]));
            append(f, monomial_weights(d - 1, {j, k}, w, 0));
            break;
        }
        case ConicPointKind::ExceptionalDouble: {
            // {F1 z_i dz_j : F1 in M_{d-1}} u {F2 dz_k : F2 in M_d \ {z_k^d}}
            int k = p.third();
            f = monomial_weights(d - 1, kAllVars, w, w[p.i] - w[p.j]);
            auto g = monomial_weights(d, kAllVars, w, -w[k]);
            remove_one(g, d * w[k] - w[k]);
            append(f, std::move(g));
            break;
        }
    }
    return f;
}

}  // namespace invloci
