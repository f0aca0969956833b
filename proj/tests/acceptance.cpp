// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Everything is exact arithmetic; no tolerances.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "invloci/bott.hpp"
#include "invloci/conic_space.hpp"
#include "invloci/grassmann.hpp"
#include "invloci/interpolate.hpp"
#include "invloci/symfun.hpp"

using namespace invloci;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = std::string(" (") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " ["
              << ms << " ms]" << detail << "\n";
    if (!ok) ++failures;
}

bool conic_pointwise() {
    WeightVector w{0, 1, 3};
    const UniPoly& formula = conic_degree_formula();
    auto start = std::chrono::steady_clock::now();
    if (conic_degree(2, w) != 81) return false;
    if (conic_degree(3, w) != 1380) return false;
    for (int d = 2; d <= 17; ++d)
        if (Fraction(conic_degree(d, w)) != formula.eval(d)) return false;
    auto elapsed = std::chrono::steady_clock::now() - start;
    return elapsed < std::chrono::seconds(5);
}

bool formula_recovery() {
    WeightVector w{0, 1, 3};
    InterpolationResult r = sample_and_interpolate(conic_family(w), 2, 17);
    if (r.needs_more_samples) return false;
    if (r.poly.degree() != 10) return false;
    if (r.poly != conic_degree_formula()) return false;
    if (r.poly.coefficient(10) != Fraction(1, 3840)) return false;
    FactoredPoly f = extract_small_roots(r.poly, 5);
    return f.roots == std::vector<std::pair<Int, int>>{{-1, 1}, {0, 1}, {1, 1}};
}

bool hyperplane_oracle() {
    for (int n : {2, 3, 4}) {
        WeightVector w = default_plane_weights(n);
        for (int d = 2; d <= 6; ++d)
            if (plane_degree(n - 1, n, d, w) != hyperplane_degree_closed(n, d)) return false;
    }
    WeightVector w2{0, 1, 3};
    for (int d = 2; d <= 10; ++d)
        if (plane_degree(1, 2, d, w2) != 3 * binomial(d + 3, 4)) return false;
    return true;
}

bool weight_independence() {
    std::vector<WeightVector> conic_ws{WeightVector{0, 1, 3},
                                       random_valid_weights(2, validate_conic_weights, 101),
                                       random_valid_weights(2, validate_conic_weights, 102)};
    for (int d : {2, 3, 4, 9}) {
        Int ref = conic_degree(d, conic_ws[0]);
        for (const auto& w : conic_ws)
            if (conic_degree(d, w) != ref) return false;
    }
    const std::vector<std::pair<int, int>> instances{{1, 2}, {1, 3}, {2, 3}, {2, 4}};
    for (auto [k, n] : instances) {
        std::vector<WeightVector> ws{default_plane_weights(n),
                                     random_valid_weights(n, all_distinct, 103),
                                     random_valid_weights(n, all_distinct, 104)};
        for (int d = 2; d <= 4; ++d) {
            Int ref = plane_degree(k, n, d, ws[0]);
            for (const auto& w : ws)
                if (plane_degree(k, n, d, w) != ref) return false;
        }
    }
    return true;
}

bool integrality() {
    // Every Bott sum over the grid must reduce to denominator 1; the
    // engine throws localization_error (with the dump) otherwise, which
    // the harness reports as FAIL.
    for (std::uint64_t seed : {201u, 202u, 203u}) {
        WeightVector w = random_valid_weights(2, validate_conic_weights, seed);
        for (int d = 2; d <= 17; ++d) conic_degree(d, w);
    }
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}}) {
        WeightVector w = default_plane_weights(n);
        for (int d = 2; d <= 4; ++d) plane_degree(k, n, d, w);
    }
    return true;
}

bool structural_invariants() {
    auto pts = enumerate_fixed_points();
    if (pts.size() != 12) return false;
    WeightVector w{0, 1, 3};
    for (int d = 2; d <= 17; ++d)
        for (const auto& p : pts)
            if (static_cast<int>(fiber_weights(p, d, w).size()) != d * (d + 2)) return false;
    for (const auto& p : pts)
        if (tangent_weights(p, w).size() != 5) return false;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}}) {
        auto planes = enumerate_planes(k, n);
        if (Int(planes.size()) != binomial(n + 1, k + 1)) return false;
        WeightVector wp = default_plane_weights(n);
        for (const auto& S : planes) {
            auto datum = plane_localization_datum(S, n, 3, wp);
            if (static_cast<int>(datum.tangent_weights.size()) != (k + 1) * (n - k))
                return false;
        }
    }
    return true;
}

bool lemma_mechanism() {
    WeightVector w{0, 1, 3};
    for (int k = 1; k <= 5; ++k) {
        std::vector<Fraction> values;
        for (int d = 1; d <= k + 12; ++d) {
            auto ws = monomial_weights(d, {0, 1, 2}, w, 0);
            values.push_back(power_sums(ws, k)[static_cast<std::size_t>(k) - 1]);
        }
        for (int pass = 0; pass < k + 3; ++pass) {
            std::vector<Fraction> next;
            for (std::size_t i = 0; i + 1 < values.size(); ++i)
                next.push_back(values[i + 1] - values[i]);
            values = std::move(next);
        }
        for (const auto& v : values)
            if (v != 0) return false;
    }
    // Newton's identities on random multisets.
    std::mt19937_64 rng(57);
    std::uniform_int_distribution<Weight> dist(-15, 15);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Weight> ws(rng() % 30);
        for (auto& x : ws) x = dist(rng);
        const int kmax = 6;
        auto c = chern_from_weights(ws, kmax);
        auto p = power_sums(ws, kmax);
        std::vector<Fraction> e(kmax + 1);
        e[0] = 1;
        for (int i = 1; i <= kmax; ++i) e[static_cast<std::size_t>(i)] = c[i - 1];
        for (int k = 1; k <= kmax; ++k) {
            Fraction rhs = 0;
            for (int i = 1; i <= k; ++i)
                rhs += ((i % 2 == 1) ? 1 : -1) * e[static_cast<std::size_t>(k - i)] * p[i - 1];
            if (Fraction(k) * e[static_cast<std::size_t>(k)] != rhs) return false;
        }
    }
    return true;
}

bool codimension_reporting() {
    if (conic_codimension(2) != 2) return false;
    for (int d = 2; d <= 9; ++d)
        if (conic_codimension(d) != 2 * (d - 1)) return false;
    if (ambient_dimension(2, 2) != 14) return false;
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 6; ++d) {
            Int expected = (n + 1) * binomial(d + n, n) - binomial(d + n - 1, n) - 1;
            if (ambient_dimension(n, d) != expected) return false;
            for (int k = 0; k < n; ++k) {
                Int cod = (Int(n) - k) * (binomial(k + d, d) - (k + 1));
                if (plane_codimension(k, n, d) != cod) return false;
            }
        }
    return true;
}

}  // namespace

int main() {
    criterion(1, "conic degrees pointwise match the closed formula for d=2..17",
              conic_pointwise);
    criterion(2, "interpolation over d=2..17 recovers the degree-10 formula",
              formula_recovery);
    criterion(3, "hyperplane localization matches C(C(d+n,n),n)", hyperplane_oracle);
    criterion(4, "conic and plane degrees are weight independent", weight_independence);
    criterion(5, "every Bott sum over the grid is integral", integrality);
    criterion(6, "fixed point counts, fiber ranks and tangent dimensions",
              structural_invariants);
    criterion(7, "power sums polynomial in d of degree <= k+2; Newton identities",
              lemma_mechanism);
    criterion(8, "codimension and ambient dimension formulas", codimension_reporting);

    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
