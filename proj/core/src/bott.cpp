#include "invloci/bott.hpp"

#include <sstream>

#include "invloci/conic_space.hpp"
#include "invloci/symfun.hpp"

namespace invloci {

namespace {

// Shared summation/validation path for both numerator kinds.
template <typename Numerator>
BottReport bott_sum(std::span<const LocalizationDatum> data, int order, Numerator num_fn) {
    Fraction total = 0;
    BottReport report;
    for (const auto& datum : data) {
        if (static_cast<int>(datum.tangent_weights.size()) != order)
            throw calc_error("tangent weight count != order at " + datum.label);
        Int denom = 1;
        for (Weight t : datum.tangent_weights) denom *= t;
        if (denom == 0)
            throw degenerate_weights_error("zero tangent product at " + datum.label);
        Fraction contrib = num_fn(datum.fiber_weights) / Fraction(denom);
        report.contributions.emplace_back(datum.label, contrib);
        total += contrib;
    }
    if (denominator(total) != 1) {
        std::ostringstream dump;
        dump << "total " << to_string(total);
        for (const auto& [label, c] : report.contributions)
            dump << "; " << label << " -> " << to_string(c);
        throw localization_error(dump.str());
    }
    report.degree = numerator(total);
    return report;
}

}  // namespace

BottReport bott_sum_segre(std::span<const LocalizationDatum> data, int m) {
    return bott_sum(data, m,
                    [m](const std::vector<Weight>& fiber) { return segre_top(fiber, m); });
}

BottReport bott_sum_chern_top(std::span<const LocalizationDatum> data, int g) {
    return bott_sum(data, g,
                    [g](const std::vector<Weight>& fiber) { return elementary_top(fiber, g); });
}

BottReport conic_degree_report(int d, const WeightVector& w) {
    if (d < 2) throw calc_error("conic degree needs d >= 2");
    if (!validate_conic_weights(w))
        throw degenerate_weights_error("pair sums not distinct: " + w.to_string());
    std::vector<LocalizationDatum> data;
    for (const auto& p : enumerate_fixed_points())
        data.push_back({p.label(), tangent_weights(p, w), fiber_weights(p, d, w)});
    BottReport report = bott_sum_segre(data, 5);
    report.weights_used = w;
    report.family = "conic";
    report.d = d;
    report.n = 2;
    return report;
}

Int conic_degree(int d, const WeightVector& w) { return conic_degree_report(d, w).degree; }

Int conic_codimension(int d) { return 2 * (Int(d) - 1); }

Int ambient_dimension(int n, int d) {
    return (n + 1) * binomial(d + n, n) - binomial(d + n - 1, n) - 1;
}

const UniPoly& conic_degree_formula() {
    static const UniPoly poly = [] {
        UniPoly inner({768, 2256, 2468, 1856, 795, 231, 25, 1});
        UniPoly p = UniPoly::linear_root(1) * UniPoly::linear_root(0) * UniPoly::linear_root(-1);
        return (p * inner).scaled(Fraction(1, 3840));
    }();
    return poly;
}

}  // namespace invloci
