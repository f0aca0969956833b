#include "invloci/interpolate.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "invloci/bott.hpp"
#include "invloci/grassmann.hpp"

namespace invloci {

InterpolationResult lagrange(const std::vector<std::pair<Int, Int>>& samples) {
    const std::size_t s = samples.size();
    if (s < 2) throw sample_error("need at least 2 samples");
    {
        std::set<Int> seen;
        for (const auto& [x, _] : samples)
            if (!seen.insert(x).second)
                throw sample_error("duplicate sample abscissa " + to_string(x));
    }
    for (std::size_t j = 2; j <= s; ++j) {
        // Interpolant through the first j samples.
        UniPoly g;
        for (std::size_t i = 0; i < j; ++i) {
            UniPoly basis = UniPoly::constant(1);
            Fraction denom = 1;
            for (std::size_t l = 0; l < j; ++l) {
                if (l == i) continue;
                basis = basis * UniPoly::linear_root(Fraction(samples[l].first));
                denom *= Fraction(samples[i].first - samples[l].first);
            }
            g = g + basis.scaled(Fraction(samples[i].second) / denom);
        }
        bool fits_all = true;
        for (const auto& [x, v] : samples)
            if (g.eval(Fraction(x)) != v) {
                fits_all = false;
                break;
            }
        if (fits_all)
            return {g, g.degree() == static_cast<int>(s) - 1};
    }
    // The full-size interpolant always fits; unreachable.
    throw sample_error("interpolation failed");
}

UniPoly FactoredPoly::reassemble() const {
    UniPoly p = cofactor;
    for (const auto& [r, mult] : roots)
        for (int i = 0; i < mult; ++i) p = p * UniPoly::linear_root(Fraction(r));
    return p.scaled(content);
}

std::string FactoredPoly::to_string(const std::string& var) const {
    std::ostringstream out;
    out << invloci::to_string(content);
    for (const auto& [r, mult] : roots) {
        out << " * (" << UniPoly::linear_root(Fraction(r)).to_string(var) << ")";
        if (mult > 1) out << "^" << mult;
    }
    if (!(cofactor.degree() == 0 && cofactor.coefficient(0) == 1))
        out << " * (" << cofactor.to_string(var) << ")";
    return out.str();
}

FactoredPoly extract_small_roots(const UniPoly& p, long bound) {
    if (p.is_zero()) throw calc_error("cannot factor the zero polynomial");
    FactoredPoly f;
    UniPoly q = p;
    for (long r = -bound; r <= bound; ++r) {
        int mult = 0;
        while (q.degree() >= 1 && q.eval(Fraction(r)) == 0) {
            q = q.divide_by_linear(Fraction(r));
            ++mult;
        }
        if (mult > 0) f.roots.emplace_back(r, mult);
    }
    // Split q into a rational content and a primitive integer cofactor
    // with positive leading coefficient.
    Int lcm_den = 1;
    for (const auto& c : q.coefficients())
        lcm_den = lcm_den / gcd(lcm_den, denominator(c)) * denominator(c);
    Int gcd_num = 0;
    for (const auto& c : q.coefficients()) gcd_num = gcd(gcd_num, numerator(Fraction(c * lcm_den)));
    if (q.leading() < 0) gcd_num = -gcd_num;
    f.content = Fraction(gcd_num, lcm_den);
    f.cofactor = q.scaled(frac_inv(f.content));
    return f;
}

bool SampleCache::load() {
    entries_.clear();
    if (path_.empty()) return false;
    std::ifstream in(path_);
    if (!in) return false;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (!j.is_object()) {
        return false;
    }
    try {
        for (auto& [key, value] : j.items()) {
            if (!value.is_string()) throw std::runtime_error("non-string cache entry");
            entries_[key] = Int(value.get<std::string>());
        }
    } catch (const std::exception&) {
        entries_.clear();
        return false;
    }
    return true;
}

bool SampleCache::save() const {
    if (path_.empty()) return false;
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : entries_) j[key] = value.str();
    std::ofstream out(path_);
    if (!out) return false;
    out << j.dump(1) << "\n";
    return static_cast<bool>(out);
}

const Int* SampleCache::lookup(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void SampleCache::store(const std::string& key, const Int& value) { entries_[key] = value; }

DegreeFamily conic_family(const WeightVector& w) {
    return {"conic", w.to_string(), [w](int d) { return conic_degree(d, w); }, 2};
}

DegreeFamily plane_family(int k, int n, const WeightVector& w) {
    return {"plane-k" + std::to_string(k) + "-n" + std::to_string(n), w.to_string(),
            [k, n, w](int d) { return plane_degree(k, n, d, w); }, 1};
}

InterpolationResult sample_and_interpolate(const DegreeFamily& family, int d_min, int d_max,
                                           SampleCache* cache, SampleStats* stats) {
    if (d_max - d_min + 1 < 2) throw sample_error("range must contain at least 2 values of d");
    if (d_min < family.d_floor)
        throw sample_error("d_min below " + std::to_string(family.d_floor) + " for family " +
                           family.name);
    std::vector<std::pair<Int, Int>> samples;
    for (int d = d_min; d <= d_max; ++d) {
        const std::string key = family.cache_key(d);
        if (cache != nullptr) {
            if (const Int* hit = cache->lookup(key)) {
                if (stats != nullptr) ++stats->cache_hits;
                samples.emplace_back(d, *hit);
                continue;
            }
        }
        Int value = family.eval(d);
        if (stats != nullptr) ++stats->computed;
        if (cache != nullptr) cache->store(key, value);
        samples.emplace_back(d, value);
    }
    return lagrange(samples);
}

}  // namespace invloci
