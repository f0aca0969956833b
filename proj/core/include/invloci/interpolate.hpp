#ifndef INVLOCI_INTERPOLATE_HPP
#define INVLOCI_INTERPOLATE_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "invloci/polynomial.hpp"
#include "invloci/weights.hpp"

namespace invloci {

/// Interpolation outcome. `needs_more_samples` is a first-class result:
/// the interpolant fits every sample but used all of them, so no spare
/// point confirmed it. Callers extend the range and retry.
struct InterpolationResult {
    UniPoly poly;
    bool needs_more_samples = false;
};

// Exact Lagrange interpolation with early exit: for j = 2..s build the
// interpolant through the first j samples and return the first one that
// fits ALL samples. Sample abscissae must be pairwise distinct, >= 2 of
// them.
InterpolationResult lagrange(const std::vector<std::pair<Int, Int>>& samples);

/// p = content * prod (d - r_i)^{m_i} * cofactor, where every integer
/// root r in [-bound, bound] has been divided out to full multiplicity
/// and the cofactor has coprime integer coefficients with positive
/// leading coefficient.
struct FactoredPoly {
    Fraction content;
    std::vector<std::pair<Int, int>> roots;  // (root, multiplicity), ascending
    UniPoly cofactor;

    UniPoly reassemble() const;
    std::string to_string(const std::string& var = "d") const;
};

FactoredPoly extract_small_roots(const UniPoly& p, long bound);

/// Exact-sample cache backed by a JSON file: map from "family/d/w0,w1,.."
/// to the decimal value. Load failures clear the cache and report false;
/// they are never fatal.
class SampleCache {
public:
    SampleCache() = default;
    explicit SampleCache(std::filesystem::path path) : path_(std::move(path)) {}

    bool load();        // false if missing or corrupt
    bool save() const;  // false on write failure

    const Int* lookup(const std::string& key) const;
    void store(const std::string& key, const Int& value);
    std::size_t size() const { return entries_.size(); }

private:
    std::filesystem::path path_;
    std::map<std::string, Int> entries_;
};

/// A family of exact degree counts indexed by d, plus the cache-key parts.
struct DegreeFamily {
    std::string name;                 // "conic", "plane-k1-n2", ...
    std::string weight_key;           // "0,1,3"
    std::function<Int(int)> eval;     // exact degree at d
    int d_floor = 2;                  // smallest meaningful d

    std::string cache_key(int d) const {
        return name + "/" + std::to_string(d) + "/" + weight_key;
    }
};

DegreeFamily conic_family(const WeightVector& w);
DegreeFamily plane_family(int k, int n, const WeightVector& w);

struct SampleStats {
    int computed = 0;
    int cache_hits = 0;
};

// Runs the family at each d in [d_min, d_max] (through the cache when one
// is supplied) and interpolates. Stats, when requested, count actual
// localization runs versus cache hits.
InterpolationResult sample_and_interpolate(const DegreeFamily& family, int d_min, int d_max,
                                           SampleCache* cache = nullptr,
                                           SampleStats* stats = nullptr);

}  // namespace invloci

#endif
