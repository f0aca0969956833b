// Command-line front end: exact degrees of the loci of foliations with an
// invariant k-plane or invariant smooth conic, plus polynomial recovery of
// the degree formula by interpolation.
//
// Exit codes: 0 ok, 2 usage, 3 degenerate weights, 4 needs more samples,
// 1 internal inconsistency.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "invloci/bott.hpp"
#include "invloci/conic_space.hpp"
#include "invloci/grassmann.hpp"
#include "invloci/interpolate.hpp"

namespace {

using nlohmann::json;
using namespace invloci;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitNeedsMoreSamples = 4;

struct CommonOpts {
    std::string weights_csv;
    bool json_out = false;
    std::uint64_t seed = 12345;
};

WeightVector resolve_weights(const CommonOpts& opts, const WeightVector& fallback) {
    if (opts.weights_csv.empty()) return fallback;
    return WeightVector::parse(opts.weights_csv);
}

void emit(const json& report, bool json_out) {
    if (json_out) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : report.items()) {
        std::cout << key << ": ";
        if (value.is_string())
            std::cout << value.get<std::string>();
        else
            std::cout << value.dump();
        std::cout << "\n";
    }
}

json contributions_json(const BottReport& report) {
    json arr = json::array();
    for (const auto& [label, c] : report.contributions)
        arr.push_back({{"label", label}, {"contribution", to_string(c)}});
    return arr;
}

// One seeded re-randomization on degenerate weights; a second failure
// aborts with exit code 3.
template <typename Run, typename Validator>
int with_weight_retry(WeightVector w, int n, const Validator& valid, std::uint64_t seed,
                      const Run& run) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        try {
            return run(w);
        } catch (const degenerate_weights_error& e) {
            std::cerr << "warning: " << e.what() << "\n";
            if (attempt == 1) break;
            w = random_valid_weights(n, valid, seed);
            std::cerr << "retrying with weights " << w.to_string() << "\n";
        }
    }
    std::cerr << "error: degenerate weights after one retry\n";
    return kExitDegenerate;
}

int cmd_plane(int n, int k, int d, const CommonOpts& opts) {
    if (k < 0 || k >= n || n > 8) {
        std::cerr << "error: need 0 <= k < n <= 8\n";
        return kExitUsage;
    }
    if (d < 1) {
        std::cerr << "error: need d >= 1\n";
        return kExitUsage;
    }
    WeightVector w = resolve_weights(opts, default_plane_weights(n));
    return with_weight_retry(w, n, all_distinct, opts.seed, [&](const WeightVector& wv) {
        BottReport report = plane_degree_report(k, n, d, wv);

        // Weight-independence self-check with a second vector.
        WeightVector w2 = random_valid_weights(
            n, [&wv](const WeightVector& c) { return all_distinct(c) && !(c == wv); },
            opts.seed + 1);
        if (plane_degree(k, n, d, w2) != report.degree) {
            std::cerr << "error: weight-independence self-check failed\n";
            return kExitInternal;
        }

        json out;
        out["command"] = "plane";
        out["n"] = n;
        out["k"] = k;
        out["d"] = d;
        out["weights"] = wv.to_string();
        out["degree"] = to_string(report.degree);
        out["codimension"] = to_string(plane_codimension(k, n, d));
        out["ambient_dimension"] = to_string(ambient_dimension(n, d));
        out["self_check"] = "ok";
        if (k == n - 1) {
            Int closed = hyperplane_degree_closed(n, d);
            out["closed_form"] = to_string(closed);
            out["closed_form_match"] = (closed == report.degree);
            if (closed != report.degree) {
                emit(out, opts.json_out);
                std::cerr << "error: closed-form mismatch\n";
                return kExitInternal;
            }
        }
        if (d == 1) out["note"] = "d=1 is outside the generically-injective regime";
        emit(out, opts.json_out);
        return kExitOk;
    });
}

int cmd_conic(int d, const CommonOpts& opts, bool dump_fixed_points) {
    if (d < 2) {
        std::cerr << "error: need d >= 2\n";
        return kExitUsage;
    }
    WeightVector w = resolve_weights(opts, default_conic_weights());
    return with_weight_retry(w, 2, validate_conic_weights, opts.seed, [&](const WeightVector& wv) {
        BottReport report = conic_degree_report(d, wv);
        Fraction closed = conic_degree_formula().eval(d);

        json out;
        out["command"] = "conic";
        out["d"] = d;
        out["weights"] = wv.to_string();
        out["degree"] = to_string(report.degree);
        out["codimension"] = to_string(conic_codimension(d));
        out["ambient_dimension"] = to_string(ambient_dimension(2, d));
        out["closed_form"] = to_string(frac_to_integer(closed));
        out["closed_form_match"] = (closed == Fraction(report.degree));
        if (dump_fixed_points) {
            json pts = json::array();
            for (const auto& p : enumerate_fixed_points()) {
                json entry;
                entry["label"] = p.label();
                entry["tangent_weights"] = tangent_weights(p, wv);
                entry["fiber_weights"] = fiber_weights(p, d, wv);
                pts.push_back(entry);
            }
            out["fixed_points"] = pts;
            out["contributions"] = contributions_json(report);
        }
        emit(out, opts.json_out);
        if (closed != Fraction(report.degree)) {
            std::cerr << "error: closed-form mismatch\n";
            return kExitInternal;
        }
        return kExitOk;
    });
}

int cmd_formula(const std::string& family, int k, int n, int d_min, int d_max,
                const std::string& cache_path, bool stats_out, const CommonOpts& opts) {
    DegreeFamily fam;
    WeightVector w;
    if (family == "conic") {
        w = resolve_weights(opts, default_conic_weights());
        if (!validate_conic_weights(w)) {
            std::cerr << "error: conic weights must have pairwise-distinct pair sums\n";
            return kExitDegenerate;
        }
        fam = conic_family(w);
    } else if (family == "plane" || family == "hyperplane") {
        if (k < 0) k = n - 1;
        if (k >= n || n > 8) {
            std::cerr << "error: need 0 <= k < n <= 8\n";
            return kExitUsage;
        }
        w = resolve_weights(opts, default_plane_weights(n));
        if (!all_distinct(w)) {
            std::cerr << "error: plane weights must be pairwise distinct\n";
            return kExitDegenerate;
        }
        fam = plane_family(k, n, w);
    } else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return kExitUsage;
    }
    if (d_min < fam.d_floor || d_max < d_min || d_max - d_min + 1 < 2) {
        std::cerr << "error: invalid d range [" << d_min << ", " << d_max << "]\n";
        return kExitUsage;
    }

    SampleCache cache(cache_path.empty() ? std::filesystem::path{}
                                         : std::filesystem::path(cache_path));
    if (!cache_path.empty() && std::filesystem::exists(cache_path) && !cache.load())
        std::cerr << "warning: cache file unreadable or corrupt, recomputing\n";

    SampleStats stats;
    InterpolationResult result = sample_and_interpolate(fam, d_min, d_max,
                                                        cache_path.empty() ? nullptr : &cache,
                                                        &stats);
    if (!cache_path.empty() && !cache.save())
        std::cerr << "warning: could not write cache file " << cache_path << "\n";

    FactoredPoly factored = extract_small_roots(result.poly, 10);

    json out;
    out["command"] = "formula";
    out["family"] = fam.name;
    out["weights"] = w.to_string();
    out["d_min"] = d_min;
    out["d_max"] = d_max;
    out["degree_of_polynomial"] = result.poly.degree();
    json coeffs = json::array();
    for (const auto& c : result.poly.coefficients()) coeffs.push_back(to_string(c));
    out["coefficients"] = coeffs;  // constant term first
    out["expanded"] = result.poly.to_string();
    out["factored"] = factored.to_string();
    out["confirmed"] = !result.needs_more_samples;
    if (stats_out) {
        out["stats_computed"] = stats.computed;
        out["stats_cache_hits"] = stats.cache_hits;
    }
    emit(out, opts.json_out);
    if (result.needs_more_samples) {
        std::cerr << "needs more samples: the interpolant used every sample; widen the range\n";
        return kExitNeedsMoreSamples;
    }
    return kExitOk;
}

void print_reference_formulas() {
    std::cout <<
        "Reference closed forms for P^3 (documentation only; this tool has no\n"
        "computation path for them):\n"
        "\n"
        "Invariant smooth conic in P^3, codimension 4(d-1), degree:\n"
        "  4/(8!*3^2) * (d-1)*d * (207d^14 + 2763d^13 + 15447d^12 + 54395d^11\n"
        "    + 114847d^10 + 207891d^9 + 256737d^8 + 225801d^7 + 164937d^6\n"
        "    + 182101d^5 + 38993d^4 + 316221d^3 + 248856d^2 - 118908d - 332640)\n"
        "\n"
        "Invariant quadric surface in P^3, codimension (d-1)(d+5), degree:\n"
        "  1/(9!*(3!)^9) * (d-1)*d*(d+1) * (d^24 + 81d^23 + 3151d^22 + 77949d^21\n"
        "    + 1369333d^20 + 18084843d^19 + 185031133d^18 + 1481854743d^17\n"
        "    + 9251138050d^16 + 44737976160d^15 + 168507293704d^14\n"
        "    + 503603726976d^13 + 1212870415960d^12 + 2353394912904d^11\n"
        "    + 3628929239056d^10 + 4249158105672d^9 + 3232639214668d^8\n"
        "    + 413912636928d^7 - 2874493287072d^6 - 3885321416832d^5\n"
        "    - 1115680433472d^4 + 4477695012864d^3 + 8264265366528d^2\n"
        "    + 8139069775872d + 4334215495680)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact degrees of loci of foliations with invariant planes and conics"};
    app.require_subcommand(0, 1);

    bool show_reference = false;
    app.add_flag("--show-reference-formulas", show_reference,
                 "Print the P^3 reference formulas and exit");

    CommonOpts plane_opts, conic_opts, formula_opts;
    int n = 2, k = 1, d = 2;
    bool dump_fixed_points = false;
    std::string family = "conic", cache_path;
    int d_min = 2, d_max = 17;
    bool stats_out = false;

    auto add_common = [](CLI::App* cmd, CommonOpts& opts) {
        cmd->add_option("--weights", opts.weights_csv, "Torus weights, comma-separated");
        cmd->add_flag("--json", opts.json_out, "Emit a JSON report");
        cmd->add_option("--seed", opts.seed, "Seed for weight re-randomization");
    };

    CLI::App* plane = app.add_subcommand("plane", "Degree of the invariant k-plane locus");
    plane->add_option("-n", n, "Ambient projective dimension")->required();
    plane->add_option("-k", k, "Plane dimension")->required();
    plane->add_option("-d", d, "Foliation degree")->required();
    add_common(plane, plane_opts);

    CLI::App* conic = app.add_subcommand("conic", "Degree of the invariant smooth conic locus");
    conic->add_option("-d", d, "Foliation degree")->required();
    conic->add_flag("--dump-fixed-points", dump_fixed_points,
                    "Include per-fixed-point data in the report");
    add_common(conic, conic_opts);

    CLI::App* formula = app.add_subcommand("formula", "Interpolate the degree formula in d");
    formula->add_option("--family", family, "conic or plane");
    formula->add_option("-n", n, "Ambient dimension (plane family)");
    formula->add_option("-k", k, "Plane dimension (plane family; default n-1)")
        ->default_val(-1);
    formula->add_option("--d-min", d_min, "Smallest sampled degree");
    formula->add_option("--d-max", d_max, "Largest sampled degree");
    formula->add_option("--cache", cache_path, "JSON sample cache path");
    formula->add_flag("--stats", stats_out, "Report sample/cache counters");
    add_common(formula, formula_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (show_reference) {
        print_reference_formulas();
        return kExitOk;
    }

    try {
        if (plane->parsed()) return cmd_plane(n, k, d, plane_opts);
        if (conic->parsed()) return cmd_conic(d, conic_opts, dump_fixed_points);
        if (formula->parsed())
            return cmd_formula(family, k, n, d_min, d_max, cache_path, stats_out, formula_opts);
        std::cerr << app.help();
        return kExitUsage;
    } catch (const degenerate_weights_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const localization_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const calc_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
