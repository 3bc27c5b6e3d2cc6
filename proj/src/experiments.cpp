#include "sepsplit/experiments.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sepsplit/census.hpp"
#include "sepsplit/errors.hpp"
#include "sepsplit/separate.hpp"
#include "sepsplit/split.hpp"

namespace sepsplit {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Accumulates one experiment's outputs; files are written in one shot at the
// end so a thrown guard error leaves no partial CSV behind.
struct Report {
    std::string csv;
    std::vector<std::string> failures;  // human-readable assertion failures
    std::size_t rows = 0;
    std::size_t checks = 0;

    void row(const std::string& line) {
        csv += line;
        csv += '\n';
        ++rows;
    }
    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

std::vector<int> expand_range(const ExperimentSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw DomainError("experiment '" + spec.command + "' requires param '" +
                          key + "'");
    const auto& vals = it->second;
    std::vector<int> out;
    if (vals.size() == 1) {
        out.push_back(static_cast<int>(vals[0]));
    } else if (vals.size() == 2 && vals[0] <= vals[1]) {
        for (std::int64_t v = vals[0]; v <= vals[1]; ++v)
            out.push_back(static_cast<int>(v));
    } else {
        throw DomainError("param '" + key + "' must be a scalar or [lo, hi] range");
    }
    return out;
}

std::vector<int> int_list(const ExperimentSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw DomainError("experiment '" + spec.command + "' requires param '" +
                          key + "'");
    std::vector<int> out;
    for (std::int64_t v : it->second) out.push_back(static_cast<int>(v));
    if (out.empty()) throw DomainError("param '" + key + "' must be nonempty");
    return out;
}

std::int64_t scalar(const ExperimentSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end() || it->second.size() != 1)
        throw DomainError("experiment '" + spec.command + "' requires scalar param '" +
                          key + "'");
    return it->second[0];
}

void require_seed(const ExperimentSpec& spec) {
    if (!spec.has_seed)
        throw DomainError("experiment '" + spec.command + "' requires a seed");
}

void run_dhm_sweep(const ExperimentSpec& spec, const Guards& guards, Report& rep) {
    rep.row("k,s,t,b,count");
    for (int k : expand_range(spec, "k")) {
        for (int s = 1; s <= k; ++s)
            for (int t = 1; s + t <= k; ++t) {
                std::uint64_t prev = 0;
                for (int b = 0; b <= std::min(s, t); ++b) {
                    auto vol = count_simultaneous_splitters(s, t, b, k, guards);
                    rep.row(std::to_string(k) + "," + std::to_string(s) + "," +
                            std::to_string(t) + "," + std::to_string(b) + "," +
                            std::to_string(vol.count));
                    if (b > 0)
                        rep.check(vol.count >= prev,
                                  "count(s=" + std::to_string(s) +
                                      ",t=" + std::to_string(t) +
                                      ",b=" + std::to_string(b) +
                                      ",k=" + std::to_string(k) + ") decreased");
                    prev = vol.count;
                }
            }
    }
}

void run_census(const ExperimentSpec& spec, const Guards& guards, Report& rep) {
    rep.row("m,k,count");
    for (int m : expand_range(spec, "m")) {
        const int verts = 1 << m;
        std::vector<std::uint64_t> counts(verts + 1);
        for (int k = 0; k <= verts; ++k) {
            counts[k] = count_sep(m, k, guards);
            rep.row(std::to_string(m) + "," + std::to_string(k) + "," +
                    std::to_string(counts[k]));
        }
        for (int k = 0; k <= verts; ++k)
            rep.check(counts[k] == counts[verts - k],
                      "duality failed at m=" + std::to_string(m) +
                          " k=" + std::to_string(k));
        rep.check(counts[verts] == 1,
                  "count_sep(m,2^m) != 1 at m=" + std::to_string(m));
    }
}

void run_nsep_bounds(const ExperimentSpec& spec, const Guards& guards, Report& rep) {
    require_seed(spec);
    const int seeds = static_cast<int>(scalar(spec, "seeds"));
    rep.row("n,k,seed,lower,upper,achieved");
    for (int n : int_list(spec, "n"))
        for (int k : int_list(spec, "k"))
            for (int i = 0; i < seeds; ++i) {
                const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
                BoundReport bound;
                build_n_separating_randomized(n, k, seed, &bound, true, guards);
                rep.row(std::to_string(n) + "," + std::to_string(k) + "," +
                        std::to_string(seed) + "," + fmt_double(bound.lower) + "," +
                        fmt_double(bound.upper) + "," +
                        std::to_string(*bound.achieved));
                rep.check(bound.lower <= bound.upper, "lower > upper");
                rep.check(*bound.achieved <=
                              static_cast<int>(std::ceil(bound.upper)),
                          "achieved " + std::to_string(*bound.achieved) +
                              " exceeds ceiling at n=" + std::to_string(n) +
                              " k=" + std::to_string(k) +
                              " seed=" + std::to_string(seed));
            }
}

void run_split_bounds(const ExperimentSpec& spec, const Guards& guards, Report& rep) {
    require_seed(spec);
    const int seeds = static_cast<int>(scalar(spec, "seeds"));
    rep.row("k,seed,lower,upper,achieved");
    for (int k : int_list(spec, "k"))
        for (int i = 0; i < seeds; ++i) {
            const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
            BoundReport bound;
            build_2_splitting_randomized(k, seed, &bound, true, guards);
            rep.row(std::to_string(k) + "," + std::to_string(seed) + "," +
                    fmt_double(bound.lower) + "," + fmt_double(bound.upper) + "," +
                    std::to_string(*bound.achieved));
            const std::uint64_t floor_sets =
                k <= guards.volume_exact_k
                    ? volume_lower_bound(2, k, guards).ceil()
                    : 0;
            rep.check(*bound.achieved >= static_cast<int>(floor_sets),
                      "achieved below the volume bound at k=" + std::to_string(k) +
                          " seed=" + std::to_string(seed));
            rep.check(*bound.achieved <= static_cast<int>(std::ceil(bound.upper)),
                      "achieved above the ceiling at k=" + std::to_string(k) +
                          " seed=" + std::to_string(seed));
        }
}

void run_prob_floor(const ExperimentSpec& spec, const Guards& guards, Report& rep) {
    (void)guards;
    require_seed(spec);
    const int k = static_cast<int>(scalar(spec, "k"));
    const int samples = static_cast<int>(scalar(spec, "samples"));
    rep.row("n,k,samples,phat,floor,stderr");
    for (int n : int_list(spec, "n")) {
        auto est = estimate_separation_probability(n, k, samples, spec.seed);
        rep.row(std::to_string(n) + "," + std::to_string(k) + "," +
                std::to_string(samples) + "," + fmt_double(est.phat) + "," +
                fmt_double(est.floor_value) + "," + fmt_double(est.std_error));
        rep.check(est.phat >= est.floor_value - 3.0 * est.std_error,
                  "phat below floor - 3 stderr at n=" + std::to_string(n));
    }
}

void run_splittable_fraction(const ExperimentSpec& spec, const Guards& guards,
                             Report& rep) {
    (void)guards;
    rep.row("k,total,splittable,fraction");
    for (int k : expand_range(spec, "k")) {
        if (k < 1 || k > 8)
            throw GuardExceeded("splittable-fraction sweeps 8^k triples; k <= 8");
        const std::uint64_t total = std::uint64_t{1} << k;
        std::uint64_t splittable = 0;
        for (std::uint64_t a = 0; a < total; ++a)
            for (std::uint64_t b = 0; b < total; ++b)
                for (std::uint64_t c = 0; c < total; ++c) {
                    // parity characterization on the Venn sectors
                    const int r12 = std::popcount(a & b & ~c);
                    const int r13 = std::popcount(a & c & ~b);
                    const int r23 = std::popcount(b & c & ~a);
                    const bool pairwise_odd = (r12 & 1) && (r13 & 1) && (r23 & 1);
                    const bool others_empty =
                        (a & b & c) == 0 && (a & ~b & ~c) == 0 &&
                        (b & ~a & ~c) == 0 && (c & ~a & ~b) == 0;
                    if (!(pairwise_odd && others_empty)) ++splittable;
                }
        const std::uint64_t cube = total * total * total;
        std::ostringstream line;
        line << k << "," << cube << "," << splittable << ","
             << fmt_double(static_cast<double>(splittable) /
                           static_cast<double>(cube));
        rep.row(line.str());
        rep.check(2 * splittable >= cube,
                  "fewer than half of the triples splittable at k=" +
                      std::to_string(k));
    }
}

}  // namespace

ExperimentSpec ExperimentSpec::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("experiment spec: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("command") || !doc["command"].is_string())
        throw ParseError("experiment spec needs a \"command\" string", 0);
    ExperimentSpec spec;
    spec.command = doc["command"].get<std::string>();
    if (doc.contains("params")) {
        if (!doc["params"].is_object())
            throw ParseError("\"params\" must be an object", 0);
        for (const auto& [key, value] : doc["params"].items()) {
            std::vector<std::int64_t> vals;
            if (value.is_number_integer()) {
                vals.push_back(value.get<std::int64_t>());
            } else if (value.is_array()) {
                for (const auto& v : value) {
                    if (!v.is_number_integer())
                        throw ParseError("param \"" + key + "\" has a non-integer entry", 0);
                    vals.push_back(v.get<std::int64_t>());
                }
            } else {
                throw ParseError("param \"" + key + "\" must be an integer or array", 0);
            }
            spec.params[key] = std::move(vals);
        }
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer() || doc["seed"].get<std::int64_t>() < 0)
            throw ParseError("\"seed\" must be a nonnegative integer", 0);
        spec.seed = doc["seed"].get<std::uint64_t>();
        spec.has_seed = true;
    }
    if (doc.contains("out")) {
        if (!doc["out"].is_string()) throw ParseError("\"out\" must be a string", 0);
        spec.out_dir = doc["out"].get<std::string>();
    }
    return spec;
}

ExperimentSpec ExperimentSpec::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open experiment spec '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

int run_experiment(const ExperimentSpec& spec, const Guards& guards) {
    namespace fs = std::filesystem;
    const fs::path out_dir = spec.out_dir.empty() ? fs::path(".") : fs::path(spec.out_dir);
    fs::create_directories(out_dir);

    auto write_file = [&](const std::string& name, const std::string& content) {
        std::ofstream out(out_dir / name, std::ios::binary);
        out << content;
    };

    Report rep;
    try {
        if (spec.command == "dhm-sweep") {
            run_dhm_sweep(spec, guards, rep);
        } else if (spec.command == "census") {
            run_census(spec, guards, rep);
        } else if (spec.command == "nsep-bounds") {
            run_nsep_bounds(spec, guards, rep);
        } else if (spec.command == "split-bounds") {
            run_split_bounds(spec, guards, rep);
        } else if (spec.command == "prob-floor") {
            run_prob_floor(spec, guards, rep);
        } else if (spec.command == "splittable-fraction") {
            run_splittable_fraction(spec, guards, rep);
        } else {
            throw DomainError("unknown experiment command '" + spec.command + "'");
        }
    } catch (const std::exception& e) {
        write_file("summary.txt",
                   spec.command + ": ERROR " + std::string(e.what()) + "\n");
        return 2;
    }

    write_file(spec.command + ".csv", rep.csv);
    std::ostringstream summary;
    summary << spec.command << ": " << (rep.failures.empty() ? "PASS" : "FAIL")
            << " (" << rep.rows - 1 << " rows, " << rep.checks << " checks, "
            << rep.failures.size() << " failures)\n";
    for (const auto& f : rep.failures) summary << "  " << f << "\n";
    write_file("summary.txt", summary.str());
    if (!rep.failures.empty()) {
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& f : rep.failures)
            failures.push_back({{"command", spec.command}, {"assertion", f}});
        write_file("failures.json", failures.dump(2) + "\n");
        return 1;
    }
    return 0;
}

}  // namespace sepsplit
