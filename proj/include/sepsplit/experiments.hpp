#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sepsplit/guards.hpp"

namespace sepsplit {

// A named sweep loaded from a JSON spec file:
//   {"command": "<id>", "params": {...}, "seed": <u64>, "out": "<dir>"}
// Commands and their params (all params integral; ranges are written as
// [lo, hi] pairs, e.g. "k": [4, 12], scalars as "k": 8):
//   dhm-sweep           k (range)        splitter counts over all (s,t,b)
//   census              m (range)        count_sep table with duality check
//   nsep-bounds         n, k (lists), seeds   randomized n-separating builds
//   split-bounds        k (list), seeds       randomized 2-splitting builds
//   prob-floor          n (list), k, samples  Monte-Carlo separation floor
//   splittable-fraction k (range)        exhaustive triple census
// Every randomized command requires a seed. Reports (a CSV per command plus
// summary.txt) are byte-identical across runs for identical spec and seed.
struct ExperimentSpec {
    std::string command;
    std::map<std::string, std::vector<std::int64_t>> params;
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string out_dir;

    static ExperimentSpec from_json_text(const std::string& text);
    static ExperimentSpec from_file(const std::string& path);
};

// Runs the sweep, writes report files, returns the process exit code:
// 0 = all embedded assertions pass, 1 = some assertion failed (failures
// recorded in failures.json), 2 = guard or spec error.
int run_experiment(const ExperimentSpec& spec, const Guards& guards = Guards());

}  // namespace sepsplit
