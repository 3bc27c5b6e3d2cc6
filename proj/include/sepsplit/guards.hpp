#pragma once

#include <cstdint>
#include <limits>

namespace sepsplit {

// Cost guards for the brute-force operations. Every exhaustive routine
// checks its guard and throws GuardExceeded instead of silently running for
// hours. Defaults keep each documented acceptance run within its stated
// runtime; the CLI flag --unsafe-limits swaps in Guards::unlimited().
struct Guards {
    // is_separable BRUTE mode: search space is 2^|union of the B_i|.
    int separable_union = 24;
    // is_n_separating: cap on (collections considered) * (family size).
    std::uint64_t n_sep_evals = 100'000'000;
    // is_ij_separating: cap on (disjoint (P,Q) pairs) * (family size).
    std::uint64_t ij_sep_evals = 100'000'000;
    // is_splitting_family and count_simultaneous_splitters sweep 2^k masks.
    int splitting_k = 24;
    // is_splittable: search space is 2^|union of the B_i|.
    int splittable_union = 24;
    // is_n_splitting per n (collections of <= n distinct subsets of [k]).
    int n_splitting_k1 = 20;
    int n_splitting_k2 = 10;
    int n_splitting_k3 = 6;
    // is_n_splitting for n >= 4 falls back to the generic evaluation cap.
    std::uint64_t n_splitting_evals = 100'000'000;
    // splitter_volume / volume_lower_bound exact sweeps cost 2^k * 2^k.
    int volume_exact_k = 14;
    // canonical_form minimizes over all 2^m * m! cube symmetries.
    int canonical_m = 5;
    // count_sep canonicalizes every k-subset of Q_m.
    int census_m = 4;
    // exact_min_family_size search scales per property.
    int search_separating_k = 10;
    int search_n_separating2_k = 6;
    int search_splitting_k = 8;
    int search_n_splitting2_k = 6;
    // check_implication materializes counterexample families explicitly.
    int counterexample_k = 12;

    static Guards unlimited() {
        Guards g;
        constexpr int big = std::numeric_limits<int>::max();
        constexpr std::uint64_t huge = std::numeric_limits<std::uint64_t>::max();
        g.separable_union = big;
        g.n_sep_evals = huge;
        g.ij_sep_evals = huge;
        g.splitting_k = big;
        g.splittable_union = big;
        g.n_splitting_k1 = big;
        g.n_splitting_k2 = big;
        g.n_splitting_k3 = big;
        g.n_splitting_evals = huge;
        g.volume_exact_k = big;
        g.canonical_m = big;
        g.census_m = big;
        g.search_separating_k = big;
        g.search_n_separating2_k = big;
        g.search_splitting_k = big;
        g.search_n_splitting2_k = big;
        g.counterexample_k = big;
        return g;
    }
};

}  // namespace sepsplit
