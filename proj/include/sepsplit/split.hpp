#pragma once

#include <cstdint>
#include <optional>

#include "sepsplit/family.hpp"
#include "sepsplit/guards.hpp"
#include "sepsplit/separate.hpp"  // BoundReport, VerdictReport

namespace sepsplit {

// A splits B: |A ∩ B| is floor(|B|/2) or ceil(|B|/2). Both roundings are
// allowed. Every A splits every B with |B| <= 1.
bool splits(const SubsetMask& a, const SubsetMask& b);

// The interval family {A_i : 1 <= i <= ceil(k/2)} with A_i the length
// ceil(k/2) interval starting at i. Size ceil(k/2); a splitting family.
SetFamily build_interval_splitting(int k);

// True iff every B in P[k] is split by some member. 2^k sweep within guard.
// On failure *unsplit (if given) receives the least unsplit mask.
bool is_splitting_family(const SetFamily& family,
                         const Guards& guards = Guards(),
                         SubsetMask* unsplit = nullptr);

// Lexicographically least simultaneous splitter, searched among subsets of
// the union of the B_i (outside elements never change any |A ∩ B_i|), or
// nullopt when the collection is unsplittable.
std::optional<SubsetMask> is_splittable(const SetCollection& collection,
                                        const Guards& guards = Guards());

// Splitter of two sets: D u E u F with D, E, F the lexicographically least
// subsets of B1 ∩ B2, B1 - B2, B2 - B1 of sizes ceil(|B1 ∩ B2|/2),
// floor(|B1 - B2|/2), floor(|B2 - B1|/2).
SubsetMask build_pair_splitter(const SubsetMask& b1, const SubsetMask& b2);

// The seven Venn regions of three sets. Region masks carry sizes and
// elements; they partition B1 u B2 u B3.
struct VennSectors3 {
    SubsetMask r1, r2, r3;        // in exactly one set
    SubsetMask r12, r13, r23;     // in exactly the two named sets
    SubsetMask r123;              // in all three

    explicit VennSectors3(int k)
        : r1(k), r2(k), r3(k), r12(k), r13(k), r23(k), r123(k) {}

    static VennSectors3 of(const SubsetMask& b1, const SubsetMask& b2,
                           const SubsetMask& b3);
};

// False exactly when the three pairwise sectors all have odd size and every
// other sector is empty; true otherwise. Pure popcounts, no search.
bool triple_splittable_parity(const SubsetMask& b1, const SubsetMask& b2,
                              const SubsetMask& b3);

// Constructs a simultaneous splitter by sector halving with per-case
// roundings, or nullopt exactly when triple_splittable_parity is false.
// The output is verified against all three inputs before returning;
// ConstructionBug is the tripwire for an impossible verification failure.
std::optional<SubsetMask> build_triple_splitter(const SubsetMask& b1,
                                                const SubsetMask& b2,
                                                const SubsetMask& b3);

// True iff every splittable collection of at most n subsets of [k] has a
// simultaneous splitter in the family. Splittability is decided by "always"
// for n <= 2, by the parity characterization for triples, and by the
// brute-force search for larger collections.
bool is_n_splitting(const SetFamily& family, int n,
                    const Guards& guards = Guards(),
                    SetCollection* counterexample = nullptr);

// Count of subsets of [k] simultaneously splitting fixed canonical sets
// S = {1..s}, T = {s-b+1 .. s-b+t}. The count depends only on (s,t,b,k),
// not on the representatives; invariance under relabeling is a tested
// property.
struct VolumeReport {
    int s = 0, t = 0, b = 0, k = 0;
    std::uint64_t count = 0;
};

VolumeReport count_simultaneous_splitters(int s, int t, int b, int k,
                                          const Guards& guards = Guards());

// Number of ordered n-collections simultaneously split by A. An ordered
// tuple is split iff each coordinate is split, so this equals the n = 1
// volume raised to the n-th power; n = 1 sweeps the 2^k subsets.
std::uint64_t splitter_volume(const SubsetMask& a, int n,
                              const Guards& guards = Guards());

// Exact nonnegative rational.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::uint64_t ceil() const { return (num + den - 1) / den; }
    bool operator<=(const Rational& o) const;
};

// The volume-method bound N/v: any n-splitting family has at least
// ceil(N/v) members. Exact mode takes v = max over A of splitter_volume and
// N = (2^k)^n for n <= 2, N = (2^k)^3 / 2 for n = 3 (at least half of all
// ordered triples are splittable, by the injection sending an unsplittable
// triple to its three pairwise sectors).
Rational volume_lower_bound(int n, int k, const Guards& guards = Guards());

// Empirical constant for the 2-splitting ceiling: the minimum over
// t <= 20 of sqrt(t) * (exact probability that a uniform random subset
// splits a fixed t-set). The minimum sits at t = 2 and equals sqrt(2)/2;
// the probability that a random subset splits a t-set is then at least
// c / sqrt(t), and c^2 / k bounds the simultaneous-split probability below.
// Only the unverified-mode ceiling depends on this value.
inline constexpr double kSplitProbConstant = 0.7071067811865476;

// Seeded uniform subsets kept while they split some uncovered splittable
// pair, until verified 2-splitting (verify = true) or until the ceiling
// ceil(2k / (-log2(1 - c^2/k))) + 1 (verify = false). Deterministic given
// seed; RetryExhausted if verified mode would exceed the ceiling.
SetFamily build_2_splitting_randomized(int k, std::uint64_t seed,
                                       BoundReport* report = nullptr,
                                       bool verify = true,
                                       const Guards& guards = Guards());

// Exhaustively verifies the splitter-counting identities on the canonical
// configurations for every valid b at the given sizes:
//   s, t even:  4|A| = |B| and |B|/4 <= |C|
//     where A splits (S,T), B splits (S-{x}, T-{y}),
//     C splits (S, (T-{y}) u {x}), x in S-T, y in T-S;
//   s odd, t even:  |A| = 2|A'|, |A'| <= |C'|, |C| = 2|C'|
//     where A' splits (S u {z}, T), C' splits (S u {z}, (T u {x}) - {y}),
//     C splits (S, (T u {x}) - {y}), z outside S u T (the check requires
//     s + t - b < k so a spare z exists; enlarging to [k+1] is the general
//     mechanism otherwise).
VerdictReport counting_identities_check(int s, int t, int k,
                                        const Guards& guards = Guards());

}  // namespace sepsplit
