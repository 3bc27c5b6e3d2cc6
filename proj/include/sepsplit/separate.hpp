#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "sepsplit/family.hpp"
#include "sepsplit/guards.hpp"

namespace sepsplit {

// A separates B: both A and its complement meet B.
bool separates(const SubsetMask& a, const SubsetMask& b);

// True iff all k matrix columns are distinct; O(mk) bit operations via an
// LSD radix sort of the columns plus one adjacent-comparison pass.
bool is_separating_family(const SetFamily& family);
bool is_separating_matrix(const BinaryMatrix& matrix);

// The ceil(log2 k)-row family whose matrix column j is the binary encoding
// of k-j, row 1 = most significant bit. For k=8 the rows read
// 11110000 / 11001100 / 10101010.
SetFamily build_min_separating(int k);

enum class SeparabilityMode { Brute, Pairs };

// Outcome of a separability test, with the certifying object.
struct SeparationWitness {
    enum class Kind { Separator, Bipartition, None };
    Kind kind = Kind::None;
    std::optional<SubsetMask> separator;                       // Brute mode
    std::optional<std::pair<SubsetMask, SubsetMask>> parts;    // Pairs mode
    std::string reason;                                        // Kind::None

    bool separable() const { return kind != Kind::None; }
};

// Brute mode: exhaustive search for a common separator among subsets of the
// union of the B_i (elements outside the union never matter); returns the
// lexicographically least separator. Pairs mode: every member must be a
// 2-element set; decides bipartiteness of the pair graph. A collection with
// any member of size < 2 is not separable by definition.
SeparationWitness is_separable(const SetCollection& collection,
                               SeparabilityMode mode,
                               const Guards& guards = Guards());

// True iff every separable collection of n pairs is separated by a single
// member. Equivalent to the definition over arbitrary-size members: given a
// separable collection, picking one inside and one outside element of each
// member relative to a fixed separator yields a pair collection whose
// simultaneous separator also separates the original collection.
bool is_n_separating(const SetFamily& family, int n,
                     const Guards& guards = Guards(),
                     SetCollection* counterexample = nullptr);

// F together with all pairwise symmetric differences, deduplicated and with
// the empty set removed. Input must be separating; output is 2-separating.
SetFamily build_2_separating(const SetFamily& family);

// True iff every disjoint P,Q with |P| <= i, |Q| <= j has a member that
// contains one of them and misses the other.
bool is_ij_separating(const SetFamily& family, int i, int j,
                      const Guards& guards = Guards(),
                      std::pair<SubsetMask, SubsetMask>* witness = nullptr);

// Bounds attached to a randomized build. lower evaluates 2^n * log2 k (the
// known asymptotic lower bound's expression with constant 1); upper is
// 2n*log2(k) / (-log2(1 - 2^-n)) + 1. For 2-splitting builds the analogous
// expressions are used (see build_2_splitting_randomized).
struct BoundReport {
    int n = 0;
    int k = 0;
    double lower = 0.0;
    double upper = 0.0;
    std::optional<int> achieved;
};

// Draws uniformly random subsets of [k] (seeded mt19937_64) and keeps those
// that separate some not-yet-covered separable pair collection, until the
// family is n-separating (verify = true, certified via the same enumeration
// as is_n_separating) or the ceiling ceil(upper)+1 is reached (verify =
// false returns the accumulated family uncertified at the ceiling).
// Deterministic given seed. Throws RetryExhausted if verified mode would
// exceed the ceiling.
SetFamily build_n_separating_randomized(int n, int k, std::uint64_t seed,
                                        BoundReport* report = nullptr,
                                        bool verify = true,
                                        const Guards& guards = Guards());

// Minimum Hamming distance over pairs of matrix columns; k >= 2.
int min_pairwise_column_distance(const BinaryMatrix& matrix);

// Monte-Carlo estimate of the probability that one uniform random subset of
// [k] separates a uniform random separable collection of n pairs (pairs are
// redrawn wholesale until the collection is separable). The exact
// probability is >= 2^-n for every separable collection, so phat should sit
// above floor_value minus a few standard errors.
struct ProbFloorEstimate {
    int n = 0;
    int k = 0;
    int samples = 0;
    double phat = 0.0;
    double floor_value = 0.0;  // 2^-n
    double std_error = 0.0;    // sqrt(phat * (1 - phat) / samples)
};

ProbFloorEstimate estimate_separation_probability(int n, int k, int samples,
                                                  std::uint64_t seed);

struct VerdictReport {
    std::string kind;
    bool pass = false;
    std::string details;
};

// The implication lattice between (i,j)-separating and n-separating.
// Positive items are stress-tested on seeded random families; negative
// items construct the known counterexample family explicitly and verify it
// has one property and lacks the other.
enum class ImplicationKind {
    // positive: zero violations expected
    MonotoneIJ,     // (i,j)-separating implies (i',j') for i' <= i, j' <= j
    NNImpliesN,     // (n,n)-separating implies n-separating
    SumImpliesIJ,   // (i+j-1)-separating implies (i,j)-separating
    // negative: explicit counterexample families
    NSepNotNN,      // union of [k]^1..[k]^n minus {B,B'}: n-sep, not (n,n)
    NSepNotIJ,      // P[k] minus supersets of B or B' (i+j >= n+2)
    IJNotNSep,      // [k]^(n-1): (n-1,j)-sep, not n-sep
    NSepNotSuccN,   // [k]^n: n-sep, not (n+1)-sep
    IJNotSuccI,     // [k]^i (i < j): (i,j)-sep, not (i+1,j)-sep
    IJNotSuccJ,     // [k]^(k-j) (k <= 2j): (i,j)-sep, not (i,j+1)-sep
    IJNotInnerBox,  // [k]^i: (i,j)-sep, not (i',j')-sep for i<i'<=j'<j
    InnerBoxNotIJ,  // ([k]^i' minus supersets of B) u [k minus B]^j'
};

struct ImplicationParams {
    int n = 0, i = 0, j = 0;
    int i2 = 0, j2 = 0;  // the (i',j') of the inner-box kinds
    int rounds = 200;    // random families for the positive kinds
    std::uint64_t seed = 1;
};

VerdictReport check_implication(ImplicationKind kind, int k,
                                const ImplicationParams& params,
                                const Guards& guards = Guards());

const char* implication_kind_name(ImplicationKind kind);

}  // namespace sepsplit
