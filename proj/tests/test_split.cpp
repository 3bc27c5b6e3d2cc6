#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sepsplit/family.hpp"
#include "sepsplit/rng.hpp"
#include "sepsplit/split.hpp"

using namespace sepsplit;

namespace {

// ---------------------------------------------------------------------------
// Brute-force oracles straight from the definitions.
// ---------------------------------------------------------------------------

bool oracle_splits(std::uint64_t a, std::uint64_t b) {
    int size = std::popcount(b);
    int is = std::popcount(a & b);
    return is == size / 2 || is == (size + 1) / 2;
}

// exists A <= [k] splitting every mask in the collection
bool oracle_splittable(const std::vector<std::uint64_t>& masks, int k) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
        bool all = true;
        for (std::uint64_t b : masks)
            if (!oracle_splits(a, b)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

bool oracle_splitting_family(const SetFamily& f) {
    const int k = f.k();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
        bool hit = false;
        for (const auto& a : f)
            if (oracle_splits(a.low_bits(), b)) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

// definition-level n-splitting: every splittable collection of <= n distinct
// subsets has a member splitting all of it; k small
bool oracle_n_splitting(const SetFamily& f, int n) {
    const int k = f.k();
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<std::uint64_t> masks;
    auto rec = [&](auto&& self, std::uint64_t start, int depth) -> bool {
        for (std::uint64_t b = start; b < total; ++b) {
            masks.push_back(b);
            if (oracle_splittable(masks, k)) {
                bool hit = false;
                for (const auto& a : f) {
                    bool all = true;
                    for (std::uint64_t m : masks)
                        if (!oracle_splits(a.low_bits(), m)) { all = false; break; }
                    if (all) { hit = true; break; }
                }
                if (!hit) { masks.pop_back(); return false; }
            }
            if (depth + 1 < n && !self(self, b + 1, depth + 1)) {
                masks.pop_back();
                return false;
            }
            masks.pop_back();
        }
        return true;
    };
    return rec(rec, 0, 0);
}

// splitter count for arbitrary (not canonical) representative sets
std::uint64_t brute_pair_splitter_count(std::uint64_t s, std::uint64_t t, int k) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a)
        if (oracle_splits(a, s) && oracle_splits(a, t)) ++count;
    return count;
}

SetFamily random_family(std::mt19937_64& rng, int k, int members) {
    SetFamily f(k);
    for (int i = 0; i < members; ++i) f.insert(random_subset(rng, k));
    return f;
}

}  // namespace

TEST_CASE("splits matches its definition") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 400; ++t) {
        int k = 1 + static_cast<int>(uniform_below(rng, 16));
        SubsetMask a = random_subset(rng, k);
        SubsetMask b = random_subset(rng, k);
        CHECK(splits(a, b) == oracle_splits(a.low_bits(), b.low_bits()));
    }
    // everything splits the empty set and singletons
    SubsetMask a = SubsetMask::of(4, {2, 3});
    CHECK(splits(a, SubsetMask(4)));
    CHECK(splits(a, SubsetMask::of(4, {1})));
    CHECK(splits(a, SubsetMask::of(4, {2})));
    // even set: exactly half passes, anything else fails
    CHECK(splits(a, SubsetMask::of(4, {1, 2, 3, 4})));
    CHECK_FALSE(splits(SubsetMask::of(4, {2, 3, 4}), SubsetMask::of(4, {1, 2, 3, 4})));
    // odd set: either rounding passes
    CHECK(splits(SubsetMask::of(4, {1}), SubsetMask::of(4, {1, 2, 3})));
    CHECK(splits(SubsetMask::of(4, {1, 2}), SubsetMask::of(4, {1, 2, 3})));
    CHECK_FALSE(splits(SubsetMask::of(4, {1, 2, 3}), SubsetMask::of(4, {1, 2, 3})));
    CHECK_THROWS_AS(splits(SubsetMask(3), SubsetMask(4)), DimensionError);
}

TEST_CASE("interval splitting family") {
    SetFamily f6 = build_interval_splitting(6);
    CHECK(f6.size() == 3);
    CHECK(f6[0] == SubsetMask::of(6, {1, 2, 3}));
    CHECK(f6[1] == SubsetMask::of(6, {2, 3, 4}));
    CHECK(f6[2] == SubsetMask::of(6, {3, 4, 5}));

    for (int k : {1, 2, 3, 5, 6, 8, 11, 16}) {
        SetFamily f = build_interval_splitting(k);
        CHECK(f.size() == (k + 1) / 2);
        CHECK(is_splitting_family(f));
    }
    CHECK_THROWS_AS(build_interval_splitting(0), DomainError);
}

TEST_CASE("splitting-family recognition against the oracle") {
    std::mt19937_64 rng(32);
    int positives = 0;
    for (int t = 0; t < 150; ++t) {
        int k = 1 + static_cast<int>(uniform_below(rng, 8));
        SetFamily f = random_family(rng, k, 1 + static_cast<int>(uniform_below(rng, 5)));
        bool got = is_splitting_family(f);
        CHECK(got == oracle_splitting_family(f));
        positives += got;
    }
    CHECK(positives > 0);

    // the reported witness really is unsplit, and is the least such mask
    SetFamily just_empty(2);
    just_empty.insert(SubsetMask(2));
    SubsetMask unsplit(2);
    CHECK_FALSE(is_splitting_family(just_empty, Guards(), &unsplit));
    CHECK(unsplit == SubsetMask::of(2, {1, 2}));  // masks {},{1},{2} are split

    // the empty family splits nothing but the small sets it has no members
    // for; it fails already at the empty set
    CHECK_FALSE(is_splitting_family(SetFamily(1), Guards(), &unsplit));
}

TEST_CASE("is_splittable returns the least splitter") {
    // single 3-set: {1} already splits it
    SetCollection c1({SubsetMask::of(5, {1, 2, 3})});
    CHECK(is_splittable(c1).value() == SubsetMask::of(5, {1}));

    // the empty set splits every collection of sets of size <= 1
    SetCollection c2({SubsetMask::of(3, {2}), SubsetMask(3)});
    CHECK(is_splittable(c2).value() == SubsetMask(3));

    // the classical unsplittable triangle
    SetCollection tri({SubsetMask::of(3, {1, 2}), SubsetMask::of(3, {2, 3}),
                       SubsetMask::of(3, {1, 3})});
    CHECK_FALSE(is_splittable(tri).has_value());

    // splitters ignore elements outside the union: least splitter of two
    // disjoint pairs picks from their own elements
    SetCollection c3({SubsetMask::of(9, {4, 5}), SubsetMask::of(9, {7, 8})});
    CHECK(is_splittable(c3).value() == SubsetMask::of(9, {4, 7}));

    // cross-check the decision against the oracle on random collections
    std::mt19937_64 rng(33);
    for (int t = 0; t < 120; ++t) {
        int k = 2 + static_cast<int>(uniform_below(rng, 4));
        int n = 1 + static_cast<int>(uniform_below(rng, 4));
        std::vector<SubsetMask> sets;
        std::vector<std::uint64_t> masks;
        for (int i = 0; i < n; ++i) {
            SubsetMask b = random_subset(rng, k);
            sets.push_back(b);
            masks.push_back(b.low_bits());
        }
        SetCollection c(sets);
        auto got = is_splittable(c);
        CHECK(got.has_value() == oracle_splittable(masks, k));
        if (got.has_value())
            for (const auto& b : sets) CHECK(splits(*got, b));
    }
}

TEST_CASE("pair splitter construction") {
    // disjoint pairs, overlapping sets, nested sets: always verified
    SubsetMask s = build_pair_splitter(SubsetMask::of(6, {1, 2}),
                                       SubsetMask::of(6, {3, 4}));
    CHECK(splits(s, SubsetMask::of(6, {1, 2})));
    CHECK(splits(s, SubsetMask::of(6, {3, 4})));

    std::mt19937_64 rng(34);
    for (int t = 0; t < 300; ++t) {
        int k = 1 + static_cast<int>(uniform_below(rng, 40));
        SubsetMask b1 = random_subset(rng, k);
        SubsetMask b2 = random_subset(rng, k);
        SubsetMask a = build_pair_splitter(b1, b2);
        CHECK(splits(a, b1));
        CHECK(splits(a, b2));
        // the construction stays inside B1 u B2
        CHECK(a.subset_of(b1 | b2));
    }
}

TEST_CASE("triple parity rule equals brute-force splittability") {
    // the known unsplittable configuration and a fixed splittable one
    CHECK_FALSE(triple_splittable_parity(SubsetMask::of(3, {1, 2}),
                                         SubsetMask::of(3, {2, 3}),
                                         SubsetMask::of(3, {1, 3})));
    CHECK(triple_splittable_parity(SubsetMask::of(6, {1, 2}),
                                   SubsetMask::of(6, {3, 4}),
                                   SubsetMask::of(6, {5, 6})));

    // exhaustive over [4]: all 4096 ordered triples
    for (std::uint64_t m1 = 0; m1 < 16; ++m1)
        for (std::uint64_t m2 = 0; m2 < 16; ++m2)
            for (std::uint64_t m3 = 0; m3 < 16; ++m3) {
                SubsetMask b1 = SubsetMask::from_bits(4, m1);
                SubsetMask b2 = SubsetMask::from_bits(4, m2);
                SubsetMask b3 = SubsetMask::from_bits(4, m3);
                bool parity = triple_splittable_parity(b1, b2, b3);
                bool brute = oracle_splittable({m1, m2, m3}, 4);
                CHECK(parity == brute);
            }
}

TEST_CASE("triple splitter construction is exhaustive over [4] and random on [8]") {
    auto check_triple = [](const SubsetMask& b1, const SubsetMask& b2,
                           const SubsetMask& b3) {
        auto a = build_triple_splitter(b1, b2, b3);  // verifies internally
        CHECK(a.has_value() == triple_splittable_parity(b1, b2, b3));
        if (a.has_value()) {
            CHECK(splits(*a, b1));
            CHECK(splits(*a, b2));
            CHECK(splits(*a, b3));
        }
    };

    for (std::uint64_t m1 = 0; m1 < 16; ++m1)
        for (std::uint64_t m2 = 0; m2 < 16; ++m2)
            for (std::uint64_t m3 = 0; m3 < 16; ++m3)
                check_triple(SubsetMask::from_bits(4, m1),
                             SubsetMask::from_bits(4, m2),
                             SubsetMask::from_bits(4, m3));

    std::mt19937_64 rng(35);
    for (int t = 0; t < 20000; ++t)
        check_triple(random_subset(rng, 8), random_subset(rng, 8),
                     random_subset(rng, 8));

    // disjoint pairs: each sector is rounded down to its low half
    CHECK(build_triple_splitter(SubsetMask::of(6, {1, 2}),
                                SubsetMask::of(6, {3, 4}),
                                SubsetMask::of(6, {5, 6}))
              .value() == SubsetMask::of(6, {1, 3, 5}));
}

TEST_CASE("Venn sectors partition the union") {
    std::mt19937_64 rng(36);
    for (int t = 0; t < 100; ++t) {
        int k = 1 + static_cast<int>(uniform_below(rng, 20));
        SubsetMask b1 = random_subset(rng, k);
        SubsetMask b2 = random_subset(rng, k);
        SubsetMask b3 = random_subset(rng, k);
        VennSectors3 v = VennSectors3::of(b1, b2, b3);
        std::vector<SubsetMask> parts = {v.r1, v.r2, v.r3, v.r12,
                                         v.r13, v.r23, v.r123};
        int total = 0;
        SubsetMask u(k);
        for (const auto& p : parts) {
            total += p.size();
            u = u | p;
        }
        CHECK(u == (b1 | b2 | b3));
        CHECK(total == (b1 | b2 | b3).size());  // pairwise disjoint
        CHECK(v.r123 == (b1 & b2 & b3));
        CHECK(v.r12 == ((b1 & b2) - b3));
        CHECK(v.r1 == ((b1 - b2) - b3));
    }
}

TEST_CASE("n-splitting recognition") {
    // n = 1 coincides with plain splitting-family recognition
    std::mt19937_64 rng(37);
    for (int t = 0; t < 80; ++t) {
        int k = 1 + static_cast<int>(uniform_below(rng, 7));
        SetFamily f = random_family(rng, k, 1 + static_cast<int>(uniform_below(rng, 6)));
        CHECK(is_n_splitting(f, 1) == is_splitting_family(f));
    }

    // the interval family splits singly but not doubly at k = 6
    SetFamily f6 = build_interval_splitting(6);
    CHECK(is_n_splitting(f6, 1));
    SetCollection cex({SubsetMask(6)});
    CHECK_FALSE(is_n_splitting(f6, 2, Guards(), &cex));
    CHECK(cex.n() <= 2);
    {
        std::vector<std::uint64_t> masks;
        for (const auto& b : cex.sets()) masks.push_back(b.low_bits());
        CHECK(oracle_splittable(masks, 6));
        for (const auto& a : f6) {
            bool all = true;
            for (const auto& b : cex.sets())
                if (!splits(a, b)) { all = false; break; }
            CHECK_FALSE(all);
        }
    }

    CHECK_THROWS_AS(is_n_splitting(f6, 0), DomainError);
}

TEST_CASE("n-splitting agrees with the definition-level oracle") {
    std::mt19937_64 rng(38);
    int positives2 = 0;
    for (int t = 0; t < 40; ++t) {
        SetFamily f = random_family(rng, 4, 2 + static_cast<int>(uniform_below(rng, 7)));
        bool got = is_n_splitting(f, 2);
        CHECK(got == oracle_n_splitting(f, 2));
        positives2 += got;
    }
    CHECK(positives2 > 0);

    for (int t = 0; t < 10; ++t) {
        SetFamily f = random_family(rng, 4, 3 + static_cast<int>(uniform_below(rng, 8)));
        CHECK(is_n_splitting(f, 3) == oracle_n_splitting(f, 3));
    }

    // power set of [4] is n-splitting for every n that has splittable inputs
    SetFamily everything = all_subsets_family(4);
    CHECK(is_n_splitting(everything, 2));
    CHECK(is_n_splitting(everything, 3));
    CHECK(is_n_splitting(everything, 4));
}

TEST_CASE("simultaneous splitter counts: frozen values and invariance") {
    CHECK(count_simultaneous_splitters(2, 2, 0, 4).count == 4);
    CHECK(count_simultaneous_splitters(2, 2, 1, 4).count == 4);
    CHECK(count_simultaneous_splitters(2, 2, 2, 4).count == 8);

    // identity ingredients at (s,t,b,k) = (2,2,1,6) and the even identity
    CHECK(count_simultaneous_splitters(2, 2, 1, 6).count == 16);
    CHECK(count_simultaneous_splitters(1, 1, 1, 6).count == 64);
    CHECK(count_simultaneous_splitters(2, 2, 2, 6).count == 32);
    // (4,4,2,8) with its two derived configurations
    CHECK(count_simultaneous_splitters(4, 4, 2, 8).count == 40);
    CHECK(count_simultaneous_splitters(3, 3, 2, 8).count == 160);
    CHECK(count_simultaneous_splitters(4, 4, 3, 8).count == 48);
    // mixed parity chain at (3,2,1,6)
    CHECK(count_simultaneous_splitters(3, 2, 1, 6).count == 24);
    CHECK(count_simultaneous_splitters(4, 2, 1, 6).count == 12);
    CHECK(count_simultaneous_splitters(4, 2, 2, 6).count == 16);
    CHECK(count_simultaneous_splitters(3, 2, 2, 6).count == 32);

    // the count only depends on (s,t,b,k): compare against brute counts over
    // random representatives with the prescribed overlap
    std::mt19937_64 rng(39);
    for (int t = 0; t < 60; ++t) {
        int k = 2 + static_cast<int>(uniform_below(rng, 7));
        int s = 1 + static_cast<int>(uniform_below(rng, k));
        int tt = 1 + static_cast<int>(uniform_below(rng, k));
        int maxb = std::min(s, tt);
        int b = static_cast<int>(uniform_below(rng, maxb + 1));
        if (s + tt - b > k) continue;
        // random placement: pick s + tt - b distinct elements, overlap first
        std::vector<int> perm(k);
        for (int i = 0; i < k; ++i) perm[i] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::uint64_t sm = 0, tm = 0;
        int idx = 0;
        for (int i = 0; i < b; ++i, ++idx) {
            sm |= std::uint64_t{1} << (perm[idx] - 1);
            tm |= std::uint64_t{1} << (perm[idx] - 1);
        }
        for (int i = 0; i < s - b; ++i, ++idx) sm |= std::uint64_t{1} << (perm[idx] - 1);
        for (int i = 0; i < tt - b; ++i, ++idx) tm |= std::uint64_t{1} << (perm[idx] - 1);
        CHECK(count_simultaneous_splitters(s, tt, b, k).count ==
              brute_pair_splitter_count(sm, tm, k));
    }

    CHECK_THROWS_AS(count_simultaneous_splitters(0, 1, 0, 4), DomainError);
    CHECK_THROWS_AS(count_simultaneous_splitters(2, 2, 3, 6), DomainError);
    CHECK_THROWS_AS(count_simultaneous_splitters(4, 4, 0, 6), DomainError);
}

TEST_CASE("splitter volume is a power of the single-set volume") {
    SubsetMask a = SubsetMask::of(2, {1});
    CHECK(splitter_volume(a, 1) == 4);
    CHECK(splitter_volume(a, 2) == 16);
    CHECK(splitter_volume(a, 3) == 64);
    CHECK(splitter_volume(a, 4) == 256);
    CHECK_THROWS_AS(splitter_volume(a, 5), DomainError);
    CHECK_THROWS_AS(splitter_volume(a, 0), DomainError);

    // volume depends only on |A|
    for (int k : {4, 6}) {
        std::vector<std::uint64_t> by_size(k + 1, 0);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            SubsetMask s = SubsetMask::from_bits(k, m);
            std::uint64_t v = splitter_volume(s, 1);
            int size = s.size();
            if (by_size[size] == 0)
                by_size[size] = v;
            else
                CHECK(by_size[size] == v);
        }
    }
}

TEST_CASE("volume lower bound: frozen ratios, monotone growth") {
    struct Expect { int k; std::uint64_t num, den; };
    // N/v for n = 1 reduces to 8/7, 32/25, 128/91, 32/21, 1024/627
    std::vector<Expect> table = {
        {4, 8, 7}, {6, 32, 25}, {8, 128, 91}, {10, 32, 21}, {12, 1024, 627}};
    double prev = 0.0;
    for (const auto& e : table) {
        Rational r = volume_lower_bound(1, e.k);
        CHECK(r.num * e.den == r.den * e.num);
        CHECK(r.ceil() == 2);
        CHECK(r.value() > prev);
        prev = r.value();
    }

    // maximum volume sits at |A| = k/2 for even k, and never beats 3*C(k,k/2)
    for (int k : {4, 6, 8, 10, 12}) {
        std::uint64_t best = 0;
        int best_size = -1;
        for (int size = 0; size <= k; ++size) {
            SubsetMask a(k);
            for (int e = 1; e <= size; ++e) a.add(e);
            std::uint64_t v = splitter_volume(a, 1);
            if (v > best) { best = v; best_size = size; }
        }
        CHECK(best_size == k / 2);
        std::uint64_t central = 1;
        for (int i = 0; i < k / 2; ++i)
            central = central * (k - i) / (i + 1);
        CHECK(best <= 3 * central);
    }

    // the n = 2 and n = 3 numerators follow the task counts
    Rational r2 = volume_lower_bound(2, 6);
    Rational r3 = volume_lower_bound(3, 6);
    CHECK(r2.num == std::uint64_t{1} << 12);
    CHECK(r3.num == (std::uint64_t{1} << 18) / 2);
    CHECK(r2.den == 50ull * 50);
    CHECK(r3.den == 50ull * 50 * 50);

    CHECK_THROWS_AS(volume_lower_bound(4, 6), DomainError);
    CHECK_THROWS_AS(volume_lower_bound(1, 40), GuardExceeded);
}

TEST_CASE("rational comparison uses exact arithmetic") {
    // equal cross products and a near tie that doubles would misorder
    Rational a{6004799503160661ull, 18014398509481984ull};  // just under 1/3
    Rational b{1, 3};
    CHECK(a <= b);
    CHECK_FALSE(b <= a);
    CHECK(Rational{2, 6} <= Rational{1, 3});
    CHECK(Rational{1, 3} <= Rational{2, 6});
    CHECK(Rational{7, 2}.ceil() == 4);
    CHECK(Rational{8, 2}.ceil() == 4);
}

TEST_CASE("2-splitting probability constant") {
    // min over t <= 20 of sqrt(t) * P(Binomial(t,1/2) lands in the half
    // window); attained at t = 2 with value sqrt(2)/2
    double best = 1e9;
    int best_t = 0;
    for (int t = 1; t <= 20; ++t) {
        double choose = 1.0;
        std::vector<double> binom(t + 1);
        for (int r = 0; r <= t; ++r) {
            binom[r] = choose;
            choose = choose * (t - r) / (r + 1);
        }
        double p = binom[t / 2];
        if (t % 2 == 1) p += binom[(t + 1) / 2];
        p /= std::pow(2.0, t);
        double value = std::sqrt(static_cast<double>(t)) * p;
        if (value < best) { best = value; best_t = t; }
    }
    CHECK(best_t == 2);
    CHECK(best == doctest::Approx(kSplitProbConstant).epsilon(1e-12));
    CHECK(kSplitProbConstant == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
}

TEST_CASE("randomized 2-splitting builder") {
    BoundReport rep;
    SetFamily f = build_2_splitting_randomized(6, 11, &rep);
    CHECK(is_n_splitting(f, 2));
    CHECK(rep.n == 2);
    CHECK(rep.k == 6);
    REQUIRE(rep.achieved.has_value());
    CHECK(*rep.achieved == f.size());
    CHECK(f.size() >= static_cast<int>(volume_lower_bound(2, 6).ceil()));
    CHECK(f.size() <= static_cast<int>(std::ceil(rep.upper)) + 1);

    // deterministic per seed
    CHECK(build_2_splitting_randomized(6, 11) == f);

    // unverified mode fills to its ceiling without certification
    BoundReport urep;
    SetFamily u = build_2_splitting_randomized(6, 11, &urep, false);
    const double c2 = kSplitProbConstant * kSplitProbConstant;
    std::uint64_t cap =
        static_cast<std::uint64_t>(std::ceil(2.0 * 6 / (-std::log2(1 - c2 / 6)))) + 1;
    CHECK(u.size() == static_cast<int>(std::min(cap, std::uint64_t{64})));

    CHECK_THROWS_AS(build_2_splitting_randomized(0, 1), DomainError);
}

TEST_CASE("counting identities hold exhaustively at small sizes") {
    VerdictReport even = counting_identities_check(2, 2, 6);
    CHECK(even.pass);
    CHECK_FALSE(even.details.empty());
    CHECK(counting_identities_check(4, 4, 8).pass);

    VerdictReport mixed = counting_identities_check(3, 2, 6);
    CHECK(mixed.pass);
    // orientation is normalized, so (even, odd) works the same
    CHECK(counting_identities_check(2, 3, 6).pass);

    CHECK(counting_identities_check(2, 4, 8).pass);
    CHECK(counting_identities_check(5, 2, 8).pass);

    CHECK_THROWS_AS(counting_identities_check(3, 3, 8), DomainError);
    CHECK_THROWS_AS(counting_identities_check(0, 2, 6), DomainError);
}
