#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sepsplit/search.hpp"
#include "sepsplit/separate.hpp"
#include "sepsplit/split.hpp"

using namespace sepsplit;

namespace {

// ---------------------------------------------------------------------------
// Independent exhaustive minimizer: try every family of size 0, 1, 2, ...
// drawn from all 2^k subsets (no symmetry pruning) against definition-level
// recognizers. Usable only at very small k, which is exactly the point.
// ---------------------------------------------------------------------------

bool m_separates(std::uint32_t a, std::uint32_t b, int k) {
    std::uint32_t full = (std::uint32_t{1} << k) - 1;
    return (a & b) != 0 && (~a & full & b) != 0;
}

bool m_splits(std::uint32_t a, std::uint32_t b) {
    int size = std::popcount(b);
    int is = std::popcount(a & b);
    return is == size / 2 || is == (size + 1) / 2;
}

bool pair_separable(std::uint32_t b1, std::uint32_t b2, int k) {
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << k); ++a)
        if (m_separates(a, b1, k) && m_separates(a, b2, k)) return true;
    return false;
}

// the list of obligations: each task is one or two masks a single member
// must handle simultaneously
std::vector<std::pair<std::uint32_t, std::uint32_t>> oracle_tasks(
    MinProperty property, int k) {
    const std::uint32_t total = std::uint32_t{1} << k;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tasks;
    switch (property) {
        case MinProperty::Separating:
            for (std::uint32_t b = 0; b < total; ++b)
                if (std::popcount(b) >= 2) tasks.emplace_back(b, b);
            break;
        case MinProperty::Splitting:
            for (std::uint32_t b = 0; b < total; ++b) tasks.emplace_back(b, b);
            break;
        case MinProperty::NSeparating:  // n = 2
            for (std::uint32_t b1 = 0; b1 < total; ++b1)
                for (std::uint32_t b2 = b1; b2 < total; ++b2)
                    if (pair_separable(b1, b2, k)) tasks.emplace_back(b1, b2);
            break;
        case MinProperty::NSplitting:  // n = 2: every pair is splittable
            for (std::uint32_t b1 = 0; b1 < total; ++b1)
                for (std::uint32_t b2 = b1; b2 < total; ++b2)
                    tasks.emplace_back(b1, b2);
            break;
    }
    return tasks;
}

int oracle_min(MinProperty property, int k, int size_cap) {
    const std::uint32_t total = std::uint32_t{1} << k;
    const auto tasks = oracle_tasks(property, k);
    const bool separating = property == MinProperty::Separating ||
                            property == MinProperty::NSeparating;
    auto covers = [&](std::uint32_t a,
                      const std::pair<std::uint32_t, std::uint32_t>& t) {
        if (separating)
            return m_separates(a, t.first, k) && m_separates(a, t.second, k);
        return m_splits(a, t.first) && m_splits(a, t.second);
    };
    std::vector<std::uint32_t> fam;
    auto ok = [&]() {
        for (const auto& t : tasks) {
            bool hit = false;
            for (std::uint32_t a : fam)
                if (covers(a, t)) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::uint32_t start, int remaining) -> bool {
        if (remaining == 0) return ok();
        for (std::uint32_t a = start; a < total; ++a) {
            fam.push_back(a);
            if (self(self, a + 1, remaining - 1)) return true;
            fam.pop_back();
        }
        return false;
    };
    for (int d = 0; d <= size_cap; ++d) {
        fam.clear();
        if (rec(rec, 0, d)) return d;
    }
    return -1;
}

}  // namespace

TEST_CASE("exact minimum separating family sizes") {
    // against the independent minimizer at tiny k
    for (int k = 2; k <= 5; ++k) {
        SearchResult r = exact_min_family_size(MinProperty::Separating, 0, k);
        CHECK(r.value == oracle_min(MinProperty::Separating, k, 4));
        CHECK(r.exhausted);
        CHECK(r.certificate.size() == r.value);
        CHECK(is_separating_family(r.certificate));
    }
    // the full range follows the ceiling-log formula
    for (int k = 2; k <= 8; ++k) {
        SearchResult r = exact_min_family_size(MinProperty::Separating, 0, k);
        CHECK(r.value == std::bit_width(static_cast<unsigned>(k - 1)));
    }
    SearchResult r1 = exact_min_family_size(MinProperty::Separating, 0, 1);
    CHECK(r1.value == 0);
    CHECK(r1.exhausted);
}

TEST_CASE("exact minimum splitting family sizes") {
    for (int k = 1; k <= 6; ++k) {
        SearchResult r = exact_min_family_size(MinProperty::Splitting, 0, k);
        CHECK(r.value == oracle_min(MinProperty::Splitting, k, 4));
        CHECK(r.exhausted);
        CHECK(r.certificate.size() == r.value);
        CHECK(is_splitting_family(r.certificate));
    }
    // k = 1..8 sequence; bounded below by the volume ratio, above by the
    // interval construction
    std::vector<int> expect = {1, 1, 2, 2, 3, 3, 4, 4};
    for (int k = 1; k <= 8; ++k) {
        SearchResult r = exact_min_family_size(MinProperty::Splitting, 0, k);
        CHECK(r.value == expect[k - 1]);
        CHECK(r.value <= (k + 1) / 2);
        CHECK(static_cast<std::uint64_t>(r.value) >= volume_lower_bound(1, k).ceil());
    }
}

TEST_CASE("exact minimum 2-separating family sizes at tiny k") {
    for (int k = 3; k <= 4; ++k) {
        SearchResult r = exact_min_family_size(MinProperty::NSeparating, 2, k);
        CHECK(r.value == oracle_min(MinProperty::NSeparating, k, 6));
        CHECK(r.exhausted);
        CHECK(is_n_separating(r.certificate, 2));
        // 2-separating implies separating, so the plain minimum is a floor
        CHECK(r.value >=
              exact_min_family_size(MinProperty::Separating, 0, k).value);
    }
}

TEST_CASE("exact minimum 2-splitting family sizes at tiny k") {
    for (int k = 2; k <= 4; ++k) {
        SearchResult r = exact_min_family_size(MinProperty::NSplitting, 2, k);
        CHECK(r.value == oracle_min(MinProperty::NSplitting, k, 6));
        CHECK(r.exhausted);
        CHECK(is_n_splitting(r.certificate, 2));
        CHECK(static_cast<std::uint64_t>(r.value) >= volume_lower_bound(2, k).ceil());
    }
}

TEST_CASE("search guards and metadata") {
    CHECK_THROWS_AS(exact_min_family_size(MinProperty::Separating, 0, 11),
                    GuardExceeded);
    CHECK_THROWS_AS(exact_min_family_size(MinProperty::NSeparating, 2, 7),
                    GuardExceeded);
    CHECK_THROWS_AS(exact_min_family_size(MinProperty::Splitting, 0, 9),
                    GuardExceeded);
    CHECK_THROWS_AS(exact_min_family_size(MinProperty::NSplitting, 4, 4),
                    GuardExceeded);

    SearchResult r = exact_min_family_size(MinProperty::Separating, 0, 4);
    CHECK(r.objective == std::string(min_property_name(MinProperty::Separating)) + "(k=4)");
    SearchResult rn = exact_min_family_size(MinProperty::NSeparating, 2, 4);
    CHECK(rn.objective == std::string(min_property_name(MinProperty::NSeparating)) + "(n=2,k=4)");
}
