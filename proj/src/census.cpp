#include "sepsplit/census.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "sepsplit/separate.hpp"

namespace sepsplit {

namespace {

// All vertex permutations of Q_m induced by x -> pi(x) ^ t, flattened as
// 2^m * m! tables of 2^m entries each.
std::vector<std::vector<std::uint32_t>> cube_symmetries(int m) {
    const std::uint32_t verts = std::uint32_t{1} << m;
    std::vector<int> coord(m);
    std::iota(coord.begin(), coord.end(), 0);
    std::vector<std::vector<std::uint32_t>> tables;
    do {
        std::vector<std::uint32_t> permuted(verts);
        for (std::uint32_t v = 0; v < verts; ++v) {
            std::uint32_t image = 0;
            for (int i = 0; i < m; ++i)
                if ((v >> i) & 1) image |= std::uint32_t{1} << coord[i];
            permuted[v] = image;
        }
        for (std::uint32_t t = 0; t < verts; ++t) {
            std::vector<std::uint32_t> table(verts);
            for (std::uint32_t v = 0; v < verts; ++v) table[v] = permuted[v] ^ t;
            tables.push_back(std::move(table));
        }
    } while (std::next_permutation(coord.begin(), coord.end()));
    return tables;
}

// For equal-size vertex sets given as characteristic words, ascending point
// lists compare lexicographically by who owns the lowest differing vertex.
bool word_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return (a >> std::countr_zero(diff)) & 1;
}

std::uint64_t to_word(const CubePointSet& points) {
    std::uint64_t word = 0;
    for (std::uint32_t p : points.points) {
        if (p >= (std::uint64_t{1} << points.m))
            throw DomainError("cube point out of range for m");
        if ((word >> p) & 1) throw DomainError("duplicate cube point");
        word |= std::uint64_t{1} << p;
    }
    return word;
}

std::uint64_t canonical_word(std::uint64_t word,
                             const std::vector<std::vector<std::uint32_t>>& syms) {
    std::uint64_t best = ~std::uint64_t{0};
    bool first = true;
    for (const auto& table : syms) {
        std::uint64_t image = 0;
        for (std::uint64_t rest = word; rest != 0; rest &= rest - 1)
            image |= std::uint64_t{1} << table[std::countr_zero(rest)];
        if (first || word_lex_less(image, best)) {
            best = image;
            first = false;
        }
    }
    return best;
}

CubePointSet from_word(int m, std::uint64_t word) {
    CubePointSet out;
    out.m = m;
    for (std::uint64_t rest = word; rest != 0; rest &= rest - 1)
        out.points.push_back(static_cast<std::uint32_t>(std::countr_zero(rest)));
    return out;
}

}  // namespace

CubePointSet cube_representation(const SetFamily& family) {
    const int m = family.size();
    if (m < 1) throw EmptyFamilyError("cube_representation needs a nonempty family");
    if (m > 31)
        throw GuardExceeded("cube_representation supports at most 31 rows");
    const int k = family.k();
    CubePointSet out;
    out.m = m;
    out.points.reserve(k);
    for (int j = 1; j <= k; ++j) {
        std::uint32_t p = 0;
        for (int i = 1; i <= m; ++i)
            if (family[i - 1].contains(j)) p |= std::uint32_t{1} << (m - i);
        out.points.push_back(p);
    }
    std::sort(out.points.begin(), out.points.end());
    if (std::adjacent_find(out.points.begin(), out.points.end()) != out.points.end())
        throw PreconditionError(
            "cube_representation requires a separating family (distinct columns)");
    return out;
}

CubePointSet canonical_form(const CubePointSet& points, const Guards& guards) {
    if (points.m < 1) throw DomainError("canonical_form requires m >= 1");
    if (points.m > guards.canonical_m)
        throw GuardExceeded("canonical_form enumerates 2^m * m! symmetries; m <= " +
                            std::to_string(guards.canonical_m));
    auto syms = cube_symmetries(points.m);
    return from_word(points.m, canonical_word(to_word(points), syms));
}

bool families_equivalent(const SetFamily& f, const SetFamily& g,
                         const Guards& guards) {
    if (f.k() != g.k() || f.size() != g.size())
        throw DimensionError("families_equivalent requires equal m and k");
    if (!is_separating_family(f) || !is_separating_family(g))
        throw PreconditionError("families_equivalent requires separating families");
    return canonical_form(cube_representation(f), guards) ==
           canonical_form(cube_representation(g), guards);
}

std::uint64_t count_sep(int m, int k, const Guards& guards) {
    if (m < 1) throw DomainError("count_sep requires m >= 1");
    if (m > guards.census_m)
        throw GuardExceeded("count_sep canonicalizes all k-subsets of Q_m; m <= " +
                            std::to_string(guards.census_m));
    const int verts = 1 << m;
    if (k < 0 || k > verts)
        throw DomainError("count_sep requires 0 <= k <= 2^m");
    auto syms = cube_symmetries(m);
    std::unordered_set<std::uint64_t> forms;
    std::uint64_t word = 0;
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            forms.insert(canonical_word(word, syms));
            return;
        }
        for (int v = next; v + remaining <= verts; ++v) {
            word |= std::uint64_t{1} << v;
            self(self, v + 1, remaining - 1);
            word &= ~(std::uint64_t{1} << v);
        }
    };
    rec(rec, 0, k);
    return forms.size();
}

std::uint64_t count_sep_burnside(int m, int k, const Guards& guards) {
    if (m < 1) throw DomainError("count_sep_burnside requires m >= 1");
    if (m > guards.census_m)
        throw GuardExceeded("count_sep_burnside sweeps 2^m * m! symmetries; m <= " +
                            std::to_string(guards.census_m));
    const int verts = 1 << m;
    if (k < 0 || k > verts)
        throw DomainError("count_sep_burnside requires 0 <= k <= 2^m");
    auto syms = cube_symmetries(m);
    std::uint64_t total = 0;
    std::vector<char> seen(verts);
    std::vector<int> cycle_lengths;
    for (const auto& table : syms) {
        std::fill(seen.begin(), seen.end(), 0);
        cycle_lengths.clear();
        for (int v = 0; v < verts; ++v) {
            if (seen[v]) continue;
            int len = 0;
            for (std::uint32_t w = v; !seen[w]; w = table[w]) {
                seen[w] = 1;
                ++len;
            }
            cycle_lengths.push_back(len);
        }
        // fixed k-subsets are unions of whole cycles: subset-sum count
        std::vector<std::uint64_t> dp(k + 1, 0);
        dp[0] = 1;
        for (int len : cycle_lengths)
            for (int j = k; j >= len; --j) dp[j] += dp[j - len];
        total += dp[k];
    }
    if (total % syms.size() != 0)
        throw ConstructionBug("Burnside sum not divisible by the group order");
    return total / syms.size();
}

}  // namespace sepsplit
