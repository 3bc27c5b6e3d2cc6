#include "sepsplit/search.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "sepsplit/separate.hpp"
#include "sepsplit/split.hpp"

namespace sepsplit {

namespace {

bool in_half_window(int intersection, int total) {
    return intersection == total / 2 || intersection == (total + 1) / 2;
}

// Supports of up to n distinct pairs over [k] whose pair graph is bipartite,
// each support a list of (x, y) with x < y. Supersets of non-bipartite
// supports are pruned: an odd cycle never goes away.
std::vector<std::vector<std::pair<int, int>>> separable_supports(int k, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 1; x <= k; ++x)
        for (int y = x + 1; y <= k; ++y) pairs.emplace_back(x, y);
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> chosen;
    std::vector<int> color(k + 1);
    auto bipartite = [&]() {
        std::vector<std::vector<int>> adj(k + 1);
        for (int p : chosen) {
            adj[pairs[p].first].push_back(pairs[p].second);
            adj[pairs[p].second].push_back(pairs[p].first);
        }
        std::fill(color.begin(), color.end(), -1);
        std::vector<int> stack;
        for (int v = 1; v <= k; ++v) {
            if (adj[v].empty() || color[v] != -1) continue;
            color[v] = 0;
            stack.assign(1, v);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u]) {
                    if (color[w] == -1) {
                        color[w] = 1 - color[u];
                        stack.push_back(w);
                    } else if (color[w] == color[u]) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
        for (std::size_t p = start; p < pairs.size(); ++p) {
            chosen.push_back(static_cast<int>(p));
            if (bipartite()) {
                std::vector<std::pair<int, int>> support;
                for (int q : chosen) support.push_back(pairs[q]);
                out.push_back(std::move(support));
                if (depth + 1 < n) self(self, p + 1, depth + 1);
            }
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

const char* min_property_name(MinProperty property) {
    switch (property) {
        case MinProperty::Separating: return "separating";
        case MinProperty::NSeparating: return "n-separating";
        case MinProperty::Splitting: return "splitting";
        case MinProperty::NSplitting: return "n-splitting";
    }
    return "?";
}

SearchResult exact_min_family_size(MinProperty property, int n, int k,
                                   const Guards& guards) {
    if (k < 1) throw DomainError("exact_min_family_size requires k >= 1");
    const bool uses_n =
        property == MinProperty::NSeparating || property == MinProperty::NSplitting;
    if (uses_n && n < 1) throw DomainError("exact_min_family_size requires n >= 1");
    switch (property) {
        case MinProperty::Separating:
            if (k > guards.search_separating_k)
                throw GuardExceeded("separating search supports k <= " +
                                    std::to_string(guards.search_separating_k));
            break;
        case MinProperty::NSeparating:
            if (k > guards.search_n_separating2_k)
                throw GuardExceeded("n-separating search supports k <= " +
                                    std::to_string(guards.search_n_separating2_k));
            break;
        case MinProperty::Splitting:
            if (k > guards.search_splitting_k)
                throw GuardExceeded("splitting search supports k <= " +
                                    std::to_string(guards.search_splitting_k));
            break;
        case MinProperty::NSplitting:
            if (k > guards.search_n_splitting2_k)
                throw GuardExceeded("n-splitting search supports k <= " +
                                    std::to_string(guards.search_n_splitting2_k));
            if (n > 3)
                throw GuardExceeded("n-splitting search supports n <= 3");
            break;
    }

    // Candidates: subsets containing element 1. Both predicates are
    // complement-invariant, so any solution normalizes to this pool without
    // growing.
    const int ncand = 1 << (k - 1);
    std::vector<std::uint64_t> cand(ncand);
    for (int c = 0; c < ncand; ++c)
        cand[c] = (static_cast<std::uint64_t>(c) << 1) | 1;

    // Task coverage matrix: covers[c] holds one bit per task.
    std::vector<std::vector<std::uint64_t>> covers;
    std::size_t ntasks = 0;
    auto add_task = [&](auto&& covered_by) {
        const std::size_t word = ntasks >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (ntasks & 63);
        for (int c = 0; c < ncand; ++c) {
            if (covers[c].size() <= word) covers[c].resize(word + 1, 0);
            if (covered_by(cand[c])) covers[c][word] |= bit;
        }
        ++ntasks;
    };
    covers.assign(ncand, {});

    switch (property) {
        case MinProperty::Separating:
            for (int x = 1; x <= k; ++x)
                for (int y = x + 1; y <= k; ++y)
                    add_task([&](std::uint64_t a) {
                        return ((a >> (x - 1)) & 1) != ((a >> (y - 1)) & 1);
                    });
            break;
        case MinProperty::NSeparating:
            for (const auto& support : separable_supports(k, n))
                add_task([&](std::uint64_t a) {
                    for (auto [x, y] : support)
                        if (((a >> (x - 1)) & 1) == ((a >> (y - 1)) & 1))
                            return false;
                    return true;
                });
            break;
        case MinProperty::Splitting:
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b)
                add_task([&](std::uint64_t a) {
                    return in_half_window(std::popcount(a & b), std::popcount(b));
                });
            break;
        case MinProperty::NSplitting: {
            const std::uint64_t total = std::uint64_t{1} << k;
            std::vector<std::uint64_t> masks;
            auto splits_all = [&](std::uint64_t a) {
                for (std::uint64_t b : masks)
                    if (!in_half_window(std::popcount(a & b), std::popcount(b)))
                        return false;
                return true;
            };
            auto rec = [&](auto&& self, std::uint64_t start, int depth) -> void {
                for (std::uint64_t b = start; b < total; ++b) {
                    masks.push_back(b);
                    bool splittable =
                        masks.size() <= 2 ||
                        (masks.size() == 3 &&
                         triple_splittable_parity(SubsetMask::from_bits(k, masks[0]),
                                                  SubsetMask::from_bits(k, masks[1]),
                                                  SubsetMask::from_bits(k, masks[2])));
                    if (splittable) {
                        add_task(splits_all);
                        if (depth + 1 < n) self(self, b + 1, depth + 1);
                    }
                    masks.pop_back();
                }
            };
            rec(rec, 0, 0);
            break;
        }
    }

    SearchResult result;
    result.objective = std::string(min_property_name(property)) +
                       (uses_n ? "(n=" + std::to_string(n) + ",k=" : "(k=") +
                       std::to_string(k) + ")";
    result.certificate = SetFamily(k);
    if (ntasks == 0) {
        result.value = 0;
        result.exhausted = true;
        return result;
    }

    const std::size_t words = (ntasks + 63) / 64;
    for (auto& cv : covers) cv.resize(words, 0);
    std::vector<std::uint64_t> all(words, 0);
    for (std::size_t t = 0; t < ntasks; ++t) all[t >> 6] |= std::uint64_t{1} << (t & 63);

    // per task, the candidates covering it (for most-constrained branching)
    std::vector<std::vector<int>> task_cands(ntasks);
    for (int c = 0; c < ncand; ++c)
        for (std::size_t t = 0; t < ntasks; ++t)
            if ((covers[c][t >> 6] >> (t & 63)) & 1) task_cands[t].push_back(c);
    for (std::size_t t = 0; t < ntasks; ++t)
        if (task_cands[t].empty())
            throw ConstructionBug("a task has no covering candidate");

    auto count_uncovered = [&](const std::vector<std::uint64_t>& unc) {
        int count = 0;
        for (std::uint64_t w : unc) count += std::popcount(w);
        return count;
    };

    // greedy upper bound
    std::vector<int> greedy_pick;
    {
        std::vector<std::uint64_t> unc = all;
        while (count_uncovered(unc) > 0) {
            int best = -1, best_gain = -1;
            for (int c = 0; c < ncand; ++c) {
                int gain = 0;
                for (std::size_t w = 0; w < words; ++w)
                    gain += std::popcount(covers[c][w] & unc[w]);
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            greedy_pick.push_back(best);
            for (std::size_t w = 0; w < words; ++w) unc[w] &= ~covers[best][w];
        }
    }

    std::vector<int> chosen, best_chosen;
    auto dfs = [&](auto&& self, std::vector<std::uint64_t>& unc, int limit) -> bool {
        const int remaining = count_uncovered(unc);
        if (remaining == 0) {
            best_chosen = chosen;
            return true;
        }
        if (limit == 0) return false;
        // bound: even the best candidate gains at most max_gain per pick
        int max_gain = 0;
        for (int c = 0; c < ncand; ++c) {
            int gain = 0;
            for (std::size_t w = 0; w < words; ++w)
                gain += std::popcount(covers[c][w] & unc[w]);
            max_gain = std::max(max_gain, gain);
        }
        if (remaining > max_gain * limit) return false;
        // branch on the uncovered task with the fewest covering candidates
        std::size_t pick = ntasks;
        std::size_t fewest = static_cast<std::size_t>(-1);
        for (std::size_t t = 0; t < ntasks; ++t) {
            if (!((unc[t >> 6] >> (t & 63)) & 1)) continue;
            if (task_cands[t].size() < fewest) {
                fewest = task_cands[t].size();
                pick = t;
            }
        }
        std::vector<std::uint64_t> next(words);
        for (int c : task_cands[pick]) {
            bool shrinks = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = unc[w] & ~covers[c][w];
                if (next[w] != unc[w]) shrinks = true;
            }
            if (!shrinks) continue;
            chosen.push_back(c);
            std::vector<std::uint64_t> saved = next;
            if (self(self, saved, limit - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int d = 1; d <= static_cast<int>(greedy_pick.size()); ++d) {
        std::vector<std::uint64_t> unc = all;
        chosen.clear();
        if (dfs(dfs, unc, d)) break;
    }
    if (best_chosen.empty()) best_chosen = greedy_pick;  // defensive; dfs finds a
                                                         // cover by d = greedy size

    result.value = static_cast<int>(best_chosen.size());
    result.exhausted = true;
    for (int c : best_chosen)
        result.certificate.insert(SubsetMask::from_bits(k, cand[c]));

    // the certificate must pass the recognizer it was searched for
    bool pass = true;
    switch (property) {
        case MinProperty::Separating: pass = is_separating_family(result.certificate); break;
        case MinProperty::NSeparating: pass = is_n_separating(result.certificate, n, guards); break;
        case MinProperty::Splitting: pass = is_splitting_family(result.certificate, guards); break;
        case MinProperty::NSplitting: pass = is_n_splitting(result.certificate, n, guards); break;
    }
    if (!pass) throw ConstructionBug("search certificate failed its recognizer");
    return result;
}

}  // namespace sepsplit
