#pragma once

#include <string>

#include "sepsplit/family.hpp"
#include "sepsplit/guards.hpp"

namespace sepsplit {

enum class MinProperty { Separating, NSeparating, Splitting, NSplitting };

// Result of an exact minimum-size search. The certificate passes the
// property's recognizer; exhausted = true means the search provably covered
// all smaller sizes, so no family of size value-1 has the property.
struct SearchResult {
    std::string objective;
    int value = 0;
    SetFamily certificate;
    bool exhausted = false;

    SearchResult() : certificate(1) {}
};

// Exact set-cover search: tasks are the objects to separate or split,
// candidates are the subsets of [k] pruned by the complement symmetry
// A ~ A^c (both predicates are complement-invariant, so A may be assumed
// to contain element 1). Iterative deepening with most-constrained-task
// branching, seeded by a greedy upper bound. n is the n of NSeparating /
// NSplitting and ignored otherwise.
SearchResult exact_min_family_size(MinProperty property, int n, int k,
                                   const Guards& guards = Guards());

const char* min_property_name(MinProperty property);

}  // namespace sepsplit
