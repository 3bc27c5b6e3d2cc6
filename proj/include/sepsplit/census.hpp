#pragma once

#include <cstdint>

#include "sepsplit/family.hpp"
#include "sepsplit/guards.hpp"

namespace sepsplit {

// The set of matrix columns of a separating family, viewed as vertices of
// Q_m (m = family size, row 1 = most significant coordinate). A
// non-separating family has duplicate columns and is rejected with
// PreconditionError. Requires m <= 31 so vertices fit the point type.
CubePointSet cube_representation(const SetFamily& family);

// The lexicographically least image of the sorted point list over all
// 2^m * m! cube symmetries (coordinate permutations composed with
// coordinate reflections). Idempotent; two point sets are in the same orbit
// iff their canonical forms coincide. Guard: m <= 5 by default.
CubePointSet canonical_form(const CubePointSet& points,
                            const Guards& guards = Guards());

// True iff the cube representations have equal canonical forms, i.e. some
// cube symmetry maps one onto the other. Both families must be separating
// with equal m and k.
bool families_equivalent(const SetFamily& f, const SetFamily& g,
                         const Guards& guards = Guards());

// Number of Aut(Q_m)-orbits of k-element subsets of Q_m, by canonicalizing
// every k-subset and counting distinct forms. Satisfies the duality
// count_sep(m, k) = count_sep(m, 2^m - k). Guard: m <= 4 by default.
std::uint64_t count_sep(int m, int k, const Guards& guards = Guards());

// The same count via Burnside averaging: for each group element, the number
// of fixed k-subsets is computed from its vertex cycle type by a
// subset-sum over cycle lengths; the orbit count is the group average.
// Independent cross-check for count_sep.
std::uint64_t count_sep_burnside(int m, int k, const Guards& guards = Guards());

}  // namespace sepsplit
