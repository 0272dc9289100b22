#pragma once

// Brute-force reference enumerations, independent of the search code.

#include <cstdint>
#include <vector>

#include "ucs/subsets.hpp"

namespace ucs::oracle {

using MaskList = std::vector<SubsetMask>;

/// Every union-closed family on {1..n} containing the universe and the empty
/// set, as its non-empty members in subset order. Feasible for n <= 4.
std::vector<MaskList> labeled_union_closed(int n);

/// Every intersection-closed family on {1..n} containing the universe, all
/// members listed (the empty set when present) in subset order. n <= 4.
std::vector<MaskList> labeled_intersection_closed(int n);

/// Lexicographically least image under all relabelings, empty set kept.
MaskList orbit_minimum(int n, const MaskList& masks);

/// Permutations fixing, as a set of sets, every member of size >= min_size.
std::vector<PermIndex> level_stabilizer(int n, const MaskList& members, int min_size);

}  // namespace ucs::oracle
