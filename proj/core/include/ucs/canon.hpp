#pragma once

#include <span>
#include <vector>

#include "ucs/family.hpp"
#include "ucs/subsets.hpp"

namespace ucs {

enum class ImageOrder { smaller, equal, larger };

/// Compares the member string of p(f) with that of f, lexicographically.
/// Works for any permutation; no assumption on f's history.
ImageOrder compare_image(const Permutation& p, const Family& f);

/// Same comparison restricted to the members of f that share the cardinality
/// of f.last(). Agrees with compare_image whenever p maps the members of
/// larger cardinality onto themselves.
ImageOrder compare_last_level(const Permutation& p, const Family& f);

/// Canonicity test for a family whose parent (f without f.last()) is
/// canonical. parent_group must hold every permutation fixing the members of
/// f with cardinality greater than |f.last()|. Returns false as soon as one of
/// them yields a smaller string. Otherwise returns true and fills
/// stabilizer with the members of parent_group that fix f, i.e. Aut(f).
bool canonical_step(const UniverseContext& ctx, const Family& f, std::span<const PermIndex> parent_group,
                    std::vector<PermIndex>& stabilizer);

struct CanonResult {
  bool is_canonical = false;
  std::vector<PermIndex> group;
};

CanonResult canonical_step(const UniverseContext& ctx, const Family& f, std::span<const PermIndex> parent_group);

/// Reference test against all n! permutations.
bool is_canonical_naive(const UniverseContext& ctx, const Family& f);

/// Members of the automorphism group of f, by exhaustive search.
std::vector<PermIndex> automorphisms_naive(const UniverseContext& ctx, const Family& f);

/// Lexicographically smallest member string over the orbit of the given
/// union-closed set (listed in any order, empty set optional).
std::vector<SubsetMask> canonical_form_naive(const UniverseContext& ctx, std::span<const SubsetMask> masks);

}  // namespace ucs
