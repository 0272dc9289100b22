#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ucs/bigint.hpp"
#include "ucs/family.hpp"
#include "ucs/subsets.hpp"

namespace ucs {

/// Called once per canonical family with the order of its automorphism group.
using Visitor = std::function<void(const Family&, std::uint64_t automorphisms)>;

/// Keeps only the children created at `depth` (number of added sets) whose
/// running index is congruent to `residue` modulo `modulus`. Nodes above the
/// split depth are reported by residue 0 only, so the shards of one split
/// partition the output. Several splits at increasing depths compose.
struct SplitSpec {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  int depth = 2;
};

struct EnumerateOptions {
  std::vector<SplitSpec> splits;
  /// Use the specialised recursion once only singletons remain to be added.
  bool singleton_fast_path = true;
};

struct EnumerateStats {
  std::uint64_t nodes = 0;
  /// Nodes created by the singleton recursion (subset of nodes).
  std::uint64_t singleton_phase_nodes = 0;
};

/// Orderly generation of one representative per isomorphism class of
/// union-closed families on {1..n} containing the universe and the empty set.
/// Depth-first over a single mutable Family; candidates are tried in subset
/// order, and a child survives only if it is canonical. The root is visited.
class Enumerator {
 public:
  /// Throws std::invalid_argument for n outside [1, 7] or a malformed split.
  explicit Enumerator(int n, EnumerateOptions options = {});

  EnumerateStats run(const Visitor& visit);

  /// Recursion restricted to singleton candidates, starting below `f`
  /// (which is not itself visited). `group` must hold every permutation that
  /// fixes the members of f with two or more elements. Ignores splits.
  std::uint64_t singleton_phase(const Family& f, std::span<const PermIndex> group, const Visitor& visit);

 private:
  void descend(std::span<const PermIndex> same_level_group, std::span<const PermIndex> own_group);
  void descend_singletons(int first_element, SubsetMask singletons, std::span<const PermIndex> group);
  bool admit_child(int depth);
  void emit(std::uint64_t automorphisms, bool singleton_phase);

  const UniverseContext& ctx_;
  EnumerateOptions options_;
  Family family_;
  const Visitor* visit_ = nullptr;
  EnumerateStats stats_;
  std::vector<std::vector<PermIndex>> groups_;
  std::vector<std::uint64_t> split_counters_;
  // reportable_[d]: every split deeper than d selects residue 0.
  std::vector<bool> reportable_;
};

/// Number of canonical families (visited nodes) for one shard.
std::uint64_t enumerate(int n, const Visitor& visit, std::span<const SplitSpec> splits = {});

struct ClassCounts {
  std::uint64_t classes = 0;
  BigInt labeled = 0;
};

/// Classes and labeled families (sum of n!/|Aut| over representatives).
ClassCounts count_with_automorphisms(int n, std::span<const SplitSpec> splits = {});

}  // namespace ucs
