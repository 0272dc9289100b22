#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ucs {

inline constexpr int kMaxUniverse = 7;
inline constexpr int kMaxSubsets = 1 << kMaxUniverse;

/// Bit i set means element i+1 belongs to the subset.
using SubsetMask = std::uint32_t;

/// Index of a permutation inside UniverseContext::permutations().
using PermIndex = std::uint16_t;

inline int cardinality(SubsetMask m) { return std::popcount(m); }

inline constexpr SubsetMask full_mask(int n) { return (SubsetMask{1} << n) - 1; }

/// Builds the mask of a set of 1-based elements. Throws std::invalid_argument
/// when an element lies outside {1..n} or n is not in [1, kMaxUniverse].
SubsetMask encode(std::span<const int> elements, int n);

/// Inverse of encode: the sorted 1-based elements of a mask.
std::vector<int> decode(SubsetMask m);

/// Strict total order on subsets: larger cardinality first, then smaller
/// numeric value.
inline bool order_less(SubsetMask a, SubsetMask b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  return ca != cb ? ca > cb : a < b;
}

class Permutation {
 public:
  /// images[i] is the 0-based image of element i+1.
  explicit Permutation(std::span<const std::uint8_t> images);

  int size() const { return size_; }
  int image(int element) const { return images_[element]; }
  std::span<const std::uint8_t> images() const { return {images_.data(), static_cast<std::size_t>(size_)}; }

  /// Table lookup of the image of m.
  SubsetMask apply(SubsetMask m) const { return action_[m]; }

  /// Element-wise relabeling, independent of the action table.
  SubsetMask apply_slow(SubsetMask m) const;

  bool is_identity() const;

  /// (p * q)(x) = p(q(x)).
  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  int size_;
  std::array<std::uint8_t, kMaxUniverse> images_{};
  std::array<std::uint8_t, kMaxSubsets> action_{};
};

inline SubsetMask apply_perm(const Permutation& p, SubsetMask m) { return p.apply(m); }

/// Everything that depends only on the universe size: all n! permutations with
/// their action tables (identity first), and the rank of each subset in the
/// subset order. Immutable after construction.
class UniverseContext {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= kMaxUniverse.
  explicit UniverseContext(int n);

  int n() const { return n_; }
  SubsetMask omega() const { return full_mask(n_); }
  int subset_count() const { return 1 << n_; }

  std::span<const Permutation> permutations() const { return perms_; }
  const Permutation& permutation(PermIndex i) const { return perms_[i]; }
  std::span<const PermIndex> all_permutation_indices() const { return all_indices_; }

  /// Position of m in the subset order over all 2^n subsets (Omega has rank 0,
  /// the empty set has rank 2^n - 1).
  int rank(SubsetMask m) const { return rank_[m]; }
  /// Subsets listed in increasing order.
  std::span<const SubsetMask> ordered_subsets() const { return ordered_; }
  /// Subsets of one cardinality in increasing numeric order.
  std::span<const SubsetMask> subsets_of_size(int k) const { return by_size_[k]; }

 private:
  int n_;
  std::vector<Permutation> perms_;
  std::vector<PermIndex> all_indices_;
  std::array<int, kMaxSubsets> rank_{};
  std::vector<SubsetMask> ordered_;
  std::array<std::vector<SubsetMask>, kMaxUniverse + 1> by_size_;
};

/// Shared immutable context for n, built on first use.
const UniverseContext& universe(int n);

}  // namespace ucs
