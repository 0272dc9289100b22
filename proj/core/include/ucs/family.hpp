#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ucs/subsets.hpp"

namespace ucs {

/// Constant-time membership over all 2^n subsets, n <= 7.
class MembershipBitmap {
 public:
  bool test(SubsetMask m) const { return (words_[m >> 6] >> (m & 63)) & 1; }
  void set(SubsetMask m) { words_[m >> 6] |= std::uint64_t{1} << (m & 63); }
  void reset(SubsetMask m) { words_[m >> 6] &= ~(std::uint64_t{1} << (m & 63)); }
  int count() const;
  friend bool operator==(const MembershipBitmap&, const MembershipBitmap&) = default;

 private:
  std::array<std::uint64_t, kMaxSubsets / 64> words_{};
};

struct SparsenessReport {
  int total_element_count = 0;
  int nonempty_set_count = 0;
  bool is_sparse = false;
};

/// A union-closed family of subsets of {1..n} that contains the universe and
/// the empty set. Members are kept in increasing subset order (universe first,
/// empty set implicit). Grows and shrinks at the tail only: push/pop form an
/// undo stack so a search can backtrack without allocating.
class Family {
 public:
  /// The smallest family {universe, empty set}.
  explicit Family(int n);

  int universe_size() const { return n_; }
  std::span<const SubsetMask> members() const { return {members_.data(), member_count_}; }
  /// Minimal non-empty members. May contain extra non-minimal members after
  /// push_unreduced; order is unspecified.
  std::span<const SubsetMask> reduced() const { return {reduced_.data(), reduced_count_}; }
  const MembershipBitmap& membership() const { return membership_; }
  bool contains(SubsetMask m) const { return membership_.test(m); }

  /// Largest member in subset order (the most recently added).
  SubsetMask last() const { return members_[member_count_ - 1]; }
  /// Number of sets added to the base family.
  int depth() const { return static_cast<int>(member_count_) - 1; }
  int total_elements() const { return total_elements_; }

  /// True iff adding a keeps the family union-closed. Requires a to be
  /// non-empty and larger than last() in subset order; only the reduced
  /// members are consulted.
  bool can_extend(SubsetMask a) const;

  /// Appends a and updates the reduced set. Requires can_extend(a).
  void push(SubsetMask a);
  /// Appends a without dropping reduced members that contain it.
  void push_unreduced(SubsetMask a);
  /// Undoes the most recent push or push_unreduced.
  void pop();

 private:
  int n_;
  std::size_t member_count_ = 0;
  std::size_t reduced_count_ = 0;
  std::size_t removed_count_ = 0;
  int total_elements_ = 0;
  MembershipBitmap membership_;
  std::array<SubsetMask, kMaxSubsets> members_{};
  std::array<SubsetMask, kMaxSubsets> reduced_{};
  // Reduced members dropped by push, in push order; removed_per_push_[d] is
  // how many were dropped when the member at depth d was added.
  std::array<SubsetMask, kMaxSubsets> removed_{};
  std::array<std::uint8_t, kMaxSubsets> removed_per_push_{};
};

/// {universe, empty set} for 1 <= n <= 7; throws std::invalid_argument otherwise.
Family base_family(int n);

bool can_extend(const Family& f, SubsetMask a);

/// Copying variant of Family::push.
Family extend(const Family& f, SubsetMask a);

/// Pairwise check that every union of two listed sets is listed.
bool brute_force_closed(std::span<const SubsetMask> masks);

/// Minimal non-empty sets, recomputed from the definition, sorted in subset order.
std::vector<SubsetMask> compute_reduced(std::span<const SubsetMask> members);

/// Exact test 2 * sum |A| <= n * k over the k non-empty members.
SparsenessReport sparseness(const Family& f);

/// Comma-separated lowercase hex masks of the non-empty members, e.g. "7,3,5".
std::string to_string(const Family& f);
std::string format_masks(std::span<const SubsetMask> masks);

/// Parses the to_string format. The result must start with the universe, be
/// strictly increasing in subset order and union-closed; throws
/// std::invalid_argument otherwise.
Family parse_family(std::string_view text, int n);

}  // namespace ucs
