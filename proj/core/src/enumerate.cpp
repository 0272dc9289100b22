#include "ucs/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ucs/canon.hpp"

namespace ucs {

Enumerator::Enumerator(int n, EnumerateOptions options)
    : ctx_(universe(n)), options_(std::move(options)), family_(n) {
  const int max_depth = ctx_.subset_count() - 1;
  int previous_depth = 0;
  for (const SplitSpec& s : options_.splits) {
    if (s.modulus == 0 || s.residue >= s.modulus) throw std::invalid_argument("split residue must be < modulus");
    if (s.depth < 1 || s.depth <= previous_depth) {
      throw std::invalid_argument("split depths must be >= 1 and strictly increasing");
    }
    previous_depth = s.depth;
  }
  split_counters_.assign(options_.splits.size(), 0);
  reportable_.assign(static_cast<std::size_t>(max_depth) + 1, true);
  for (const SplitSpec& s : options_.splits) {
    for (int d = 0; d < std::min(s.depth, max_depth + 1); ++d) {
      if (s.residue != 0) reportable_[d] = false;
    }
  }
  groups_.resize(static_cast<std::size_t>(max_depth) + 1);
  for (auto& g : groups_) g.reserve(ctx_.permutations().size());
}

bool Enumerator::admit_child(int depth) {
  for (std::size_t i = 0; i < options_.splits.size(); ++i) {
    const SplitSpec& s = options_.splits[i];
    if (s.depth == depth && split_counters_[i]++ % s.modulus != s.residue) return false;
  }
  return true;
}

void Enumerator::emit(std::uint64_t automorphisms, bool singleton_phase) {
  if (!reportable_[family_.depth()]) return;
  ++stats_.nodes;
  if (singleton_phase) ++stats_.singleton_phase_nodes;
  if (*visit_) (*visit_)(family_, automorphisms);
}

EnumerateStats Enumerator::run(const Visitor& visit) {
  visit_ = &visit;
  stats_ = {};
  family_ = Family(ctx_.n());
  std::fill(split_counters_.begin(), split_counters_.end(), 0);
  const auto all = ctx_.all_permutation_indices();
  emit(all.size(), false);
  descend(all, all);
  visit_ = nullptr;
  return stats_;
}

std::uint64_t Enumerator::singleton_phase(const Family& f, std::span<const PermIndex> group, const Visitor& visit) {
  if (f.universe_size() != ctx_.n()) throw std::invalid_argument("family and enumerator disagree on n");
  visit_ = &visit;
  stats_ = {};
  family_ = f;
  SubsetMask singletons = 0;
  for (SubsetMask m : f.members()) {
    if (cardinality(m) == 1) singletons |= m;
  }
  const int first = cardinality(f.last()) == 1 ? std::countr_zero(f.last()) + 1 : 0;
  descend_singletons(first, singletons, group);
  visit_ = nullptr;
  return stats_.nodes;
}

// The current node has been visited. same_level_group fixes every member
// larger than |last|; own_group is Aut of the current node.
void Enumerator::descend(std::span<const PermIndex> same_level_group, std::span<const PermIndex> own_group) {
  const SubsetMask last = family_.last();
  const int last_size = cardinality(last);
  const int child_depth = family_.depth() + 1;
  std::vector<PermIndex>& child_group = groups_[child_depth];

  for (int size = std::min(last_size, ctx_.n() - 1); size >= 1; --size) {
    const auto group = size == last_size ? same_level_group : own_group;
    if (size == 1 && options_.singleton_fast_path) {
      SubsetMask singletons = 0;
      for (SubsetMask m : family_.members()) {
        if (cardinality(m) == 1) singletons |= m;
      }
      const int first = last_size == 1 ? std::countr_zero(last) + 1 : 0;
      descend_singletons(first, singletons, group);
      return;
    }
    auto candidates = ctx_.subsets_of_size(size);
    if (size == last_size) candidates = candidates.subspan(std::upper_bound(candidates.begin(), candidates.end(), last) - candidates.begin());
    for (SubsetMask a : candidates) {
      if (!family_.can_extend(a)) continue;
      family_.push(a);
      if (canonical_step(ctx_, family_, group, child_group) && admit_child(child_depth)) {
        emit(child_group.size(), false);
        descend(group, child_group);
      }
      family_.pop();
    }
  }
}

// Only singletons remain, so the group used for the canonicity decision never
// changes and Aut of each child is counted rather than stored.
void Enumerator::descend_singletons(int first_element, SubsetMask singletons, std::span<const PermIndex> group) {
  const auto perms = ctx_.permutations();
  const int child_depth = family_.depth() + 1;
  for (int e = first_element; e < ctx_.n(); ++e) {
    const SubsetMask a = SubsetMask{1} << e;
    if (!family_.can_extend(a)) continue;
    const SubsetMask elements = singletons | a;
    bool canonical = true;
    std::uint64_t automorphisms = 0;
    if (group.size() <= 1) {
      automorphisms = 1;
    } else {
      for (PermIndex i : group) {
        const SubsetMask image = perms[i].apply(elements);
        const SubsetMask diff = image ^ elements;
        if (diff == 0) {
          ++automorphisms;
        } else if (image & diff & (~diff + 1)) {
          canonical = false;
          break;
        }
      }
    }
    if (!canonical || !admit_child(child_depth)) continue;
    family_.push_unreduced(a);
    emit(automorphisms, true);
    descend_singletons(e + 1, elements, group);
    family_.pop();
  }
}

std::uint64_t enumerate(int n, const Visitor& visit, std::span<const SplitSpec> splits) {
  EnumerateOptions options;
  options.splits.assign(splits.begin(), splits.end());
  return Enumerator(n, std::move(options)).run(visit).nodes;
}

ClassCounts count_with_automorphisms(int n, std::span<const SplitSpec> splits) {
  const std::uint64_t order = universe(n).permutations().size();
  UInt128 labeled = 0;
  ClassCounts out;
  out.classes = enumerate(n, [&](const Family&, std::uint64_t aut) { labeled += order / aut; }, splits);
  out.labeled = to_bigint(labeled);
  return out;
}

}  // namespace ucs
