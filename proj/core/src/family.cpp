#include "ucs/family.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <stdexcept>

namespace ucs {

int MembershipBitmap::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

Family::Family(int n) : n_(n) {
  if (n < 1 || n > kMaxUniverse) throw std::invalid_argument("universe size must be in [1, 7]");
  const SubsetMask omega = full_mask(n);
  members_[0] = omega;
  member_count_ = 1;
  reduced_[0] = omega;
  reduced_count_ = 1;
  total_elements_ = n;
  membership_.set(0);
  membership_.set(omega);
}

bool Family::can_extend(SubsetMask a) const {
  assert(a != 0 && a != full_mask(n_) && order_less(last(), a));
  for (std::size_t i = 0; i < reduced_count_; ++i) {
    if (!membership_.test(a | reduced_[i])) return false;
  }
  return true;
}

void Family::push(SubsetMask a) {
  std::size_t kept = 0;
  const std::size_t removed_before = removed_count_;
  for (std::size_t i = 0; i < reduced_count_; ++i) {
    const SubsetMask b = reduced_[i];
    if ((b & a) == a) {
      removed_[removed_count_++] = b;
    } else {
      reduced_[kept++] = b;
    }
  }
  reduced_[kept] = a;
  reduced_count_ = kept + 1;
  removed_per_push_[member_count_] = static_cast<std::uint8_t>(removed_count_ - removed_before);
  members_[member_count_++] = a;
  membership_.set(a);
  total_elements_ += cardinality(a);
}

void Family::push_unreduced(SubsetMask a) {
  reduced_[reduced_count_++] = a;
  removed_per_push_[member_count_] = 0;
  members_[member_count_++] = a;
  membership_.set(a);
  total_elements_ += cardinality(a);
}

void Family::pop() {
  assert(member_count_ > 1);
  const SubsetMask a = members_[--member_count_];
  membership_.reset(a);
  total_elements_ -= cardinality(a);
  // Children may have reordered the reduced list, so locate a.
  std::size_t pos = reduced_count_ - 1;
  while (reduced_[pos] != a) --pos;
  reduced_[pos] = reduced_[--reduced_count_];
  const std::size_t k = removed_per_push_[member_count_];
  removed_count_ -= k;
  for (std::size_t i = 0; i < k; ++i) reduced_[reduced_count_++] = removed_[removed_count_ + i];
}

Family base_family(int n) { return Family(n); }

bool can_extend(const Family& f, SubsetMask a) { return f.can_extend(a); }

Family extend(const Family& f, SubsetMask a) {
  Family child = f;
  child.push(a);
  return child;
}

bool brute_force_closed(std::span<const SubsetMask> masks) {
  for (SubsetMask a : masks) {
    for (SubsetMask b : masks) {
      if (std::find(masks.begin(), masks.end(), a | b) == masks.end()) return false;
    }
  }
  return true;
}

std::vector<SubsetMask> compute_reduced(std::span<const SubsetMask> members) {
  std::vector<SubsetMask> out;
  for (SubsetMask a : members) {
    if (a == 0) continue;
    const bool minimal = std::none_of(members.begin(), members.end(), [a](SubsetMask b) {
      return b != 0 && b != a && (b & a) == b;
    });
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), order_less);
  return out;
}

SparsenessReport sparseness(const Family& f) {
  SparsenessReport r;
  r.total_element_count = f.total_elements();
  r.nonempty_set_count = static_cast<int>(f.members().size());
  r.is_sparse = 2 * r.total_element_count <= f.universe_size() * r.nonempty_set_count;
  return r;
}

std::string format_masks(std::span<const SubsetMask> masks) {
  std::string out;
  out.reserve(masks.size() * 3);
  char buf[8];
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i) out.push_back(',');
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, masks[i], 16);
    out.append(buf, end);
  }
  return out;
}

std::string to_string(const Family& f) { return format_masks(f.members()); }

Family parse_family(std::string_view text, int n) {
  Family f(n);
  bool first = true;
  if (text.empty()) throw std::invalid_argument("empty family");
  for (;;) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    SubsetMask m = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), m, 16);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty() || m > full_mask(n)) {
      throw std::invalid_argument("malformed mask '" + std::string(token) + "'");
    }
    if (first) {
      if (m != full_mask(n)) throw std::invalid_argument("family must start with the universe");
      first = false;
    } else {
      if (m == 0 || !order_less(f.last(), m)) throw std::invalid_argument("masks not increasing in subset order");
      if (!f.can_extend(m)) throw std::invalid_argument("family is not union-closed");
      f.push(m);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return f;
}

}  // namespace ucs
