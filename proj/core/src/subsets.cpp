#include "ucs/subsets.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ucs {

namespace {

void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw std::invalid_argument("universe size must be in [1, " + std::to_string(kMaxUniverse) +
                                "], got " + std::to_string(n));
  }
}

}  // namespace

SubsetMask encode(std::span<const int> elements, int n) {
  check_universe(n);
  SubsetMask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("element " + std::to_string(e) + " outside {1.." +
                                  std::to_string(n) + "}");
    }
    m |= SubsetMask{1} << (e - 1);
  }
  return m;
}

std::vector<int> decode(SubsetMask m) {
  std::vector<int> out;
  for (int i = 0; m >> i; ++i) {
    if ((m >> i) & 1) out.push_back(i + 1);
  }
  return out;
}

Permutation::Permutation(std::span<const std::uint8_t> images) : size_(static_cast<int>(images.size())) {
  check_universe(size_);
  std::array<bool, kMaxUniverse> seen{};
  for (int i = 0; i < size_; ++i) {
    if (images[i] >= size_ || seen[images[i]]) throw std::invalid_argument("images are not a bijection");
    seen[images[i]] = true;
    images_[i] = images[i];
  }
  for (SubsetMask m = 0; m < (SubsetMask{1} << size_); ++m) action_[m] = static_cast<std::uint8_t>(apply_slow(m));
}

SubsetMask Permutation::apply_slow(SubsetMask m) const {
  SubsetMask out = 0;
  for (int i = 0; i < size_; ++i) {
    if ((m >> i) & 1) out |= SubsetMask{1} << images_[i];
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size_ != q.size_) throw std::invalid_argument("composing permutations of different degree");
  std::array<std::uint8_t, kMaxUniverse> images{};
  for (int i = 0; i < p.size_; ++i) images[i] = p.images_[q.images_[i]];
  return Permutation({images.data(), static_cast<std::size_t>(p.size_)});
}

UniverseContext::UniverseContext(int n) : n_(n) {
  check_universe(n);
  std::array<std::uint8_t, kMaxUniverse> images{};
  std::iota(images.begin(), images.begin() + n, std::uint8_t{0});
  do {
    perms_.emplace_back(std::span<const std::uint8_t>(images.data(), static_cast<std::size_t>(n)));
  } while (std::next_permutation(images.begin(), images.begin() + n));
  all_indices_.resize(perms_.size());
  std::iota(all_indices_.begin(), all_indices_.end(), PermIndex{0});

  ordered_.resize(std::size_t{1} << n);
  std::iota(ordered_.begin(), ordered_.end(), SubsetMask{0});
  std::sort(ordered_.begin(), ordered_.end(), order_less);
  for (std::size_t r = 0; r < ordered_.size(); ++r) rank_[ordered_[r]] = static_cast<int>(r);
  for (SubsetMask m = 0; m <= omega(); ++m) by_size_[cardinality(m)].push_back(m);
}

const UniverseContext& universe(int n) {
  check_universe(n);
  static std::array<std::unique_ptr<UniverseContext>, kMaxUniverse + 1> cache;
  static std::array<std::once_flag, kMaxUniverse + 1> flags;
  std::call_once(flags[n], [n] { cache[n] = std::make_unique<UniverseContext>(n); });
  return *cache[n];
}

}  // namespace ucs
