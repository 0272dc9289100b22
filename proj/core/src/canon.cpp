#include "ucs/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace ucs {

namespace {

using Bits128 = std::array<std::uint64_t, 2>;

inline void set_bit(Bits128& b, SubsetMask m) { b[m >> 6] |= std::uint64_t{1} << (m & 63); }

// Smallest differing mask decides: if it belongs to the image, the image is
// lexicographically smaller. Valid for two sorted blocks of equal length whose
// masks all have the same cardinality.
inline ImageOrder compare_blocks(const Bits128& original, const Bits128& image) {
  for (int w = 0; w < 2; ++w) {
    const std::uint64_t diff = original[w] ^ image[w];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (image[w] & lowest) ? ImageOrder::smaller : ImageOrder::larger;
    }
  }
  return ImageOrder::equal;
}

// The trailing members of f that share the cardinality of f.last().
std::span<const SubsetMask> last_level(const Family& f) {
  const auto members = f.members();
  const int m = cardinality(f.last());
  std::size_t start = members.size() - 1;
  while (start > 0 && cardinality(members[start - 1]) == m) --start;
  return members.subspan(start);
}

}  // namespace

ImageOrder compare_image(const Permutation& p, const Family& f) {
  const auto members = f.members();
  std::vector<SubsetMask> image(members.size());
  std::transform(members.begin(), members.end(), image.begin(), [&p](SubsetMask m) { return p.apply_slow(m); });
  std::sort(image.begin(), image.end(), order_less);
  const auto [it_image, it_original] = std::mismatch(image.begin(), image.end(), members.begin());
  if (it_image == image.end()) return ImageOrder::equal;
  return *it_image < *it_original ? ImageOrder::smaller : ImageOrder::larger;
}

ImageOrder compare_last_level(const Permutation& p, const Family& f) {
  Bits128 original{};
  Bits128 image{};
  for (SubsetMask m : last_level(f)) {
    set_bit(original, m);
    set_bit(image, p.apply(m));
  }
  return compare_blocks(original, image);
}

bool canonical_step(const UniverseContext& ctx, const Family& f, std::span<const PermIndex> parent_group,
                    std::vector<PermIndex>& stabilizer) {
  stabilizer.clear();
  if (parent_group.size() <= 1) {
    stabilizer.assign(parent_group.begin(), parent_group.end());
    return true;
  }
  const auto level = last_level(f);
  const auto perms = ctx.permutations();

  if (cardinality(f.last()) == 1) {
    // Singletons: the level is described by the union of its elements, and the
    // smallest differing singleton is the lowest differing element.
    SubsetMask elements = 0;
    for (SubsetMask m : level) elements |= m;
    for (PermIndex i : parent_group) {
      const SubsetMask image = perms[i].apply(elements);
      const SubsetMask diff = image ^ elements;
      if (diff == 0) {
        stabilizer.push_back(i);
      } else if (image & diff & (~diff + 1)) {
        return false;
      }
    }
    return true;
  }

  Bits128 original{};
  for (SubsetMask m : level) set_bit(original, m);
  for (PermIndex i : parent_group) {
    const Permutation& p = perms[i];
    Bits128 image{};
    for (SubsetMask m : level) set_bit(image, p.apply(m));
    switch (compare_blocks(original, image)) {
      case ImageOrder::smaller:
        return false;
      case ImageOrder::equal:
        stabilizer.push_back(i);
        break;
      case ImageOrder::larger:
        break;
    }
  }
  return true;
}

CanonResult canonical_step(const UniverseContext& ctx, const Family& f, std::span<const PermIndex> parent_group) {
  CanonResult r;
  r.is_canonical = canonical_step(ctx, f, parent_group, r.group);
  if (!r.is_canonical) r.group.clear();
  return r;
}

bool is_canonical_naive(const UniverseContext& ctx, const Family& f) {
  return std::none_of(ctx.permutations().begin(), ctx.permutations().end(),
                      [&f](const Permutation& p) { return compare_image(p, f) == ImageOrder::smaller; });
}

std::vector<PermIndex> automorphisms_naive(const UniverseContext& ctx, const Family& f) {
  std::vector<PermIndex> out;
  const auto perms = ctx.permutations();
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (compare_image(perms[i], f) == ImageOrder::equal) out.push_back(static_cast<PermIndex>(i));
  }
  return out;
}

std::vector<SubsetMask> canonical_form_naive(const UniverseContext& ctx, std::span<const SubsetMask> masks) {
  std::vector<SubsetMask> best;
  for (const Permutation& p : ctx.permutations()) {
    std::vector<SubsetMask> image;
    for (SubsetMask m : masks) {
      if (m != 0) image.push_back(p.apply_slow(m));
    }
    std::sort(image.begin(), image.end(), order_less);
    if (best.empty() || image < best) best = std::move(image);
  }
  return best;
}

}  // namespace ucs
