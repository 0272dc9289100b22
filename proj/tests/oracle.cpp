#include "oracle.hpp"

#include <algorithm>

namespace ucs::oracle {

namespace {

bool contains(const MaskList& v, SubsetMask m) { return std::find(v.begin(), v.end(), m) != v.end(); }

// Relabel element i to images[i] bit by bit; avoids the permutation tables.
SubsetMask relabel(const std::vector<int>& images, SubsetMask m) {
  SubsetMask out = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if ((m >> i) & 1) out |= SubsetMask{1} << images[i];
  }
  return out;
}

bool subset_order(SubsetMask a, SubsetMask b) {
  const int ca = std::popcount(a), cb = std::popcount(b);
  return ca != cb ? ca > cb : a < b;
}

}  // namespace

std::vector<MaskList> labeled_union_closed(int n) {
  const SubsetMask omega = (SubsetMask{1} << n) - 1;
  std::vector<SubsetMask> middle;
  for (SubsetMask m = 1; m < omega; ++m) middle.push_back(m);
  std::vector<MaskList> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    MaskList family{omega, 0};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((pick >> i) & 1) family.push_back(middle[i]);
    }
    bool closed = true;
    for (SubsetMask a : family) {
      for (SubsetMask b : family) closed = closed && contains(family, a | b);
    }
    if (!closed) continue;
    family.erase(std::remove(family.begin(), family.end(), SubsetMask{0}), family.end());
    std::sort(family.begin(), family.end(), subset_order);
    out.push_back(std::move(family));
  }
  return out;
}

std::vector<MaskList> labeled_intersection_closed(int n) {
  const SubsetMask omega = (SubsetMask{1} << n) - 1;
  std::vector<SubsetMask> rest;
  for (SubsetMask m = 0; m < omega; ++m) rest.push_back(m);
  std::vector<MaskList> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << rest.size()); ++pick) {
    MaskList family{omega};
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if ((pick >> i) & 1) family.push_back(rest[i]);
    }
    bool closed = true;
    for (SubsetMask a : family) {
      for (SubsetMask b : family) closed = closed && contains(family, a & b);
    }
    if (!closed) continue;
    std::sort(family.begin(), family.end(), subset_order);
    out.push_back(std::move(family));
  }
  return out;
}

MaskList orbit_minimum(int n, const MaskList& masks) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  MaskList best;
  do {
    MaskList image;
    for (SubsetMask m : masks) image.push_back(relabel(images, m));
    std::sort(image.begin(), image.end(), subset_order);
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

std::vector<PermIndex> level_stabilizer(int n, const MaskList& members, int min_size) {
  MaskList upper;
  for (SubsetMask m : members) {
    if (std::popcount(m) >= min_size) upper.push_back(m);
  }
  std::sort(upper.begin(), upper.end());
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<PermIndex> out;
  PermIndex index = 0;
  // Same lexicographic order of images as UniverseContext.
  do {
    MaskList image;
    for (SubsetMask m : upper) image.push_back(relabel(images, m));
    std::sort(image.begin(), image.end());
    if (image == upper) out.push_back(index);
    ++index;
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace ucs::oracle
