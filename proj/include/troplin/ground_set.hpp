#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "troplin/semifield.hpp"

namespace troplin {

// Subsets of a ground set are bitmasks: bit i corresponds to the i-th label.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Visits the size-k submasks of `mask` in increasing numeric order.
template <typename Fn>
void for_each_subset_of_size(Mask mask, int k, Fn&& fn) {
  if (k < 0) return;
  if (k == 0) {
    fn(Mask{0});
    return;
  }
  int positions[64];
  int t = 0;
  for (Mask m = mask; m != 0; m &= m - 1) positions[t++] = std::countr_zero(m);
  if (k > t) return;
  // Gosper's hack over the compacted index space; the bit scatter back onto
  // the original positions is monotone, so masks come out in numeric order.
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << t;
  while (x < limit) {
    Mask out = 0;
    for (std::uint64_t y = x; y != 0; y &= y - 1) out |= Mask{1} << positions[std::countr_zero(y)];
    fn(out);
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

inline std::vector<Mask> subsets_of_size(Mask mask, int k) {
  std::vector<Mask> out;
  for_each_subset_of_size(mask, k, [&](Mask m) { out.push_back(m); });
  return out;
}

// Visits every submask of `mask` (including 0 and mask itself), ascending.
template <typename Fn>
void for_each_submask(Mask mask, Fn&& fn) {
  Mask s = 0;
  while (true) {
    fn(s);
    if (s == mask) break;
    s = (s - mask) & mask;  // next submask in increasing order
  }
}

// An ordered list of distinct element labels. A disjoint union E ⊔ F keeps
// both orders with E before F; masks index into the label order.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  GroundSet(std::initializer_list<std::string> labels)
      : GroundSet(std::vector<std::string>(labels)) {}

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label; throws DomainError if absent.
  int index(std::string_view label) const;
  bool contains(std::string_view label) const;

  Mask full_mask() const {
    return size() == 0 ? 0 : (Mask{1} << size()) - 1;
  }
  Mask mask_of(const std::vector<std::string>& labels) const;

  std::vector<std::string> labels_of(Mask m) const;
  // Comma-joined labels of a subset, in ground order ("1,3").
  std::string subset_key(Mask m) const;
  Mask parse_subset_key(std::string_view key) const;

  GroundSet disjoint_union(const GroundSet& other) const;
  // The ground set consisting of the labels of `m`, in order.
  GroundSet restrict(Mask m) const;
  // Every label suffixed (used for the two labeled copies in stable sums).
  GroundSet suffixed(std::string_view suffix) const;

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
};

// Convenience for tests and small construction sites: labels "1".."n".
GroundSet numbered_ground_set(int n, int first = 1);

}  // namespace troplin
