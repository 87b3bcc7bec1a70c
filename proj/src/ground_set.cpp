#include "troplin/ground_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace troplin {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 62) throw DomainError("ground set too large (limit 62 elements)");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("empty ground set label");
    if (!seen.insert(l).second) throw DomainError("duplicate ground set label: " + l);
  }
}

int GroundSet::index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw DomainError("label not in ground set: " + std::string(label));
}

bool GroundSet::contains(std::string_view label) const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [&](const std::string& l) { return l == label; });
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Mask{1} << index(l);
  return m;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (Mask x = m; x != 0; x &= x - 1) out.push_back(labels_[static_cast<std::size_t>(std::countr_zero(x))]);
  return out;
}

std::string GroundSet::subset_key(Mask m) const {
  std::string out;
  bool first = true;
  for (Mask x = m; x != 0; x &= x - 1) {
    if (!first) out += ',';
    out += labels_[static_cast<std::size_t>(std::countr_zero(x))];
    first = false;
  }
  return out;
}

Mask GroundSet::parse_subset_key(std::string_view key) const {
  Mask m = 0;
  std::size_t start = 0;
  if (key.empty()) return 0;
  while (true) {
    std::size_t comma = key.find(',', start);
    std::string_view part = key.substr(start, comma == std::string_view::npos ? comma : comma - start);
    Mask bit = Mask{1} << index(part);
    if (m & bit) throw DomainError("repeated label in subset: " + std::string(part));
    m |= bit;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return m;
}

GroundSet GroundSet::disjoint_union(const GroundSet& other) const {
  std::vector<std::string> labels = labels_;
  labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
  return GroundSet(std::move(labels));  // constructor re-checks distinctness
}

GroundSet GroundSet::restrict(Mask m) const {
  return GroundSet(labels_of(m));
}

GroundSet GroundSet::suffixed(std::string_view suffix) const {
  std::vector<std::string> labels;
  labels.reserve(labels_.size());
  for (const auto& l : labels_) labels.push_back(l + std::string(suffix));
  return GroundSet(std::move(labels));
}

GroundSet numbered_ground_set(int n, int first) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels));
}

}  // namespace troplin
