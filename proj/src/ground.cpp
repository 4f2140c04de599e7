#include "positroid/ground.hpp"

#include <algorithm>

#include "positroid/errors.hpp"

namespace positroid {

GroundSet::GroundSet() : labels_(std::make_shared<std::vector<Label>>()) {}

GroundSet::GroundSet(std::vector<Label> ascending) {
  if (ascending.size() > 64)
    throw Error("GroundTooLarge",
                "ground has " + std::to_string(ascending.size()) + " elements, limit is 64");
  for (std::size_t i = 1; i < ascending.size(); ++i)
    if (!(ascending[i - 1] < ascending[i]))
      throw Error("InvalidGround", "labels must be strictly increasing");
  labels_ = std::make_shared<std::vector<Label>>(std::move(ascending));
}

GroundSet GroundSet::range(std::size_t n) {
  std::vector<Label> v;
  v.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) v.emplace_back(static_cast<unsigned long>(i));
  return GroundSet(std::move(v));
}

bool GroundSet::contains(const Label& v) const {
  return std::binary_search(labels_->begin(), labels_->end(), v);
}

std::size_t GroundSet::index_of(const Label& v) const {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), v);
  if (it == labels_->end() || *it != v)
    throw Error("LabelNotInGround", "label " + label_str(v) + " is not a ground element");
  return static_cast<std::size_t>(it - labels_->begin());
}

Mask GroundSet::mask_of(const std::vector<Label>& subset) const {
  Mask m = 0;
  for (const auto& v : subset) m |= Mask{1} << index_of(v);
  return m;
}

std::vector<Label> GroundSet::labels_of(Mask m) const {
  std::vector<Label> out;
  for (auto i : bits_of(m)) out.push_back(label(i));
  return out;
}

bool GroundSet::operator==(const GroundSet& other) const {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

GroundSet merge_grounds(const GroundSet& a, const GroundSet& b, bool require_disjoint) {
  std::vector<Label> merged;
  merged.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a.label(i) < b.label(j))) {
      merged.push_back(a.label(i++));
    } else if (i == a.size() || b.label(j) < a.label(i)) {
      merged.push_back(b.label(j++));
    } else {
      if (require_disjoint)
        throw Error("OverlappingGrounds", "label " + label_str(a.label(i)) + " is in both grounds");
      merged.push_back(a.label(i));
      ++i;
      ++j;
    }
  }
  return GroundSet(std::move(merged));
}

}  // namespace positroid
