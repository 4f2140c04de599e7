#pragma once

#include <memory>
#include <vector>

#include "positroid/label.hpp"
#include "positroid/mask.hpp"

namespace positroid {

// Strictly increasing sequence of rational labels; the total order on labels
// is the ground order everything else refers to.  Immutable, cheap to copy.
class GroundSet {
 public:
  GroundSet();
  // Throws InvalidGround unless strictly ascending, GroundTooLarge above 64.
  explicit GroundSet(std::vector<Label> ascending);

  // Labels 1..n.
  [[nodiscard]] static GroundSet range(std::size_t n);

  [[nodiscard]] std::size_t size() const { return labels_->size(); }
  [[nodiscard]] bool empty() const { return labels_->empty(); }
  [[nodiscard]] const Label& label(std::size_t i) const { return (*labels_)[i]; }
  [[nodiscard]] const std::vector<Label>& labels() const { return *labels_; }

  [[nodiscard]] bool contains(const Label& v) const;
  // Throws LabelNotInGround.
  [[nodiscard]] std::size_t index_of(const Label& v) const;

  [[nodiscard]] Mask mask_of(const std::vector<Label>& subset) const;
  [[nodiscard]] std::vector<Label> labels_of(Mask m) const;
  [[nodiscard]] Mask all() const { return full_mask(size()); }

  bool operator==(const GroundSet& other) const;
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<Label>> labels_;
};

// Sorted union; throws OverlappingGrounds when require_disjoint is set.
[[nodiscard]] GroundSet merge_grounds(const GroundSet& a, const GroundSet& b,
                                      bool require_disjoint);

}  // namespace positroid
