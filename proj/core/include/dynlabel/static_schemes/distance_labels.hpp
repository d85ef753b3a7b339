#pragma once

#include <cstdint>
#include <vector>

#include "dynlabel/static_schemes/static_scheme.hpp"

namespace dynlabel::static_schemes {

/// One centroid level of a distance label.
struct SeparatorEntry {
  std::uint64_t separator = 0;  // preorder index of the separator within the invocation
  std::uint64_t distance = 0;
  bool operator==(const SeparatorEntry&) const = default;
};

struct DistanceLabel {
  std::uint64_t depth = 0;  // absolute depth in the whole tree
  std::vector<SeparatorEntry> levels;
  bool operator==(const DistanceLabel&) const = default;
};

BitString encode_distance_label(const DistanceLabel& label);
DistanceLabel decode_distance_label(const BitString& bits);

/// Recursive centroid decomposition of `st` viewed as an unrooted tree. Centroid ties go
/// to the smallest NodeId. `depth_of` supplies absolute depths.
std::vector<DistanceLabel> centroid_labels(const simnet::Subtree& st, const std::vector<std::uint64_t>& depth);

std::uint64_t label_distance(const DistanceLabel& u, const DistanceLabel& v);

/// Distance labels; with `SeparationLevel` the decoder returns the NCA depth instead.
class DistanceScheme final : public StaticScheme {
 public:
  explicit DistanceScheme(functions::FunctionKind kind);

  std::string_view name() const override;
  functions::FunctionKind function() const override { return kind_; }
  std::vector<BitString> mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const override;
  functions::FValue decode(const BitString& lu, const BitString& lv) const override;
  std::uint64_t mc_budget(std::uint64_t m) const override { return m == 0 ? 0 : 3 * (m - 1); }
  std::uint64_t ls_budget(const LabelContext& ctx) const override;

 private:
  functions::FunctionKind kind_;
};

}  // namespace dynlabel::static_schemes
