#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynlabel/bits.hpp"
#include "dynlabel/functions/tree_function.hpp"
#include "dynlabel/types.hpp"

namespace dynlabel::fsdl {

/// Root-side state of one FSDL instance. `counting` is false while the instance is
/// still in its first step (delegating to the inner instance rooted at the same node).
struct InstanceState {
  bool counting = false;
  std::uint32_t mu = 0;
  bool operator==(const InstanceState&) const = default;
};

/// Memory(v): everything a node keeps besides its label. Vectors indexed by level-1.
struct SchemeState {
  std::vector<std::uint8_t> root_flag;  // size p
  std::vector<InstanceState> instance;  // size p, meaningful where root_flag is set
  std::vector<std::uint64_t> omega;     // size p when ever-counts are tracked, else empty

  // Port bookkeeping, levels 1..p-1.
  std::vector<std::uint64_t> watermark;                  // designer a_l
  std::vector<std::uint64_t> counter;                    // adversary c_l
  std::vector<std::optional<PortNumber>> table;          // Table_l of this node
  std::vector<std::optional<PortNumber>> pointers;       // Pointers_l of this node

  std::uint32_t levels() const { return static_cast<std::uint32_t>(root_flag.size()); }
  bool flagged(std::uint32_t l) const { return root_flag[l - 1] != 0; }
  bool operator==(const SchemeState&) const = default;
};

/// Memory(v) for every node ever created, plus a set of nodes written since the last flush.
class StateStore {
 public:
  SchemeState& at(NodeId v);
  const SchemeState& at(NodeId v) const;
  /// Marks v's memory as written (feeds backups and memory accounting).
  SchemeState& write(NodeId v);
  void ensure(NodeId v);

  std::vector<NodeId> take_dirty();
  std::size_t size() const { return states_.size(); }

 private:
  std::vector<SchemeState> states_;
  std::vector<std::uint8_t> dirty_flag_;
  std::vector<NodeId> dirty_;
};

/// One active label layer: the anchor's static label and F(anchor, node).
struct LabelLayer {
  BitString anchor;
  functions::FValue anchor_to_node;
};

/// The label a node stores. `layers[l-1]` describes level l >= 2 and is empty while the
/// level-l instance has not started counting.
struct LabelState {
  BitString base;
  std::vector<std::optional<LabelLayer>> layers;
  BitString last_static;
  std::uint64_t epoch = 0;
};

}  // namespace dynlabel::fsdl
