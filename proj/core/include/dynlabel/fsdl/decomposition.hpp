#pragma once

#include <cstdint>
#include <vector>

#include "dynlabel/fsdl/scheme_state.hpp"
#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::fsdl {

/// Ground truth of the subtree decomposition, computed from root flags and parent
/// pointers with no messages. Used by Reset's self-checks and the invariant scanner.
class DecompositionView {
 public:
  DecompositionView(const simnet::TreeNetwork& net, const StateStore& store) : net_(net), store_(store) {}

  /// Nearest ancestor-or-self flagged at level l.
  NodeId level_root(NodeId v, std::uint32_t l) const;
  /// Ports of v's children that stay in T_l(v).
  std::vector<PortNumber> level_child_ports(NodeId v, std::uint32_t l) const;
  /// Members of T_l(y), y flagged at l, in preorder.
  std::vector<NodeId> members(NodeId y, std::uint32_t l) const;

 private:
  const simnet::TreeNetwork& net_;
  const StateStore& store_;
};

}  // namespace dynlabel::fsdl
