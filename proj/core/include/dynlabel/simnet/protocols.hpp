#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dynlabel/simnet/tree_network.hpp"
#include "dynlabel/types.hpp"

namespace dynlabel::simnet {

/// Snapshot of a connected subtree, nodes in preorder (children by ascending port).
struct Subtree {
  std::vector<NodeId> nodes;
  std::vector<int> parent;                 // index into nodes, -1 at the root
  std::vector<std::vector<int>> children;  // indices, port order

  NodeId root() const { return nodes.front(); }
  std::size_t size() const { return nodes.size(); }
};

/// Which child ports of a node lead into the subtree. May itself send messages.
using EdgeFilter = std::function<std::vector<PortNumber>(NodeId)>;

/// Every child port, no messages.
EdgeFilter all_children(const TreeNetwork& net);

/// Broadcast from `root` along the filtered edges and convergecast the results back.
/// Charges exactly 2(m-1) messages. `value` gives each node's own contribution,
/// `combine` folds children into the parent. Out-parameter `shape` receives the subtree.
std::uint64_t broadcast_convergecast(TreeNetwork& net, NodeId root, const EdgeFilter& filter,
                                     const std::function<std::uint64_t(NodeId)>& value,
                                     const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& combine,
                                     Subtree* shape = nullptr);

/// Collects the subtree shape without sending anything.
Subtree snapshot_subtree(const TreeNetwork& net, NodeId root, const EdgeFilter& filter);

/// m-1 messages, parent to child along every subtree edge.
void charge_broadcast(TreeNetwork& net, const Subtree& st);
/// m-1 messages, child to parent along every subtree edge.
void charge_convergecast(TreeNetwork& net, const Subtree& st);

}  // namespace dynlabel::simnet
