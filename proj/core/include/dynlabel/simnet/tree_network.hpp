#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "dynlabel/types.hpp"

namespace dynlabel::simnet {

enum class PortModel { Designer, Adversary };

/// Picks the port number a node uses for a new link. `in_use` lists the ports
/// currently present at `at`, ascending. The result must not be in `in_use`.
using PortChooser = std::function<PortNumber(NodeId at, const std::vector<PortNumber>& in_use)>;

/// Smallest free port number, starting at 1.
PortChooser smallest_free_ports();

/// Seeded adversary: uniform distinct values in [0, cap]. Throws TopologyError when a
/// node has exhausted the range.
PortChooser random_adversary_ports(std::uint64_t seed, std::uint64_t cap);

/// Observer for topology events. The network calls it after the mutation.
class TopologyListener {
 public:
  virtual ~TopologyListener() = default;
  virtual void on_leaf_added(NodeId parent, NodeId leaf) = 0;
  virtual void on_leaf_removed(NodeId parent, NodeId leaf) = 0;
};

/// Rooted tree of simulated processors. Node 0 is the root and never leaves.
class TreeNetwork {
 public:
  explicit TreeNetwork(PortModel model = PortModel::Designer, PortChooser chooser = {});

  PortModel port_model() const { return model_; }
  NodeId root() const { return NodeId{0}; }

  /// Total nodes ever created, dead ones included.
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  bool exists(NodeId v) const { return v.valid() && v.index() < nodes_.size(); }
  bool alive(NodeId v) const { return exists(v) && nodes_[v.index()].alive; }

  /// Parent of v; kNoNode for the root. Still answers for dead nodes.
  NodeId parent(NodeId v) const;
  std::uint32_t depth(NodeId v) const;
  std::size_t child_count(NodeId v) const;
  bool is_leaf(NodeId v) const { return child_count(v) == 0; }

  /// Children of v in ascending port order.
  std::vector<NodeId> children(NodeId v) const;
  std::vector<PortNumber> child_ports(NodeId v) const;
  /// Every port present at v (children and parent), ascending.
  std::vector<PortNumber> ports(NodeId v) const;

  /// Port at v's parent that leads to v (kept after v dies).
  PortNumber port_at_parent(NodeId v) const;
  /// Port at v that leads to its parent.
  PortNumber parent_port(NodeId v) const;
  /// Port at v leading to neighbour w.
  PortNumber port_to(NodeId v, NodeId w) const;
  std::optional<NodeId> neighbor_via(NodeId v, PortNumber port) const;

  NodeId add_leaf(NodeId parent);
  void remove_leaf(NodeId leaf);

  /// Renames the ports at v. `rename` maps every current port of v to its new number;
  /// the result must stay pairwise distinct. Purely local, costs nothing.
  void renumber_ports(NodeId v, const std::function<PortNumber(PortNumber)>& rename);

  /// Sends one message from v over the given port. Throws MessageError if the port
  /// does not exist; a port that led to a deleted child also counts as a dead send.
  /// Returns the receiver.
  NodeId send(NodeId from, PortNumber via);
  /// One message per hop from v up to ancestor a.
  void relay_up(NodeId from, NodeId ancestor);

  std::uint64_t messages_sent() const { return messages_; }
  std::uint64_t dead_sends() const { return dead_sends_; }

  void set_listener(TopologyListener* listener) { listener_ = listener; }

  /// Ancestor test on the live tree by walking parent pointers.
  bool is_ancestor_or_self(NodeId a, NodeId v) const;

 private:
  struct Node {
    bool alive = true;
    NodeId parent;
    std::uint32_t depth = 0;
    std::map<PortNumber, NodeId> links;
    std::map<PortNumber, NodeId> retired;  // ports whose child was deleted, until reused
    PortNumber parent_port;
    PortNumber port_at_parent;
  };

  const Node& node(NodeId v) const;
  Node& node(NodeId v);
  PortNumber choose_port(NodeId at);

  PortModel model_;
  PortChooser chooser_;
  std::vector<Node> nodes_;
  std::size_t alive_count_ = 1;
  std::uint64_t messages_ = 0;
  std::uint64_t dead_sends_ = 0;
  TopologyListener* listener_ = nullptr;
};

}  // namespace dynlabel::simnet
