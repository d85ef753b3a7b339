#include "dynlabel/simnet/tree_network.hpp"

#include <algorithm>
#include <memory>
#include <string>

namespace dynlabel::simnet {

PortChooser smallest_free_ports() {
  return [](NodeId, const std::vector<PortNumber>& in_use) {
    std::uint64_t candidate = 1;
    for (PortNumber p : in_use) {
      if (p.value == candidate) {
        ++candidate;
      } else if (p.value > candidate) {
        break;
      }
    }
    return PortNumber{candidate};
  };
}

PortChooser random_adversary_ports(std::uint64_t seed, std::uint64_t cap) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng, cap](NodeId at, const std::vector<PortNumber>& in_use) {
    if (in_use.size() > cap) {
      throw TopologyError("port range exhausted at node " + to_string(at));
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, cap);
    for (;;) {
      PortNumber p{pick(*rng)};
      if (!std::binary_search(in_use.begin(), in_use.end(), p)) return p;
    }
  };
}

TreeNetwork::TreeNetwork(PortModel model, PortChooser chooser)
    : model_(model), chooser_(chooser ? std::move(chooser) : smallest_free_ports()) {
  nodes_.emplace_back();
}

const TreeNetwork::Node& TreeNetwork::node(NodeId v) const {
  if (!exists(v)) throw TopologyError("unknown node " + to_string(v));
  return nodes_[v.index()];
}

TreeNetwork::Node& TreeNetwork::node(NodeId v) {
  if (!exists(v)) throw TopologyError("unknown node " + to_string(v));
  return nodes_[v.index()];
}

NodeId TreeNetwork::parent(NodeId v) const { return node(v).parent; }
std::uint32_t TreeNetwork::depth(NodeId v) const { return node(v).depth; }

std::size_t TreeNetwork::child_count(NodeId v) const {
  const Node& n = node(v);
  return n.links.size() - (n.parent.valid() && n.alive ? 1 : 0);
}

std::vector<NodeId> TreeNetwork::children(NodeId v) const {
  const Node& n = node(v);
  std::vector<NodeId> out;
  for (const auto& [port, w] : n.links) {
    if (w != n.parent) out.push_back(w);
  }
  return out;
}

std::vector<PortNumber> TreeNetwork::child_ports(NodeId v) const {
  const Node& n = node(v);
  std::vector<PortNumber> out;
  for (const auto& [port, w] : n.links) {
    if (w != n.parent) out.push_back(port);
  }
  return out;
}

std::vector<PortNumber> TreeNetwork::ports(NodeId v) const {
  std::vector<PortNumber> out;
  for (const auto& [port, w] : node(v).links) out.push_back(port);
  return out;
}

PortNumber TreeNetwork::port_at_parent(NodeId v) const {
  const Node& n = node(v);
  if (!n.parent.valid()) throw TopologyError("root has no parent");
  return n.port_at_parent;
}

PortNumber TreeNetwork::parent_port(NodeId v) const {
  const Node& n = node(v);
  if (!n.parent.valid()) throw TopologyError("root has no parent");
  return n.parent_port;
}

PortNumber TreeNetwork::port_to(NodeId v, NodeId w) const {
  const Node& n = node(v);
  if (n.parent == w && n.parent.valid()) return n.parent_port;
  const Node& m = node(w);
  if (m.parent == v) return m.port_at_parent;
  throw TopologyError(to_string(v) + " and " + to_string(w) + " are not neighbours");
}

std::optional<NodeId> TreeNetwork::neighbor_via(NodeId v, PortNumber port) const {
  const Node& n = node(v);
  auto it = n.links.find(port);
  if (it == n.links.end()) return std::nullopt;
  return it->second;
}

PortNumber TreeNetwork::choose_port(NodeId at) {
  std::vector<PortNumber> in_use = ports(at);
  PortNumber p = chooser_(at, in_use);
  if (std::binary_search(in_use.begin(), in_use.end(), p)) {
    throw TopologyError("port chooser returned a port already in use at " + to_string(at));
  }
  return p;
}

NodeId TreeNetwork::add_leaf(NodeId parent) {
  if (!alive(parent)) throw TopologyError("add_leaf: parent " + to_string(parent) + " is not alive");
  const NodeId leaf{static_cast<std::uint32_t>(nodes_.size())};
  const PortNumber down = choose_port(parent);
  nodes_.emplace_back();
  Node& n = nodes_.back();
  n.parent = parent;
  n.depth = nodes_[parent.index()].depth + 1;
  const PortNumber up = choose_port(leaf);
  n.parent_port = up;
  n.port_at_parent = down;
  n.links.emplace(up, parent);
  nodes_[parent.index()].links.emplace(down, leaf);
  nodes_[parent.index()].retired.erase(down);
  ++alive_count_;
  if (listener_) listener_->on_leaf_added(parent, leaf);
  return leaf;
}

void TreeNetwork::remove_leaf(NodeId leaf) {
  if (!alive(leaf)) throw TopologyError("remove_leaf: node " + to_string(leaf) + " is not alive");
  if (leaf == root()) throw TopologyError("remove_leaf: the root is never removed");
  if (!is_leaf(leaf)) throw TopologyError("remove_leaf: node " + to_string(leaf) + " is not a leaf");
  Node& n = nodes_[leaf.index()];
  n.alive = false;
  n.links.clear();
  nodes_[n.parent.index()].links.erase(n.port_at_parent);
  nodes_[n.parent.index()].retired[n.port_at_parent] = leaf;
  --alive_count_;
  if (listener_) listener_->on_leaf_removed(n.parent, leaf);
}

void TreeNetwork::renumber_ports(NodeId v, const std::function<PortNumber(PortNumber)>& rename) {
  Node& n = node(v);
  std::map<PortNumber, NodeId> renamed;
  for (const auto& [port, w] : n.links) {
    const PortNumber q = rename(port);
    if (!renamed.emplace(q, w).second) {
      throw TopologyError("renumbering produced a duplicate port at " + to_string(v));
    }
    if (w == n.parent) {
      n.parent_port = q;
    } else {
      nodes_[w.index()].port_at_parent = q;
    }
  }
  n.links = std::move(renamed);
  std::erase_if(n.retired, [&n](const auto& entry) { return n.links.contains(entry.first); });
}

NodeId TreeNetwork::send(NodeId from, PortNumber via) {
  const Node& n = node(from);
  if (!n.alive) throw MessageError("send from dead node " + to_string(from));
  auto it = n.links.find(via);
  if (it == n.links.end()) {
    if (auto gone = n.retired.find(via); gone != n.retired.end()) {
      ++dead_sends_;
      throw MessageError("message addressed to deleted node " + to_string(gone->second));
    }
    throw MessageError("node " + to_string(from) + " has no port " + std::to_string(via.value));
  }
  ++messages_;
  return it->second;
}

void TreeNetwork::relay_up(NodeId from, NodeId ancestor) {
  NodeId v = from;
  while (v != ancestor) {
    if (!node(v).parent.valid()) {
      throw TopologyError(to_string(ancestor) + " is not an ancestor of " + to_string(from));
    }
    v = send(v, node(v).parent_port);
  }
}

bool TreeNetwork::is_ancestor_or_self(NodeId a, NodeId v) const {
  for (NodeId x = v; x.valid(); x = node(x).parent) {
    if (x == a) return true;
  }
  return false;
}

}  // namespace dynlabel::simnet
