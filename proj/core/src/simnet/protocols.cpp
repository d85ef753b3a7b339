#include "dynlabel/simnet/protocols.hpp"

#include <string>

namespace dynlabel::simnet {

EdgeFilter all_children(const TreeNetwork& net) {
  return [&net](NodeId v) { return net.child_ports(v); };
}

namespace {

Subtree walk(TreeNetwork* sending, const TreeNetwork& net, NodeId root, const EdgeFilter& filter) {
  if (!net.alive(root)) throw TopologyError("subtree root " + to_string(root) + " is not alive");
  Subtree st;
  st.nodes.push_back(root);
  st.parent.push_back(-1);
  st.children.emplace_back();
  // Explicit stack keeps deep chains off the call stack; children visited in port order.
  struct Frame {
    int index;
    std::vector<PortNumber> ports;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back(Frame{0, filter(root)});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.ports.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId v = st.nodes[top.index];
    const PortNumber port = top.ports[top.next++];
    auto child = net.neighbor_via(v, port);
    if (!child || *child == net.parent(v)) {
      throw TopologyError("edge filter at " + to_string(v) + " selected a non-child port");
    }
    if (sending) sending->send(v, port);
    const int idx = static_cast<int>(st.nodes.size());
    st.nodes.push_back(*child);
    st.parent.push_back(top.index);
    st.children.emplace_back();
    st.children[top.index].push_back(idx);
    stack.push_back(Frame{idx, filter(*child)});
  }
  return st;
}

}  // namespace

Subtree snapshot_subtree(const TreeNetwork& net, NodeId root, const EdgeFilter& filter) {
  return walk(nullptr, net, root, filter);
}

std::uint64_t broadcast_convergecast(TreeNetwork& net, NodeId root, const EdgeFilter& filter,
                                     const std::function<std::uint64_t(NodeId)>& value,
                                     const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& combine,
                                     Subtree* shape) {
  Subtree st = walk(&net, net, root, filter);
  std::vector<std::uint64_t> acc(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) acc[i] = value(st.nodes[i]);
  // Preorder reversed visits every child before its parent.
  for (std::size_t i = st.size(); i-- > 1;) {
    net.send(st.nodes[i], net.parent_port(st.nodes[i]));
    const auto p = static_cast<std::size_t>(st.parent[i]);
    acc[p] = combine(acc[p], acc[i]);
  }
  const std::uint64_t total = acc[0];
  if (shape) *shape = std::move(st);
  return total;
}

void charge_broadcast(TreeNetwork& net, const Subtree& st) {
  for (std::size_t i = 1; i < st.size(); ++i) {
    const NodeId parent = st.nodes[static_cast<std::size_t>(st.parent[i])];
    net.send(parent, net.port_to(parent, st.nodes[i]));
  }
}

void charge_convergecast(TreeNetwork& net, const Subtree& st) {
  for (std::size_t i = st.size(); i-- > 1;) net.send(st.nodes[i], net.parent_port(st.nodes[i]));
}

}  // namespace dynlabel::simnet
