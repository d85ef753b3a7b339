#include "dynlabel/fsdl/decomposition.hpp"

#include <string>

namespace dynlabel::fsdl {

NodeId DecompositionView::level_root(NodeId v, std::uint32_t l) const {
  for (NodeId x = v; x.valid(); x = net_.parent(x)) {
    if (store_.at(x).flagged(l)) return x;
  }
  throw InvariantViolation("no level-" + std::to_string(l) + " root above node " + to_string(v));
}

std::vector<PortNumber> DecompositionView::level_child_ports(NodeId v, std::uint32_t l) const {
  std::vector<PortNumber> out;
  for (PortNumber p : net_.child_ports(v)) {
    const NodeId c = *net_.neighbor_via(v, p);
    if (!store_.at(c).flagged(l)) out.push_back(p);
  }
  return out;
}

std::vector<NodeId> DecompositionView::members(NodeId y, std::uint32_t l) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{y};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto ports = level_child_ports(v, l);
    for (auto it = ports.rbegin(); it != ports.rend(); ++it) stack.push_back(*net_.neighbor_via(v, *it));
  }
  return out;
}

}  // namespace dynlabel::fsdl
