#include "dynlabel/dynamic/backups.hpp"

#include <algorithm>
#include <string>

namespace dynlabel::dynamic {

namespace {

/// Child after `port` in the ring of `kids` (ascending ports), `port` itself excluded.
PortNumber ring_next(const std::vector<PortNumber>& kids, PortNumber port) {
  auto it = std::upper_bound(kids.begin(), kids.end(), port);
  return it == kids.end() ? kids.front() : *it;
}

PortNumber ring_previous(const std::vector<PortNumber>& kids, PortNumber port) {
  auto it = std::lower_bound(kids.begin(), kids.end(), port);
  return it == kids.begin() ? kids.back() : *std::prev(it);
}

/// Relays one copy from `from` through the parent `v` to `to`.
void relay_via_parent(simnet::TreeNetwork& net, NodeId from, NodeId v, NodeId to) {
  if (from != v) net.send(from, net.parent_port(from));
  if (to != v) net.send(v, net.port_to(v, to));
}

}  // namespace

NodeId next_sibling(const simnet::TreeNetwork& net, NodeId u) {
  const NodeId v = net.parent(u);
  const std::vector<PortNumber> kids = net.child_ports(v);
  return *net.neighbor_via(v, ring_next(kids, net.port_at_parent(u)));
}

NodeId previous_sibling(const simnet::TreeNetwork& net, NodeId u) {
  const NodeId v = net.parent(u);
  const std::vector<PortNumber> kids = net.child_ports(v);
  return *net.neighbor_via(v, ring_previous(kids, net.port_at_parent(u)));
}

std::vector<BackupCopy>& BackupStore::slot(NodeId v) {
  if (v.index() >= held_.size()) held_.resize(v.index() + 1);
  return held_[v.index()];
}

const std::vector<BackupCopy>& BackupStore::held_by(NodeId v) const {
  static const std::vector<BackupCopy> none;
  return v.index() < held_.size() ? held_[v.index()] : none;
}

void BackupStore::clear() { held_.clear(); }

void BackupStore::store_copy(const simnet::TreeNetwork& net, NodeId holder, NodeId subject,
                             const fsdl::SchemeState& memory) {
  std::vector<BackupCopy>& copies = slot(holder);
  const bool as_parent = net.parent(subject) == holder;
  // A parent keeps one copy of a child; a sibling keeps one copy of a sibling.
  std::erase_if(copies, [&](const BackupCopy& c) {
    if (as_parent) return net.parent(c.subject) == holder;
    return c.subject != holder && net.parent(c.subject) == net.parent(holder);
  });
  copies.push_back(BackupCopy{subject, memory});
}

void BackupStore::on_child_added(simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v, NodeId u) {
  if (net.child_count(v) < 2) return;
  const NodeId pre = previous_sibling(net, u);
  // v no longer backs up its former only child; that copy moves to a sibling.
  if (net.child_count(v) == 2) std::erase_if(slot(v), [pre](const BackupCopy& c) { return c.subject == pre; });
  relay_via_parent(net, pre, v, u);
  store_copy(net, u, pre, store.at(pre));
}

fsdl::SchemeState BackupStore::retrieve(simnet::TreeNetwork& net, NodeId v, NodeId u, PortNumber port) const {
  const std::vector<PortNumber> kids = net.child_ports(v);
  NodeId holder = v;
  if (!kids.empty()) {
    holder = *net.neighbor_via(v, ring_next(kids, port));
    net.send(v, net.port_to(v, holder));
    net.send(holder, net.parent_port(holder));
  }
  for (const BackupCopy& c : held_by(holder)) {
    if (c.subject == u) return c.memory;
  }
  throw InvariantViolation("no backup of node " + to_string(u) + " at " + to_string(holder));
}

void BackupStore::on_child_removed(simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v, NodeId u,
                                   PortNumber port) {
  if (u.index() < held_.size()) held_[u.index()].clear();
  std::erase_if(slot(v), [u](const BackupCopy& c) { return c.subject == u; });
  const std::vector<PortNumber> kids = net.child_ports(v);
  if (kids.empty()) return;
  const NodeId next = *net.neighbor_via(v, ring_next(kids, port));
  std::erase_if(slot(next), [u](const BackupCopy& c) { return c.subject == u; });
  if (kids.size() == 1) {
    net.send(next, net.parent_port(next));
    store_copy(net, v, next, store.at(next));
    return;
  }
  const NodeId pre = *net.neighbor_via(v, ring_previous(kids, port));
  relay_via_parent(net, pre, v, next);
  store_copy(net, next, pre, store.at(pre));
}

std::vector<NodeId> BackupStore::flush(simnet::TreeNetwork& net, const fsdl::StateStore& store,
                                       const std::vector<NodeId>& changed) {
  std::vector<NodeId> holders;
  for (NodeId u : changed) {
    if (!net.alive(u) || u == net.root()) continue;
    const NodeId v = net.parent(u);
    const NodeId holder = net.child_count(v) == 1 ? v : next_sibling(net, u);
    relay_via_parent(net, u, v, holder);
    store_copy(net, holder, u, store.at(u));
    holders.push_back(holder);
  }
  return holders;
}

}  // namespace dynlabel::dynamic
