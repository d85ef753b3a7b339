#include "dynlabel/harness/invariants.hpp"

#include <algorithm>
#include <string>

#include "dynlabel/dynamic/backups.hpp"

namespace dynlabel::harness {

namespace {

std::vector<NodeId> alive_in_id_order(const simnet::TreeNetwork& net) {
  std::vector<NodeId> out;
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    if (net.alive(NodeId{i})) out.emplace_back(i);
  }
  return out;
}

void scan_structure(const fsdl::Engine& engine, const std::vector<NodeId>& nodes, std::vector<std::string>& out) {
  const simnet::TreeNetwork& net = engine.network();
  const fsdl::StateStore& store = engine.store();
  const std::uint32_t p = engine.levels();
  for (NodeId v : nodes) {
    const std::string who = "node " + to_string(v);
    if (v != net.root()) {
      const NodeId u = net.parent(v);
      if (!net.alive(u)) out.push_back(who + " has a dead parent");
      if (net.depth(v) != net.depth(u) + 1) out.push_back(who + " has an inconsistent depth");
      if (net.neighbor_via(u, net.port_at_parent(v)) != v) out.push_back(who + " is not behind its parent's port");
      if (net.neighbor_via(v, net.parent_port(v)) != u) out.push_back(who + " lost the port to its parent");
    }
    const fsdl::SchemeState& s = store.at(v);
    if (s.levels() != p) {
      out.push_back(who + " has " + std::to_string(s.levels()) + " levels, expected " + std::to_string(p));
      continue;
    }
    if (v == net.root()) {
      for (std::uint32_t l = 1; l <= p; ++l) {
        if (!s.flagged(l)) out.push_back("root is not flagged at level " + std::to_string(l));
      }
    }
    for (std::uint32_t l = 2; l <= p; ++l) {
      if (s.flagged(l) && !s.flagged(l - 1)) {
        out.push_back(who + " roots level " + std::to_string(l) + " but not level " + std::to_string(l - 1));
      }
    }
    for (std::uint32_t l = 1; l <= p; ++l) {
      if (s.flagged(l) && s.instance[l - 1].mu >= engine.k() && !(v == net.root() && l == p && engine.terminated())) {
        out.push_back(who + " has mu_" + std::to_string(l) + " >= k");
      }
    }
    try {
      engine.bookkeeping().check(net, store, v);
    } catch (const InvariantViolation& e) {
      out.emplace_back(e.what());
    }
  }
}

}  // namespace

void scan_copy_invariants(const fsdl::Engine& engine, std::vector<std::string>& out) {
  const dynamic::BackupStore* backups = engine.backups();
  if (!backups) return;
  const simnet::TreeNetwork& net = engine.network();
  for (NodeId v : alive_in_id_order(net)) {
    const auto& held = backups->held_by(v);
    if (held.size() > 2) out.push_back("node " + to_string(v) + " holds " + std::to_string(held.size()) + " copies");
    const std::vector<NodeId> kids = net.children(v);
    for (NodeId u : kids) {
      const NodeId holder = kids.size() == 1 ? v : dynamic::next_sibling(net, u);
      const auto& at = backups->held_by(holder);
      auto it = std::find_if(at.begin(), at.end(), [u](const dynamic::BackupCopy& c) { return c.subject == u; });
      if (it == at.end()) {
        out.push_back("no copy of node " + to_string(u) + " at " + to_string(holder));
      } else if (it->memory != engine.store().at(u)) {
        out.push_back("copy of node " + to_string(u) + " at " + to_string(holder) + " is stale");
      }
    }
  }
}

void scan_omega_invariant(const fsdl::Engine& engine, std::vector<std::string>& out) {
  if (!engine.tracks_omega()) return;
  const simnet::TreeNetwork& net = engine.network();
  const fsdl::StateStore& store = engine.store();
  const std::vector<NodeId> nodes = alive_in_id_order(net);
  std::vector<NodeId> root_of(net.node_count());
  std::vector<std::uint64_t> sum(net.node_count(), 0);
  for (std::uint32_t l = 1; l <= engine.levels(); ++l) {
    // Parents precede children in id order.
    for (NodeId v : nodes) {
      const NodeId r = store.at(v).flagged(l) || v == net.root() ? v : root_of[net.parent(v).index()];
      root_of[v.index()] = r;
      sum[r.index()] += store.at(v).omega.at(l - 1);
    }
    for (NodeId v : nodes) {
      if (root_of[v.index()] != v) continue;
      const std::uint64_t ever = engine.ever_count(v, l);
      if (sum[v.index()] != ever) {
        out.push_back("T_" + std::to_string(l) + "(" + to_string(v) + "): omega sum " + std::to_string(sum[v.index()]) +
                      " but " + std::to_string(ever) + " nodes ever joined");
      }
      sum[v.index()] = 0;
    }
  }
}

void scan_invariants(const fsdl::Engine& engine, std::vector<std::string>& out) {
  const std::vector<NodeId> nodes = alive_in_id_order(engine.network());
  scan_structure(engine, nodes, out);
  scan_copy_invariants(engine, out);
  scan_omega_invariant(engine, out);
}

}  // namespace dynlabel::harness
