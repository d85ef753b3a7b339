#include "dynlabel/memory/adversary_tables.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dynlabel/fsdl/decomposition.hpp"

namespace dynlabel::memory {

namespace {

/// Collects the children whose memory a step writes; each costs one message.
class Writes {
 public:
  Writes(Context& ctx, NodeId v) : ctx_(ctx), v_(v) {}
  fsdl::SchemeState& child(PortNumber port) {
    const auto c = ctx_.net.neighbor_via(v_, port);
    if (!c || *c == ctx_.net.parent(v_)) {
      throw InvariantViolation("adversary tables: node " + to_string(v_) + " has no child at port " +
                               std::to_string(port.value));
    }
    touched_.insert(port);
    return ctx_.store.write(*c);
  }
  void exempt(PortNumber port) { exempt_.insert(port); }
  /// Sends the messages for every child written.
  void commit() {
    for (PortNumber p : touched_) {
      if (!exempt_.contains(p)) ctx_.net.send(v_, p);
    }
  }

 private:
  Context& ctx_;
  NodeId v_;
  std::set<PortNumber> touched_;
  std::set<PortNumber> exempt_;
};

std::uint64_t port_field_bits(const std::optional<PortNumber>& p) { return 1 + (p ? gamma_length(p->value + 1) : 0); }

}  // namespace

void AdversaryTables::init_fields(fsdl::SchemeState& state, std::uint32_t levels) const {
  state.watermark.clear();
  state.counter.assign(levels - 1, 0);
  state.table.assign(levels - 1, std::nullopt);
  state.pointers.assign(track_pointers_ ? levels - 1 : 0, std::nullopt);
}

void AdversaryTables::on_leaf_joined(Context& ctx, NodeId parent, NodeId leaf) {
  const std::uint32_t below = ctx.levels - 1;
  init_fields(ctx.store.write(leaf), ctx.levels);
  const std::vector<PortNumber> kids = ctx.net.child_ports(parent);
  const PortNumber mine = ctx.net.port_at_parent(leaf);
  const auto j = static_cast<std::uint64_t>(std::lower_bound(kids.begin(), kids.end(), mine) - kids.begin()) + 1;
  Writes w(ctx, parent);
  w.child(mine);  // the leaf learns its initial fields
  fsdl::SchemeState& ps = ctx.store.write(parent);
  for (std::uint32_t l = 1; l <= below; ++l) {
    std::uint64_t& c = ps.counter[l - 1];
    if (j <= c) {
      fsdl::SchemeState& s = w.child(mine);
      s.table[l - 1] = mine;
      if (track_pointers_) s.pointers[l - 1] = mine;
    } else {
      const PortNumber holder = kids[c];
      w.child(holder).table[l - 1] = mine;
      if (track_pointers_) w.child(mine).pointers[l - 1] = holder;
    }
    ++c;
  }
  w.commit();
}

void AdversaryTables::on_leaf_removed(Context& ctx, NodeId parent, PortNumber port, const fsdl::SchemeState& removed) {
  const std::vector<PortNumber> kids = ctx.net.child_ports(parent);  // without the deleted child
  const auto j = static_cast<std::uint64_t>(std::lower_bound(kids.begin(), kids.end(), port) - kids.begin()) + 1;
  fsdl::SchemeState& ps = ctx.store.write(parent);
  Writes w(ctx, parent);
  const std::string where = " deleting child at port " + std::to_string(port.value) + " of " + to_string(parent);
  for (std::uint32_t l = 1; l < ctx.levels; ++l) {
    std::uint64_t& c = ps.counter[l - 1];
    const std::optional<PortNumber> own_pointer =
        track_pointers_ ? removed.pointers.at(l - 1) : std::optional<PortNumber>{};
    if (j <= c) {
      const std::optional<PortNumber> x = removed.table.at(l - 1);
      if (!x) throw InvariantViolation("adversary tables: empty table entry" + where);
      if (*x == port) {
        --c;
      } else if (!own_pointer) {
        const PortNumber last = kids.at(c - 1);
        w.child(last).table[l - 1] = *x;
        if (track_pointers_) w.child(*x).pointers[l - 1] = last;
      } else {
        const PortNumber holder = *own_pointer;
        w.child(holder).table[l - 1] = *x;
        if (track_pointers_) w.child(*x).pointers[l - 1] = holder;
        --c;
      }
    } else if (own_pointer) {
      const PortNumber holder = *own_pointer;
      const PortNumber last = kids.at(c - 1);
      const std::optional<PortNumber> y = ctx.store.at(*ctx.net.neighbor_via(parent, last)).table[l - 1];
      if (!y) throw InvariantViolation("adversary tables: empty last table entry" + where);
      w.child(holder).table[l - 1] = *y;
      w.child(last).table[l - 1] = std::nullopt;
      --c;
      if (*y != port) w.child(*y).pointers[l - 1] = holder;
    }
  }
  w.commit();
}

void AdversaryTables::on_level_reset(Context& ctx, NodeId v, std::uint32_t level,
                                     std::span<const NodeId> subtree_children, bool whole_tree) {
  fsdl::SchemeState& s = ctx.store.write(v);
  const std::uint32_t top = whole_tree ? ctx.levels : level;
  const std::vector<PortNumber> kids = ctx.net.child_ports(v);
  Writes w(ctx, v);
  for (NodeId c : subtree_children) w.exempt(ctx.net.port_at_parent(c));
  for (std::uint32_t l = 1; l < top && l <= s.counter.size(); ++l) {
    for (std::uint64_t i = 0; i < s.counter[l - 1]; ++i) w.child(kids.at(i)).table[l - 1] = std::nullopt;
    s.counter[l - 1] = 0;
    if (track_pointers_) {
      for (NodeId c : subtree_children) {
        fsdl::SchemeState& cs = ctx.store.at(c);
        if (cs.pointers[l - 1]) w.child(ctx.net.port_at_parent(c)).pointers[l - 1] = std::nullopt;
      }
    }
  }
  w.commit();
}

std::vector<PortNumber> AdversaryTables::level_child_ports(Context& ctx, NodeId v, std::uint32_t l) {
  const fsdl::SchemeState& s = ctx.store.at(v);
  const std::vector<PortNumber> kids = ctx.net.child_ports(v);
  std::vector<PortNumber> out;
  for (std::uint64_t i = 0; i < s.counter.at(l - 1); ++i) {
    const NodeId c = ctx.net.send(v, kids.at(i));
    ctx.net.send(c, ctx.net.parent_port(c));
    const auto& entry = ctx.store.at(c).table[l - 1];
    if (!entry) throw InvariantViolation("adversary tables: empty table entry at " + to_string(c));
    out.push_back(*entry);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t AdversaryTables::field_bits(const fsdl::SchemeState& state) const {
  std::uint64_t bits = 0;
  for (std::uint64_t c : state.counter) bits += gamma_length(c + 1);
  for (const auto& t : state.table) bits += port_field_bits(t);
  for (const auto& p : state.pointers) bits += port_field_bits(p);
  return bits;
}

void AdversaryTables::check(const simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v) const {
  const fsdl::SchemeState& s = store.at(v);
  const fsdl::DecompositionView view(net, store);
  const std::vector<PortNumber> kids = net.child_ports(v);
  const std::string at = " at node " + to_string(v);
  const std::uint32_t below = s.levels() - 1;
  if (s.counter.size() != below) throw InvariantViolation("adversary: wrong counter count" + at);
  for (PortNumber p : kids) {
    const fsdl::SchemeState& cs = store.at(*net.neighbor_via(v, p));
    if (cs.table.size() != below || cs.pointers.size() != (track_pointers_ ? below : 0)) {
      throw InvariantViolation("adversary: child fields have the wrong size" + at);
    }
  }
  for (std::uint32_t l = 1; l <= below; ++l) {
    const std::string lvl = " (level " + std::to_string(l) + ")" + at;
    const std::vector<PortNumber> truth = view.level_child_ports(v, l);
    if (s.counter[l - 1] != truth.size()) throw InvariantViolation("adversary: counters invariant" + lvl);
    std::vector<PortNumber> held;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto& entry = store.at(*net.neighbor_via(v, kids[i])).table[l - 1];
      if (i < s.counter[l - 1]) {
        if (!entry) throw InvariantViolation("adversary: tables invariant, empty entry" + lvl);
        held.push_back(*entry);
      } else if (entry) {
        throw InvariantViolation("adversary: tables invariant, entry beyond c_l" + lvl);
      }
    }
    std::sort(held.begin(), held.end());
    if (held != truth) throw InvariantViolation("adversary: tables invariant, union differs from E_l" + lvl);
    if (!track_pointers_) continue;
    for (PortNumber p : kids) {
      const auto& ptr = store.at(*net.neighbor_via(v, p)).pointers[l - 1];
      const bool member = std::binary_search(truth.begin(), truth.end(), p);
      if (ptr.has_value() != member) throw InvariantViolation("adversary: pointers invariant 1" + lvl);
      if (ptr) {
        const auto holder = net.neighbor_via(v, *ptr);
        if (!holder || *holder == net.parent(v) || store.at(*holder).table[l - 1] != p) {
          throw InvariantViolation("adversary: pointers invariant 2" + lvl);
        }
      }
    }
  }
}

}  // namespace dynlabel::memory
