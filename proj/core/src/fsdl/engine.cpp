#include "dynlabel/fsdl/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dynlabel/memory/memory_bits.hpp"

namespace dynlabel::fsdl {

Engine::Engine(simnet::TreeNetwork& net, const static_schemes::StaticScheme& scheme, memory::PortBookkeeping& ports,
               dynamic::BackupStore* backups, EngineOptions options)
    : net_(net), scheme_(scheme), ports_(ports), backups_(backups), options_(options) {
  if (scheme.function() == functions::FunctionKind::Routing && ports.kind() == memory::BookkeepingKind::Designer) {
    throw ConfigError("routing labels embed port numbers; designer renumbering would invalidate them");
  }
}

memory::Context Engine::context() { return memory::Context{net_, store_, levels_}; }

LabelState& Engine::labels_of(NodeId v) {
  if (v.index() >= labels_.size()) {
    labels_.resize(v.index() + 1);
    label_dirty_flag_.resize(v.index() + 1, 0);
  }
  return labels_[v.index()];
}

void Engine::touch_label(NodeId v) {
  LabelState& ls = labels_of(v);
  ls.epoch = epoch_;
  if (!label_dirty_flag_[v.index()]) {
    label_dirty_flag_[v.index()] = 1;
    label_dirty_.push_back(v);
  }
}

void Engine::init_node(NodeId v, std::uint32_t p) {
  store_.ensure(v);
  SchemeState& s = store_.write(v);
  s.root_flag.assign(p, 0);
  s.instance.assign(p, InstanceState{});
  if (options_.track_omega) {
    s.omega.assign(p, 1);
  } else {
    s.omega.clear();
  }
  ports_.init_fields(s, p);
  if (v.index() >= serial_.size()) serial_.resize(v.index() + 1);
  serial_[v.index()].assign(p, 0);
  LabelState& ls = labels_of(v);
  ls.layers.assign(p, std::nullopt);
  touch_label(v);
}

void Engine::flag(NodeId v, std::uint32_t l) {
  SchemeState& s = store_.write(v);
  s.root_flag[l - 1] = 1;
  s.instance[l - 1] = InstanceState{};
  if (options_.track_omega) s.omega[l - 1] = 1;
  serial_[v.index()][l - 1] = ++next_serial_;
}

void Engine::start_fresh(std::uint32_t k, std::uint32_t p) {
  if (k < 2 || p < 1) throw ConfigError("FSDL needs k > 1 and p >= 1");
  if (net_.alive_count() != 1) throw ConfigError("a fresh FSDL start needs the root alone");
  k_ = k;
  levels_ = p;
  terminated_ = false;
  started_ = true;
  last_whole_tree_.reset();
  dead_members_.clear();
  const NodeId r = net_.root();
  init_node(r, p);
  for (std::uint32_t l = 1; l <= p; ++l) flag(r, l);
  LabelState& ls = labels_of(r);
  ls.base = scheme_.singleton_label(net_, r);
  ls.last_static = ls.base;
  max_static_bits_ = std::max<std::uint64_t>(max_static_bits_, ls.base.size());
  touch_label(r);
}

std::uint64_t Engine::reset_whole_tree() {
  const std::uint64_t before = net_.messages_sent();
  simnet::Subtree st;
  const std::uint64_t count = simnet::broadcast_convergecast(
      net_, net_.root(), simnet::all_children(net_), [](NodeId) { return std::uint64_t{1}; },
      [](std::uint64_t a, std::uint64_t b) { return a + b; }, &st);
  const std::uint64_t marker_before = net_.messages_sent();
  const std::vector<BitString> labels = scheme_.mark(net_, st);
  ++epoch_;
  for (std::size_t i = 0; i < st.size(); ++i) {
    labels_of(st.nodes[i]).last_static = labels[i];
    max_static_bits_ = std::max<std::uint64_t>(max_static_bits_, labels[i].size());
  }
  max_marker_subtree_ = std::max<std::uint64_t>(max_marker_subtree_, st.size());
  if (on_reset) {
    on_reset(ResetRecord{0, net_.root(), st.size(), count, net_.messages_sent() - before,
                         net_.messages_sent() - marker_before});
  }
  last_whole_tree_ = std::move(st);
  return count;
}

void Engine::start_phase(std::uint32_t k, std::uint32_t p, bool fresh_omega) {
  if (k < 2 || p < 1) throw ConfigError("FSDL needs k > 1 and p >= 1");
  if (!last_whole_tree_ || last_whole_tree_->size() != net_.alive_count()) {
    throw std::logic_error("start_phase needs a whole-tree reset of the current tree");
  }
  const std::uint32_t old_levels = levels_;
  const NodeId r = net_.root();
  const bool carry = options_.track_omega && !fresh_omega && started_;
  const std::uint64_t top_serial = carry ? serial_[r.index()][old_levels - 1] : 0;
  if (!carry) dead_members_.clear();
  k_ = k;
  levels_ = p;
  terminated_ = false;
  started_ = true;
  const simnet::Subtree st = *last_whole_tree_;
  for (NodeId v : st.nodes) {
    const std::uint64_t share = carry ? store_.at(v).omega.at(old_levels - 1) : 1;
    init_node(v, p);
    if (options_.track_omega) store_.write(v).omega[p - 1] = share;
  }
  SchemeState& rs = store_.write(r);
  rs.root_flag[p - 1] = 1;
  rs.instance[p - 1] = InstanceState{true, 1};
  serial_[r.index()][p - 1] = carry ? top_serial : ++next_serial_;
  step5_broadcast(r, p, st);
}

void Engine::step5_broadcast(NodeId y, std::uint32_t level, const simnet::Subtree& st) {
  simnet::charge_broadcast(net_, st);
  const bool whole_tree = y == net_.root() && level == levels_;
  memory::Context ctx = context();
  const functions::FunctionKind kind = scheme_.function();
  std::vector<NodeId> kids;
  for (std::size_t i = 0; i < st.size(); ++i) {
    const NodeId v = st.nodes[i];
    for (std::uint32_t l = 1; l < level; ++l) flag(v, l);
    kids.clear();
    for (int c : st.children[i]) kids.push_back(st.nodes[static_cast<std::size_t>(c)]);
    ports_.on_level_reset(ctx, v, level, kids, whole_tree);
    LabelState& ls = labels_of(v);
    if (level >= 2) {
      ls.layers[level - 1] = LabelLayer{ls.last_static, functions::identity(net_, kind, v)};
      for (std::uint32_t l = 2; l < level; ++l) ls.layers[l - 1].reset();
      ls.base = scheme_.singleton_label(net_, v);
    } else {
      ls.base = ls.last_static;
    }
    touch_label(v);
  }
}

Engine::ResetResult Engine::reset(NodeId y, std::uint32_t l) {
  const std::uint64_t before = net_.messages_sent();
  memory::Context ctx = context();
  simnet::EdgeFilter filter;
  if (l == levels_) {
    filter = simnet::all_children(net_);
  } else {
    filter = [this, &ctx, l](NodeId v) { return ports_.level_child_ports(ctx, v, l); };
  }
  std::function<std::uint64_t(NodeId)> value = [](NodeId) { return std::uint64_t{1}; };
  if (options_.track_omega) value = [this, l](NodeId v) { return store_.at(v).omega[l - 1]; };
  ResetResult r;
  r.count = simnet::broadcast_convergecast(net_, y, filter, value,
                                           [](std::uint64_t a, std::uint64_t b) { return a + b; }, &r.subtree);
  if (options_.self_check && r.subtree.nodes != view().members(y, l)) {
    throw InvariantViolation("reset at level " + std::to_string(l) + " from " + to_string(y) +
                             " collected a subtree that is not T_l");
  }
  const std::uint64_t marker_before = net_.messages_sent();
  const std::vector<BitString> labels = scheme_.mark(net_, r.subtree);
  ++epoch_;
  for (std::size_t i = 0; i < r.subtree.size(); ++i) {
    const NodeId v = r.subtree.nodes[i];
    LabelState& ls = labels_of(v);
    ls.last_static = labels[i];
    if (l == 1) {
      ls.base = labels[i];
      touch_label(v);
    }
    max_static_bits_ = std::max<std::uint64_t>(max_static_bits_, labels[i].size());
  }
  max_marker_subtree_ = std::max<std::uint64_t>(max_marker_subtree_, r.subtree.size());
  if (resets_per_level_.size() < l) resets_per_level_.resize(l, 0);
  ++resets_per_level_[l - 1];
  if (y == net_.root() && l == levels_) last_whole_tree_ = r.subtree;
  if (on_reset) {
    on_reset(ResetRecord{l, y, r.subtree.size(), r.count, net_.messages_sent() - before,
                         net_.messages_sent() - marker_before});
  }
  return r;
}

void Engine::after_reset(NodeId y, std::uint32_t l, const ResetResult& r) {
  InstanceState& inst = store_.write(y).instance[l - 1];
  inst.counting = true;
  ++inst.mu;
  if (inst.mu >= k_) {
    would_terminate(y, l, r);
    return;
  }
  if (l >= 2) step5_broadcast(y, l, r.subtree);
}

void Engine::would_terminate(NodeId y, std::uint32_t l, const ResetResult& r) {
  if (l == levels_) {
    terminated_ = true;
    if (on_top_terminate) on_top_terminate(r.count);
    return;
  }
  const NodeId z = view().level_root(y, l + 1);
  const InstanceState up = store_.at(z).instance[l];
  if (z == y && !up.counting) {
    // The first step of the level-(l+1) instance ends; T_0 is the tree just reset.
    if (options_.self_check && r.subtree.nodes != view().members(y, l + 1)) {
      throw InvariantViolation("level " + std::to_string(l) + " and " + std::to_string(l + 1) +
                               " subtrees differ at the end of a first step");
    }
    store_.write(z).instance[l] = InstanceState{true, 1};
    step5_broadcast(y, l + 1, r.subtree);
    return;
  }
  net_.relay_up(y, z);
  const ResetResult upper = reset(z, l + 1);
  after_reset(z, l + 1, upper);
}

void Engine::on_leaf_added(NodeId parent, NodeId leaf) {
  if (!started_ || terminated_) throw std::logic_error("FSDL engine is not running");
  init_node(leaf, levels_);
  memory::Context ctx = context();
  ports_.on_leaf_joined(ctx, parent, leaf);
  LabelState& ll = labels_of(leaf);
  const functions::FValue step = functions::parent_to_child(net_, scheme_.function(), parent, leaf);
  for (std::uint32_t l = 2; l <= levels_; ++l) {
    const auto& layer = labels_[parent.index()].layers[l - 1];
    if (layer) ll.layers[l - 1] = LabelLayer{layer->anchor, functions::compose(layer->anchor_to_node, step)};
  }
  if (backups_) backups_->on_child_added(net_, store_, parent, leaf);

  const NodeId x = view().level_root(leaf, 1);
  net_.relay_up(leaf, x);
  const ResetResult r = reset(x, 1);
  after_reset(x, 1, r);
}

void Engine::on_leaf_removed(NodeId parent, NodeId leaf) {
  if (!started_) throw std::logic_error("FSDL engine is not running");
  if (!backups_) throw ConfigError("leaf deletions need backup copies");
  const PortNumber port = net_.port_at_parent(leaf);
  const SchemeState copy = backups_->retrieve(net_, parent, leaf, port);
  if (options_.self_check && copy != store_.at(leaf)) {
    throw InvariantViolation("backup of node " + to_string(leaf) + " is stale");
  }
  for (std::uint32_t l = 1; l <= levels_; ++l) {
    if (copy.flagged(l)) continue;
    const NodeId y = view().level_root(parent, l);
    ++dead_members_[serial_[y.index()][l - 1]];
    if (options_.track_omega) store_.write(parent).omega[l - 1] += copy.omega[l - 1];
  }
  // The sibling ring is defined by the ports before any renumbering.
  backups_->on_child_removed(net_, store_, parent, leaf, port);
  memory::Context ctx = context();
  ports_.on_leaf_removed(ctx, parent, port, copy);
  label_sizes_.erase(leaf);
  memory_sizes_.erase(leaf);
}

void Engine::finish_event() {
  std::vector<NodeId> changed = store_.take_dirty();
  if (backups_) {
    const std::vector<NodeId> holders = backups_->flush(net_, store_, changed);
    changed.insert(changed.end(), holders.begin(), holders.end());
  }
  for (NodeId v : changed) {
    if (net_.alive(v)) memory_sizes_.set(v, memory_bits(v));
  }
  for (NodeId v : label_dirty_) {
    label_dirty_flag_[v.index()] = 0;
    if (net_.alive(v)) label_sizes_.set(v, encode_label(labels_[v.index()]).size());
  }
  label_dirty_.clear();
}

DynamicLabel Engine::label(NodeId v) const {
  const LabelState& ls = labels_.at(v.index());
  return DynamicLabel{encode_label(ls), ls.epoch};
}

functions::FValue Engine::decode(const BitString& x, const BitString& y) const {
  return decode_labels(scheme_, x, y);
}

std::uint64_t Engine::ever_count(NodeId y, std::uint32_t l) const {
  const std::uint64_t alive = view().members(y, l).size();
  auto it = dead_members_.find(serial_.at(y.index()).at(l - 1));
  return alive + (it == dead_members_.end() ? 0 : it->second);
}

std::uint64_t Engine::memory_bits(NodeId v) const {
  std::uint64_t bits = memory::memory_bits(store_.at(v), ports_);
  if (backups_) {
    for (const dynamic::BackupCopy& c : backups_->held_by(v)) bits += memory::memory_bits(c.memory, ports_);
  }
  return bits;
}

}  // namespace dynlabel::fsdl
