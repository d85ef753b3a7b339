#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dynlabel/dynamic/backups.hpp"
#include "dynlabel/fsdl/decomposition.hpp"
#include "dynlabel/fsdl/dynamic_label.hpp"
#include "dynlabel/fsdl/scheme_state.hpp"
#include "dynlabel/memory/port_bookkeeping.hpp"
#include "dynlabel/simnet/metrics.hpp"
#include "dynlabel/simnet/protocols.hpp"
#include "dynlabel/static_schemes/static_scheme.hpp"

namespace dynlabel::fsdl {

struct EngineOptions {
  /// Ever-count shares per level; Reset then sums them instead of counting members.
  bool track_omega = false;
  /// Compare every subtree collected by Reset with the decomposition ground truth.
  bool self_check = true;
};

struct ResetRecord {
  std::uint32_t level = 0;
  NodeId root;
  std::uint64_t size = 0;
  std::uint64_t count = 0;
  std::uint64_t messages = 0;         // everything the reset sent, marker included
  std::uint64_t marker_messages = 0;
};

/// The nested FSDL instances of one phase, driven by topology events.
class Engine {
 public:
  Engine(simnet::TreeNetwork& net, const static_schemes::StaticScheme& scheme, memory::PortBookkeeping& ports,
         dynamic::BackupStore* backups, EngineOptions options);

  /// FSDL^k_p from its first step. The tree must be the root alone.
  void start_fresh(std::uint32_t k, std::uint32_t p);
  /// Reset of the whole current tree before any phase structure exists (all ever-count
  /// shares restart at 1). Returns the count.
  std::uint64_t reset_whole_tree();
  /// FSDL^k_p from its second step, using the most recent whole-tree reset.
  /// `fresh_omega` restarts every ever-count share; otherwise the top level's shares carry over.
  void start_phase(std::uint32_t k, std::uint32_t p, bool fresh_omega);

  void on_leaf_added(NodeId parent, NodeId leaf);
  void on_leaf_removed(NodeId parent, NodeId leaf);
  /// End-of-event work: backup flush and size accounting for everything that changed.
  void finish_event();

  /// Called when the top-level instance would terminate, with the count of its final
  /// reset. The handler may call start_phase. Without a handler the engine stops.
  std::function<void(std::uint64_t count)> on_top_terminate;
  std::function<void(const ResetRecord&)> on_reset;

  bool terminated() const { return terminated_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t levels() const { return levels_; }

  DynamicLabel label(NodeId v) const;
  functions::FValue decode(const BitString& x, const BitString& y) const;

  const simnet::TreeNetwork& network() const { return net_; }
  const static_schemes::StaticScheme& scheme() const { return scheme_; }
  const memory::PortBookkeeping& bookkeeping() const { return ports_; }
  const StateStore& store() const { return store_; }
  const LabelState& label_state(NodeId v) const { return labels_.at(v.index()); }
  DecompositionView view() const { return DecompositionView(net_, store_); }
  const dynamic::BackupStore* backups() const { return backups_; }
  bool tracks_omega() const { return options_.track_omega; }

  /// Nodes ever in T_l(y) since its instance was created, counting deleted ones.
  std::uint64_t ever_count(NodeId y, std::uint32_t l) const;

  std::uint64_t memory_bits(NodeId v) const;
  const simnet::SizeTracker& label_sizes() const { return label_sizes_; }
  const simnet::SizeTracker& memory_sizes() const { return memory_sizes_; }
  std::uint64_t max_static_label_bits() const { return max_static_bits_; }
  std::uint64_t max_marker_subtree() const { return max_marker_subtree_; }
  const std::vector<std::uint64_t>& resets_per_level() const { return resets_per_level_; }

 private:
  struct ResetResult {
    simnet::Subtree subtree;
    std::uint64_t count = 0;
  };

  memory::Context context();
  ResetResult reset(NodeId y, std::uint32_t l);
  void after_reset(NodeId y, std::uint32_t l, const ResetResult& r);
  void would_terminate(NodeId y, std::uint32_t l, const ResetResult& r);
  void step5_broadcast(NodeId y, std::uint32_t level, const simnet::Subtree& st);
  void init_node(NodeId v, std::uint32_t p);
  void flag(NodeId v, std::uint32_t l);
  void touch_label(NodeId v);
  LabelState& labels_of(NodeId v);

  simnet::TreeNetwork& net_;
  const static_schemes::StaticScheme& scheme_;
  memory::PortBookkeeping& ports_;
  dynamic::BackupStore* backups_;
  EngineOptions options_;

  std::uint32_t k_ = 2;
  std::uint32_t levels_ = 1;
  bool terminated_ = false;
  bool started_ = false;

  StateStore store_;
  std::vector<LabelState> labels_;
  std::vector<std::uint8_t> label_dirty_flag_;
  std::vector<NodeId> label_dirty_;
  std::optional<simnet::Subtree> last_whole_tree_;
  std::uint64_t epoch_ = 0;

  // Instrumentation only: instance identities and deleted members per instance.
  std::vector<std::vector<std::uint64_t>> serial_;
  std::uint64_t next_serial_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> dead_members_;

  simnet::SizeTracker label_sizes_;
  simnet::SizeTracker memory_sizes_;
  std::uint64_t max_static_bits_ = 0;
  std::uint64_t max_marker_subtree_ = 0;
  std::vector<std::uint64_t> resets_per_level_;
};

}  // namespace dynlabel::fsdl
