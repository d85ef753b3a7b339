#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "dynlabel/dynamic/backups.hpp"
#include "dynlabel/dynamic/change_watch.hpp"
#include "dynlabel/dynamic/kfunction.hpp"
#include "dynlabel/fsdl/engine.hpp"
#include "dynlabel/memory/port_bookkeeping.hpp"
#include "dynlabel/simnet/metrics.hpp"
#include "dynlabel/simnet/tree_network.hpp"
#include "dynlabel/static_schemes/static_scheme.hpp"

namespace dynlabel::dynamic {

enum class SchemeKind {
  Sdl,    // leaf-increasing
  SemDl,  // leaf-dynamic, single phase sequence
  Dl,     // Sem-DL restarted whenever the change watch fires
};

std::string_view name(SchemeKind kind);

struct PhaseRecord {
  std::uint64_t event = 0;
  PhaseParams params;
};

/// Runs an unbounded dynamic labeling scheme on a network, one FSDL phase after another.
/// Install it as the network's listener; it reacts to every join and deletion.
class DynamicScheme final : public simnet::TopologyListener {
 public:
  DynamicScheme(simnet::TreeNetwork& net, const static_schemes::StaticScheme& scheme, memory::BookkeepingKind ports,
                SchemeKind kind, KFunction kfn, std::unique_ptr<ChangeEstimator> watch = nullptr,
                bool self_check = true);
  ~DynamicScheme() override;

  DynamicScheme(const DynamicScheme&) = delete;
  DynamicScheme& operator=(const DynamicScheme&) = delete;

  /// Starts on the current tree and attaches to the network.
  void start();

  /// Marks the index of the event about to be applied, for the phase and restart logs.
  void begin_event(std::uint64_t index) { event_ = index; }
  void on_leaf_added(NodeId parent, NodeId leaf) override;
  void on_leaf_removed(NodeId parent, NodeId leaf) override;
  /// Flushes backups and size accounting. Call once per applied event.
  void finish_event();

  SchemeKind kind() const { return kind_; }
  const KFunction& kfunction() const { return kfn_; }
  const fsdl::Engine& engine() const { return *engine_; }
  const memory::PortBookkeeping& bookkeeping() const { return *ports_; }
  const ChangeEstimator* watch() const { return watch_.get(); }
  const std::vector<PhaseRecord>& phases() const { return phases_; }
  const std::vector<simnet::RestartRecord>& restarts() const { return restarts_; }
  std::optional<PhaseParams> current_phase() const;

  fsdl::DynamicLabel label(NodeId v) const { return engine_->label(v); }
  functions::FValue decode(const BitString& x, const BitString& y) const { return engine_->decode(x, y); }

 private:
  void begin_on_current_tree(bool fresh_omega);
  void next_phase(std::uint64_t count);
  void restart();

  simnet::TreeNetwork& net_;
  SchemeKind kind_;
  KFunction kfn_;
  std::unique_ptr<memory::PortBookkeeping> ports_;
  std::unique_ptr<BackupStore> backups_;
  std::unique_ptr<fsdl::Engine> engine_;
  std::unique_ptr<ChangeEstimator> watch_;
  std::vector<PhaseRecord> phases_;
  std::vector<simnet::RestartRecord> restarts_;
  std::uint64_t event_ = 0;
};

}  // namespace dynlabel::dynamic
