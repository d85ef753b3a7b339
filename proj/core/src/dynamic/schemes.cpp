#include "dynlabel/dynamic/schemes.hpp"

#include <stdexcept>

#include "dynlabel/simnet/protocols.hpp"

namespace dynlabel::dynamic {

std::string_view name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Sdl:
      return "sdl";
    case SchemeKind::SemDl:
      return "sem-dl";
    case SchemeKind::Dl:
      return "dl";
  }
  return "?";
}

DynamicScheme::DynamicScheme(simnet::TreeNetwork& net, const static_schemes::StaticScheme& scheme,
                             memory::BookkeepingKind ports, SchemeKind kind, KFunction kfn,
                             std::unique_ptr<ChangeEstimator> watch, bool self_check)
    : net_(net), kind_(kind), kfn_(kfn), watch_(std::move(watch)) {
  const bool dynamic = kind != SchemeKind::Sdl;
  ports_ = memory::make_bookkeeping(ports, dynamic);
  if (dynamic) backups_ = std::make_unique<BackupStore>();
  if (kind == SchemeKind::Dl && !watch_) watch_ = std::make_unique<ExactChangeWatch>();
  fsdl::EngineOptions options;
  options.track_omega = dynamic;
  options.self_check = self_check;
  engine_ = std::make_unique<fsdl::Engine>(net, scheme, *ports_, backups_.get(), options);
  engine_->on_top_terminate = [this](std::uint64_t count) { next_phase(count); };
}

DynamicScheme::~DynamicScheme() {
  net_.set_listener(nullptr);
}

void DynamicScheme::start() {
  if (kind_ == SchemeKind::Dl) {
    const std::uint64_t n0 = simnet::broadcast_convergecast(
        net_, net_.root(), simnet::all_children(net_), [](NodeId) { return std::uint64_t{1}; },
        [](std::uint64_t a, std::uint64_t b) { return a + b; });
    watch_->start(n0);
  }
  begin_on_current_tree(true);
  engine_->finish_event();
  net_.set_listener(this);
}

void DynamicScheme::begin_on_current_tree(bool fresh_omega) {
  if (net_.alive_count() == 1) {
    const std::uint64_t k = kfn_(1);
    engine_->start_fresh(static_cast<std::uint32_t>(k), 1);
    phases_.push_back(PhaseRecord{event_, PhaseParams{1, static_cast<std::uint32_t>(k), 1}});
    return;
  }
  const std::uint64_t count = engine_->reset_whole_tree();
  const PhaseParams params = compute_phase_params(count, kfn_);
  engine_->start_phase(params.k, params.p, fresh_omega);
  phases_.push_back(PhaseRecord{event_, params});
}

void DynamicScheme::next_phase(std::uint64_t count) {
  const PhaseParams params = compute_phase_params(count, kfn_);
  engine_->start_phase(params.k, params.p, false);
  phases_.push_back(PhaseRecord{event_, params});
}

void DynamicScheme::restart() {
  restarts_.push_back(simnet::RestartRecord{event_, watch_->n0(), watch_->estimated_additions(),
                                            watch_->estimated_deletions()});
  const std::uint64_t n0 = simnet::broadcast_convergecast(
      net_, net_.root(), simnet::all_children(net_), [](NodeId) { return std::uint64_t{1}; },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
  watch_->start(n0);
  begin_on_current_tree(true);
}

void DynamicScheme::on_leaf_added(NodeId parent, NodeId leaf) {
  engine_->on_leaf_added(parent, leaf);
  if (engine_->terminated()) throw std::logic_error("scheme stopped without starting a new phase");
  if (watch_) {
    watch_->on_leaf_added(net_, leaf);
    if (watch_->crossed()) restart();
  }
}

void DynamicScheme::on_leaf_removed(NodeId parent, NodeId leaf) {
  if (kind_ == SchemeKind::Sdl) throw ConfigError("SDL runs in the leaf-increasing model; deletions are rejected");
  engine_->on_leaf_removed(parent, leaf);
  if (watch_) {
    watch_->on_leaf_removed(net_, parent);
    if (watch_->crossed()) restart();
  }
}

void DynamicScheme::finish_event() { engine_->finish_event(); }

std::optional<PhaseParams> DynamicScheme::current_phase() const {
  if (phases_.empty()) return std::nullopt;
  return phases_.back().params;
}

}  // namespace dynlabel::dynamic
