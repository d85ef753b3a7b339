#include "dynlabel/harness/standalone.hpp"

#include <random>

#include "dynlabel/dynamic/kfunction.hpp"
#include "dynlabel/fsdl/engine.hpp"
#include "dynlabel/harness/config.hpp"

namespace dynlabel::harness {

std::string_view name(GrowthStrategy strategy) {
  switch (strategy) {
    case GrowthStrategy::Random:
      return "random";
    case GrowthStrategy::Path:
      return "path";
    case GrowthStrategy::Star:
      return "star";
    case GrowthStrategy::Greedy:
      return "greedy";
  }
  return "?";
}

GrowthStrategy parse_growth(std::string_view text) {
  for (GrowthStrategy g : {GrowthStrategy::Random, GrowthStrategy::Path, GrowthStrategy::Star, GrowthStrategy::Greedy}) {
    if (name(g) == text) return g;
  }
  throw ConfigError("unknown growth strategy: " + std::string(text));
}

GrowthStrategy growth_for_seed(std::uint64_t seed) {
  static constexpr GrowthStrategy kAdversarial[] = {GrowthStrategy::Greedy, GrowthStrategy::Path, GrowthStrategy::Star};
  return kAdversarial[seed % 3];
}

bool StandaloneResult::stopping_ok(std::uint32_t k, std::uint32_t p) const {
  return !terminated || joins >= dynamic::saturating_pow(k, p);
}

namespace {

/// Reset counters of the instances containing v, outermost first.
std::vector<std::uint32_t> pressure(const fsdl::Engine& engine, NodeId v) {
  const fsdl::DecompositionView view = engine.view();
  std::vector<std::uint32_t> out;
  for (std::uint32_t l = engine.levels(); l >= 1; --l) {
    const fsdl::InstanceState& inst = engine.store().at(view.level_root(v, l)).instance[l - 1];
    out.push_back(inst.counting ? inst.mu + 1 : 0);
  }
  return out;
}

NodeId pick_parent(const fsdl::Engine& engine, GrowthStrategy growth, std::mt19937_64& rng, NodeId newest) {
  const simnet::TreeNetwork& net = engine.network();
  switch (growth) {
    case GrowthStrategy::Path:
      return newest;
    case GrowthStrategy::Star:
      return net.root();
    case GrowthStrategy::Random:
      return NodeId{static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, net.node_count() - 1)(rng))};
    case GrowthStrategy::Greedy:
      break;
  }
  std::vector<NodeId> best;
  std::vector<std::uint32_t> best_score;
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    const NodeId v{i};
    std::vector<std::uint32_t> score = pressure(engine, v);
    if (best.empty() || score > best_score) {
      best = {v};
      best_score = std::move(score);
    } else if (score == best_score) {
      best.push_back(v);
    }
  }
  return best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)];
}

}  // namespace

StandaloneResult run_standalone(const StandaloneConfig& config) {
  simnet::PortChooser chooser = config.ports == simnet::PortModel::Designer
                                    ? simnet::smallest_free_ports()
                                    : simnet::random_adversary_ports(config.seed, config.port_cap);
  simnet::TreeNetwork net(config.ports, chooser);
  const auto scheme = static_schemes::make_static_scheme(config.function);
  auto ports = memory::make_bookkeeping(bookkeeping_for(config.ports, config.function), false);
  fsdl::Engine engine(net, *scheme, *ports, nullptr, fsdl::EngineOptions{});

  StandaloneResult result;
  engine.on_reset = [&](const fsdl::ResetRecord& r) {
    if (r.marker_messages > scheme->mc_budget(r.size)) ++result.marker_overruns;
  };
  std::mt19937_64 rng(config.seed);
  engine.start_fresh(config.k, config.p);
  engine.finish_event();
  NodeId newest = net.root();
  while (!engine.terminated() && result.joins < config.max_joins) {
    const NodeId parent = pick_parent(engine, config.growth, rng, newest);
    newest = net.add_leaf(parent);
    engine.on_leaf_added(parent, newest);
    engine.finish_event();
    ++result.joins;
    if (config.verify && !engine.terminated()) verify_exhaustive(engine, config.seed, result.joins, result.report);
  }
  result.terminated = engine.terminated();
  result.final_n = net.alive_count();
  result.messages = net.messages_sent();
  result.mc = scheme->mc_budget(result.final_n);
  result.message_bound = 5ULL * config.p * config.k * result.mc;
  result.max_label_bits = engine.label_sizes().peak();
  return result;
}

}  // namespace dynlabel::harness
