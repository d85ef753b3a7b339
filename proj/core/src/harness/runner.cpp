#include "dynlabel/harness/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "dynlabel/harness/invariants.hpp"
#include "dynlabel/harness/report.hpp"
#include "dynlabel/harness/scenario_gen.hpp"

namespace dynlabel::harness {

namespace {

constexpr std::uint64_t kVerifySalt = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kPortSalt = 0xc2b2ae3d27d4eb4fULL;

std::string bound_message(std::uint64_t event, const std::string& what, std::uint64_t got, double limit) {
  std::ostringstream out;
  out << "event " << event << ": " << what << " " << got << " exceeds " << limit;
  return out.str();
}

/// Replays DL's restart rule on plain counters and checks the scheme against it.
class RestartWindow {
 public:
  explicit RestartWindow(std::uint64_t n0) : n0_(n0) {}

  void after_event(bool added, std::uint64_t event, std::uint64_t alive, std::size_t restarts_logged,
                   std::vector<std::string>& out) {
    (added ? additions_ : deletions_)++;
    const bool crossed = 9 * additions_ > n0_ || 9 * deletions_ > n0_;
    const bool restarted = restarts_logged > restarts_seen_;
    if (crossed != restarted) {
      out.push_back("event " + std::to_string(event) + ": restart " + (restarted ? "fired" : "missing") +
                    " with n0=" + std::to_string(n0_) + " adds=" + std::to_string(additions_) +
                    " dels=" + std::to_string(deletions_));
    }
    if (!crossed && 2 * (additions_ + deletions_) > n0_) {
      out.push_back("event " + std::to_string(event) + ": tau exceeds n0/2 without a restart");
    }
    if (restarted) {
      restarts_seen_ = restarts_logged;
      n0_ = alive;
      additions_ = 0;
      deletions_ = 0;
    }
  }

 private:
  std::uint64_t n0_;
  std::uint64_t additions_ = 0;
  std::uint64_t deletions_ = 0;
  std::size_t restarts_seen_ = 0;
};

}  // namespace

std::vector<simnet::ScenarioEvent> scenario_for(const RunConfig& config) {
  if (config.scenario_file) {
    std::ifstream in(*config.scenario_file);
    if (!in) throw ConfigError("cannot read scenario " + config.scenario_file->string());
    return simnet::read_scenario(in);
  }
  return generate_scenario(config.seed, config.events, config.delete_probability);
}

RunResult run(const RunConfig& config) {
  validate(config);
  return run(config, scenario_for(config));
}

RunResult run(const RunConfig& config, const std::vector<simnet::ScenarioEvent>& events) {
  validate(config);
  simnet::validate_scenario(events);
  const bool dynamic_model = config.model == Model::Dynamic;
  if (!dynamic_model) {
    for (const auto& e : events) {
      if (std::holds_alternative<simnet::RemoveLeaf>(e)) {
        throw ConfigError("the increasing model has no deletions, but the scenario removes a leaf");
      }
    }
  }

  simnet::PortChooser chooser = config.ports == simnet::PortModel::Designer
                                    ? simnet::smallest_free_ports()
                                    : simnet::random_adversary_ports(config.seed ^ kPortSalt, config.port_cap);
  simnet::TreeNetwork net(config.ports, chooser);
  static_schemes::SchemeOptions options;
  options.flip_interval = config.fault == Fault::FlipInterval;
  const auto scheme = static_schemes::make_static_scheme(config.function, options);
  const memory::BookkeepingKind bookkeeping = bookkeeping_for(config.ports, config.function);
  dynamic::DynamicScheme driver(net, *scheme, bookkeeping, scheme_for(config.model), config.kfn,
                                dynamic_model ? dynamic::make_change_estimator(config.watch) : nullptr);

  RunResult result;
  std::mt19937_64 verify_rng(config.seed ^ kVerifySalt);
  std::uint64_t max_depth = 0;
  std::uint64_t max_port = 1;
  std::uint64_t last_messages = 0;
  RestartWindow window(1);

  try {
    driver.start();
    window = RestartWindow(net.alive_count());
    last_messages = net.messages_sent();
    for (std::uint64_t i = 0; i < events.size(); ++i) {
      const std::uint64_t index = i + 1;
      driver.begin_event(index);
      const bool added = std::holds_alternative<simnet::AddLeaf>(events[i]);
      if (added) {
        const NodeId leaf = net.add_leaf(std::get<simnet::AddLeaf>(events[i]).parent);
        max_depth = std::max<std::uint64_t>(max_depth, net.depth(leaf));
        max_port = std::max({max_port, net.port_at_parent(leaf).value, net.parent_port(leaf).value});
      } else {
        net.remove_leaf(std::get<simnet::RemoveLeaf>(events[i]).leaf);
      }
      driver.finish_event();
      result.events_applied = index;

      const fsdl::Engine& engine = driver.engine();
      const std::uint64_t n = net.alive_count();
      const std::uint64_t label_max = engine.label_sizes().current_max();
      const std::uint64_t memory_max = engine.memory_sizes().current_max();
      result.metrics.events.push_back(
          simnet::EventRecord{index, n, net.messages_sent() - last_messages, label_max, memory_max});
      last_messages = net.messages_sent();
      result.metrics.max_label_bits = std::max(result.metrics.max_label_bits, label_max);
      result.metrics.max_memory_bits = std::max(result.metrics.max_memory_bits, memory_max);
      result.max_levels = std::max(result.max_levels, engine.levels());

      verify_step(engine, config.verify, verify_rng, config.seed, index, result.report);
      if (config.invariants == InvariantMode::EveryEvent) {
        std::vector<std::string> found;
        scan_invariants(engine, found);
        for (auto& f : found) result.report.invariant_violations.push_back("event " + std::to_string(index) + ": " + f);
      }
      if (driver.kind() == dynamic::SchemeKind::Dl) {
        window.after_event(added, index, n, driver.restarts().size(), result.report.invariant_violations);
      }

      const std::uint64_t max_n = net.node_count();
      const std::uint64_t p = engine.levels();
      const double label_limit =
          config.bounds.label_constant * static_cast<double>(p) *
          static_cast<double>(scheme->ls_budget(static_schemes::LabelContext{max_n, max_depth, max_port}));
      if (static_cast<double>(label_max) > label_limit) {
        result.report.bound_violations.push_back(bound_message(index, "label bits", label_max, label_limit));
      }
      const double memory_limit = config.bounds.memory_constant * static_cast<double>(p) *
                                  (std::log2(static_cast<double>(max_n)) +
                                   std::log2(static_cast<double>(max_port)) + 2.0);
      if (static_cast<double>(memory_max) > memory_limit) {
        result.report.bound_violations.push_back(bound_message(index, "memory bits", memory_max, memory_limit));
      }
    }
    if (config.invariants == InvariantMode::Final) scan_invariants(driver.engine(), result.report.invariant_violations);
  } catch (const std::exception& e) {
    result.error = "event " + std::to_string(result.events_applied + 1) + ": " + e.what();
  }

  const fsdl::Engine& engine = driver.engine();
  result.metrics.messages_sent = net.messages_sent();
  result.metrics.resets_per_level = engine.resets_per_level();
  result.metrics.phases = driver.phases().size();
  result.metrics.restarts = driver.restarts();
  result.phases = driver.phases();
  result.final_n = net.alive_count();
  result.nodes_ever = net.node_count();
  result.dead_sends = net.dead_sends();
  if (const auto* watch = dynamic_cast<const dynamic::ExactChangeWatch*>(driver.watch())) {
    result.watch_messages = watch->messages();
  }
  if (result.error.empty()) {
    for (std::uint32_t i = 0; i < net.node_count(); ++i) {
      const NodeId v{i};
      if (net.alive(v)) result.memory.push_back(MemoryRow{v, engine.memory_bits(v), engine.store().at(v).levels()});
    }
  }

  if (config.output) {
    std::ofstream csv(*config.output);
    simnet::write_metrics_csv(csv, result.metrics.events);
    std::filesystem::path json_path = *config.output;
    json_path.replace_extension(".json");
    std::ofstream json(json_path);
    write_report(json, config, result);
  }
  if (config.memory_csv) {
    std::ofstream mem(*config.memory_csv);
    write_memory_csv(mem, result.memory, bookkeeping);
  }
  return result;
}

int exit_code(const RunResult& result) { return result.passed() ? 0 : 1; }

void write_memory_csv(std::ostream& out, const std::vector<MemoryRow>& rows, memory::BookkeepingKind kind) {
  out << "node,model,bits,level_count\n";
  for (const MemoryRow& r : rows) {
    out << r.node.value << ',' << memory::name(kind) << ',' << r.bits << ',' << r.level_count << '\n';
  }
}

}  // namespace dynlabel::harness
