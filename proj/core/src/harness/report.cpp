#include "dynlabel/harness/report.hpp"

#include <nlohmann/json.hpp>

#include "dynlabel/harness/runner.hpp"

namespace dynlabel::harness {

void write_report(std::ostream& out, const RunConfig& config, const RunResult& result) {
  using nlohmann::json;
  json mismatches = json::array();
  for (const Mismatch& m : result.report.mismatches) {
    mismatches.push_back({{"seed", m.seed},
                          {"event", m.event},
                          {"u", m.u.value},
                          {"v", m.v.value},
                          {"expected", m.expected},
                          {"decoded", m.decoded}});
  }
  json phases = json::array();
  for (const dynamic::PhaseRecord& p : result.phases) {
    phases.push_back({{"event", p.event}, {"n_prime", p.params.n_prime}, {"k", p.params.k}, {"p", p.params.p}});
  }
  json restarts = json::array();
  for (const simnet::RestartRecord& r : result.metrics.restarts) {
    restarts.push_back({{"event", r.event}, {"n0", r.n0}, {"additions", r.additions}, {"deletions", r.deletions}});
  }
  const json report = {
      {"config",
       {{"seed", config.seed},
        {"events", config.events},
        {"pdelete", config.delete_probability},
        {"model", name(config.model)},
        {"ports", name(config.ports)},
        {"function", functions::name(config.function)},
        {"kfn", config.kfn.to_string()},
        {"verify", config.verify.to_string()},
        {"invariants", name(config.invariants)},
        {"watch", config.watch},
        {"label_constant", config.bounds.label_constant},
        {"scaling_constant", config.bounds.scaling_constant},
        {"memory_constant", config.bounds.memory_constant}}},
      {"passed", result.passed()},
      {"error", result.error},
      {"events_applied", result.events_applied},
      {"final_n", result.final_n},
      {"nodes_ever", result.nodes_ever},
      {"messages", result.metrics.messages_sent},
      {"watch_messages", result.watch_messages},
      {"dead_sends", result.dead_sends},
      {"max_label_bits", result.metrics.max_label_bits},
      {"max_memory_bits", result.metrics.max_memory_bits},
      {"max_levels", result.max_levels},
      {"resets_per_level", result.metrics.resets_per_level},
      {"queries_checked", result.report.queries_checked},
      {"mismatch_count", result.report.mismatch_count},
      {"mismatches", mismatches},
      {"invariant_violations", result.report.invariant_violations},
      {"bound_violations", result.report.bound_violations},
      {"phases", phases},
      {"restarts", restarts},
  };
  out << report.dump(2) << '\n';
}

}  // namespace dynlabel::harness
