#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dynlabel/dynamic/schemes.hpp"
#include "dynlabel/harness/config.hpp"
#include "dynlabel/harness/verify.hpp"
#include "dynlabel/simnet/metrics.hpp"
#include "dynlabel/simnet/scenario.hpp"

namespace dynlabel::harness {

struct MemoryRow {
  NodeId node;
  std::uint64_t bits = 0;
  std::uint32_t level_count = 0;
};

struct RunResult {
  VerificationReport report;
  simnet::MetricsLedger metrics;
  std::vector<dynamic::PhaseRecord> phases;
  std::vector<MemoryRow> memory;  // final state, alive nodes
  std::uint64_t events_applied = 0;
  std::uint64_t final_n = 0;
  std::uint64_t nodes_ever = 0;
  std::uint64_t dead_sends = 0;
  std::uint64_t watch_messages = 0;
  std::uint32_t max_levels = 0;
  /// Set when an exception stopped the run.
  std::string error;

  bool passed() const { return error.empty() && report.passed() && dead_sends == 0; }
};

/// The scenario a config describes: the replay file or a generated one.
std::vector<simnet::ScenarioEvent> scenario_for(const RunConfig& config);

/// Replays the scenario through the configured scheme with verification, invariant scans
/// and bound checks. Writes the metrics CSV, memory CSV and JSON report when configured.
RunResult run(const RunConfig& config);
RunResult run(const RunConfig& config, const std::vector<simnet::ScenarioEvent>& events);

/// 0 iff the run passed.
int exit_code(const RunResult& result);

/// `node,model,bits,level_count`
void write_memory_csv(std::ostream& out, const std::vector<MemoryRow>& rows, memory::BookkeepingKind kind);

}  // namespace dynlabel::harness
