#include <benchmark/benchmark.h>

#include "dynlabel/harness/runner.hpp"

namespace {

using namespace dynlabel;

/// Whole dynamic runs without verification: scheme cost per event.
void BM_Run(benchmark::State& state, harness::Model model, simnet::PortModel ports) {
  harness::RunConfig config;
  config.events = static_cast<std::uint64_t>(state.range(0));
  config.model = model;
  config.ports = ports;
  config.delete_probability = model == harness::Model::Dynamic ? 0.3 : 0.0;
  config.verify = harness::VerifyMode::parse("off");
  config.invariants = harness::InvariantMode::Off;
  std::uint64_t messages = 0;
  for (auto _ : state) {
    const auto r = harness::run(config);
    messages = r.metrics.messages_sent;
    benchmark::DoNotOptimize(r.metrics.max_label_bits);
  }
  state.counters["messages/event"] = static_cast<double>(messages) / static_cast<double>(config.events);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * config.events));
}

BENCHMARK_CAPTURE(BM_Run, sdl_designer, harness::Model::Increasing, simnet::PortModel::Designer)
    ->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, dl_designer, harness::Model::Dynamic, simnet::PortModel::Designer)
    ->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, dl_adversary, harness::Model::Dynamic, simnet::PortModel::Adversary)
    ->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
