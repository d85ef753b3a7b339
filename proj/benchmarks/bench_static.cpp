#include <benchmark/benchmark.h>

#include <random>

#include "dynlabel/simnet/protocols.hpp"
#include "dynlabel/static_schemes/static_scheme.hpp"

namespace {

using namespace dynlabel;

simnet::TreeNetwork random_tree(std::uint32_t n, std::uint64_t seed) {
  simnet::TreeNetwork net;
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = 1; i < n; ++i) net.add_leaf(NodeId{static_cast<std::uint32_t>(rng() % i)});
  return net;
}

void BM_Mark(benchmark::State& state, functions::FunctionKind fn) {
  simnet::TreeNetwork net = random_tree(static_cast<std::uint32_t>(state.range(0)), 1);
  const auto scheme = static_schemes::make_static_scheme(fn);
  const simnet::Subtree st = simnet::snapshot_subtree(net, net.root(), simnet::all_children(net));
  for (auto _ : state) benchmark::DoNotOptimize(scheme->mark(net, st));
  state.SetComplexityN(state.range(0));
}

void BM_Decode(benchmark::State& state, functions::FunctionKind fn) {
  simnet::TreeNetwork net = random_tree(static_cast<std::uint32_t>(state.range(0)), 2);
  const auto scheme = static_schemes::make_static_scheme(fn);
  const simnet::Subtree st = simnet::snapshot_subtree(net, net.root(), simnet::all_children(net));
  const auto labels = scheme->mark(net, st);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    const auto& a = labels[rng() % labels.size()];
    const auto& b = labels[rng() % labels.size()];
    benchmark::DoNotOptimize(scheme->decode(a, b));
  }
}

BENCHMARK_CAPTURE(BM_Mark, ancestry, functions::FunctionKind::Ancestry)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK_CAPTURE(BM_Mark, distance, functions::FunctionKind::Distance)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK_CAPTURE(BM_Mark, routing, functions::FunctionKind::Routing)->RangeMultiplier(4)->Range(64, 16384)->Complexity();
BENCHMARK_CAPTURE(BM_Decode, ancestry, functions::FunctionKind::Ancestry)->Arg(4096);
BENCHMARK_CAPTURE(BM_Decode, distance, functions::FunctionKind::Distance)->Arg(4096);
BENCHMARK_CAPTURE(BM_Decode, seplevel, functions::FunctionKind::SeparationLevel)->Arg(4096);
BENCHMARK_CAPTURE(BM_Decode, routing, functions::FunctionKind::Routing)->Arg(4096);

}  // namespace
