#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dynlabel/harness/config.hpp"
#include "dynlabel/harness/runner.hpp"
#include "dynlabel/harness/scenario_gen.hpp"
#include "dynlabel/harness/standalone.hpp"
#include "test_support.hpp"

namespace {

using namespace dynlabel;
using functions::FunctionKind;
using harness::RunConfig;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ScenarioGen, DeterministicAndValid) {
  const auto a = harness::generate_scenario(42, 10000, 0.3);
  const auto b = harness::generate_scenario(42, 10000, 0.3);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, harness::generate_scenario(43, 10000, 0.3));
  ASSERT_EQ(a.size(), 10000u);
  EXPECT_NO_THROW(simnet::validate_scenario(a));
  const auto removals = std::ranges::count_if(a, [](const auto& e) { return std::holds_alternative<simnet::RemoveLeaf>(e); });
  EXPECT_GT(removals, 2500);
  EXPECT_LT(removals, 3500);
}

TEST(ScenarioGen, NoDeletionsGrowsOnly) {
  const auto events = harness::generate_scenario(7, 500, 0.0);
  for (const auto& e : events) ASSERT_TRUE(std::holds_alternative<simnet::AddLeaf>(e));
}

TEST(ScenarioGen, RemovalOnSingletonFallsBackToAdd) {
  const auto events = harness::generate_scenario(3, 50, 0.99);
  EXPECT_NO_THROW(simnet::validate_scenario(events));
  EXPECT_TRUE(std::holds_alternative<simnet::AddLeaf>(events.front()));
}

TEST(Config, ParsingAndValidation) {
  EXPECT_EQ(harness::parse_model("dynamic"), harness::Model::Dynamic);
  EXPECT_THROW(harness::parse_model("static"), ConfigError);
  EXPECT_EQ(harness::VerifyMode::parse("sampled:12").samples, 12u);
  EXPECT_EQ(harness::VerifyMode::parse("sampled:12").to_string(), "sampled:12");
  EXPECT_THROW(harness::VerifyMode::parse("sampled:"), ConfigError);
  EXPECT_EQ(harness::bookkeeping_for(simnet::PortModel::Designer, FunctionKind::Routing),
            memory::BookkeepingKind::AdversaryTables);
  RunConfig bad;
  bad.delete_probability = 0.2;  // increasing model
  EXPECT_THROW(harness::validate(bad), ConfigError);
}

TEST(Runner, DefaultRunPasses) {
  RunConfig config;
  config.events = 300;
  const auto result = harness::run(config);
  EXPECT_TRUE(result.passed()) << result.error;
  EXPECT_EQ(harness::exit_code(result), 0);
  EXPECT_EQ(result.events_applied, 300u);
  EXPECT_EQ(result.final_n, 301u);
  EXPECT_GT(result.report.queries_checked, 0u);
}

TEST(Runner, FlippedIntervalsAreCaught) {
  RunConfig config;
  config.events = 60;
  config.fault = harness::Fault::FlipInterval;
  const auto result = harness::run(config);
  EXPECT_NE(harness::exit_code(result), 0);
  EXPECT_GT(result.report.mismatch_count, 0u);
  ASSERT_FALSE(result.report.mismatches.empty());
  EXPECT_EQ(result.report.mismatches.front().seed, config.seed);
}

TEST(Runner, ExhaustiveAfterEveryEventOnSmallDynamicTrees) {
  for (FunctionKind fn : {FunctionKind::Ancestry, FunctionKind::Distance, FunctionKind::SeparationLevel,
                          FunctionKind::Routing}) {
    for (simnet::PortModel ports : {simnet::PortModel::Designer, simnet::PortModel::Adversary}) {
      RunConfig config;
      config.seed = 5;
      config.events = 80;
      config.model = harness::Model::Dynamic;
      config.delete_probability = 0.3;
      config.function = fn;
      config.ports = ports;
      config.verify = harness::VerifyMode::parse("exhaustive");
      config.invariants = harness::InvariantMode::EveryEvent;
      const auto result = harness::run(config);
      EXPECT_TRUE(result.passed()) << functions::name(fn) << " " << harness::name(ports) << ": " << result.error;
      EXPECT_EQ(result.dead_sends, 0u);
    }
  }
}

TEST(Runner, MetricsCsvIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "dynlabel_test_harness";
  std::filesystem::create_directories(dir);
  RunConfig config;
  config.seed = 9;
  config.events = 120;
  config.model = harness::Model::Dynamic;
  config.delete_probability = 0.25;
  config.output = dir / "a.csv";
  config.memory_csv = dir / "a_mem.csv";
  ASSERT_TRUE(harness::run(config).passed());
  config.output = dir / "b.csv";
  config.memory_csv = dir / "b_mem.csv";
  ASSERT_TRUE(harness::run(config).passed());
  const std::string a = slurp(dir / "a.csv");
  EXPECT_EQ(a.substr(0, a.find('\n')), "event,n,messages,maxLabelBits,maxMemBits");
  EXPECT_EQ(a, slurp(dir / "b.csv"));
  EXPECT_EQ(slurp(dir / "a_mem.csv"), slurp(dir / "b_mem.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "a.json"));
  std::filesystem::remove_all(dir);
}

TEST(Runner, ReplayMatchesGeneratedRun) {
  RunConfig config;
  config.seed = 4;
  config.events = 100;
  config.model = harness::Model::Dynamic;
  config.delete_probability = 0.3;
  const auto events = harness::scenario_for(config);
  const auto direct = harness::run(config);
  const auto replayed = harness::run(config, events);
  EXPECT_EQ(direct.metrics.messages_sent, replayed.metrics.messages_sent);
  EXPECT_EQ(direct.metrics.max_label_bits, replayed.metrics.max_label_bits);
}

TEST(Runner, IncreasingModelRejectsDeletingScenario) {
  RunConfig config;
  const std::vector<simnet::ScenarioEvent> events{simnet::AddLeaf{NodeId{0}}, simnet::RemoveLeaf{NodeId{1}}};
  EXPECT_THROW(harness::run(config, events), ConfigError);
}

TEST(Standalone, StopsNoEarlierThanKToThePAndStaysInBudget) {
  for (std::uint32_t k : {2u, 3u}) {
    for (std::uint32_t p : {1u, 2u, 3u}) {
      for (harness::GrowthStrategy g : {harness::GrowthStrategy::Random, harness::GrowthStrategy::Path,
                                        harness::GrowthStrategy::Star, harness::GrowthStrategy::Greedy}) {
        harness::StandaloneConfig config;
        config.k = k;
        config.p = p;
        config.growth = g;
        config.seed = k * 10 + p;
        const auto r = harness::run_standalone(config);
        EXPECT_TRUE(r.terminated);
        EXPECT_TRUE(r.stopping_ok(k, p)) << "k=" << k << " p=" << p << " " << harness::name(g) << " joins " << r.joins;
        EXPECT_TRUE(r.messages_ok()) << r.messages << " > " << r.message_bound;
        EXPECT_TRUE(r.report.passed());
      }
    }
  }
}

TEST(Standalone, GreedyMeetsTheBoundExactly) {
  harness::StandaloneConfig config;
  config.k = 2;
  config.p = 4;
  config.growth = harness::GrowthStrategy::Greedy;
  EXPECT_EQ(harness::run_standalone(config).joins, 16u);
}

}  // namespace
