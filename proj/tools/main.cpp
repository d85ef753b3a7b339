#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "dynlabel/harness/config.hpp"
#include "dynlabel/harness/runner.hpp"
#include "dynlabel/harness/scenario_gen.hpp"
#include "dynlabel/harness/standalone.hpp"
#include "dynlabel/simnet/scenario.hpp"

namespace dh = dynlabel::harness;

namespace {

struct RunFlags {
  std::string model = "increasing";
  std::string ports = "designer";
  std::string function = "ancestry";
  std::string kfn = "pow:0.5";
  std::string verify = "auto";
  std::string invariants = "final";
  std::string fault = "none";
  std::string out;
  std::string memory_csv;
};

void add_run_flags(CLI::App& app, dh::RunConfig& config, RunFlags& flags) {
  app.add_option("--model", flags.model, "increasing | dynamic")->capture_default_str();
  app.add_option("--ports", flags.ports, "designer | adversary")->capture_default_str();
  app.add_option("--function", flags.function, "ancestry | distance | seplevel | routing")->capture_default_str();
  app.add_option("--kfn", flags.kfn, "pow:E | logpow:E | const:K")->capture_default_str();
  app.add_option("--verify", flags.verify, "auto | exhaustive | sampled:M | off")->capture_default_str();
  app.add_option("--invariants", flags.invariants, "every-event | final | off")->capture_default_str();
  app.add_option("--watch", config.watch, "change estimator")->capture_default_str();
  app.add_option("--port-cap", config.port_cap, "largest adversary port number")->capture_default_str();
  app.add_option("--label-constant", config.bounds.label_constant, "C in labels <= C p LS(n)")->capture_default_str();
  app.add_option("--memory-constant", config.bounds.memory_constant, "memory budget constant")
      ->capture_default_str();
  app.add_option("--inject-fault", flags.fault, "none | flip-interval")->capture_default_str();
  app.add_option("--out", flags.out, "metrics CSV; the JSON report goes next to it");
  app.add_option("--memory-csv", flags.memory_csv, "per-node memory CSV of the final tree");
}

void apply(dh::RunConfig& config, const RunFlags& flags) {
  config.model = dh::parse_model(flags.model);
  config.ports = dh::parse_port_model(flags.ports);
  config.function = dynlabel::functions::parse_function(flags.function);
  config.kfn = dynlabel::dynamic::KFunction::parse(flags.kfn);
  config.verify = dh::VerifyMode::parse(flags.verify);
  config.invariants = dh::parse_invariant_mode(flags.invariants);
  config.fault = dh::parse_fault(flags.fault);
  if (!flags.out.empty()) config.output = flags.out;
  if (!flags.memory_csv.empty()) config.memory_csv = flags.memory_csv;
}

int summarize(const dh::RunResult& r) {
  std::cout << "events " << r.events_applied << ", n " << r.final_n << ", messages " << r.metrics.messages_sent
            << ", max label bits " << r.metrics.max_label_bits << ", max memory bits " << r.metrics.max_memory_bits
            << ", phases " << r.metrics.phases << ", restarts " << r.metrics.restarts.size() << '\n';
  std::cout << "queries " << r.report.queries_checked << ", mismatches " << r.report.mismatch_count
            << ", invariant violations " << r.report.invariant_violations.size() << ", bound violations "
            << r.report.bound_violations.size() << ", dead sends " << r.dead_sends << '\n';
  for (const dh::Mismatch& m : r.report.mismatches) {
    std::cout << "mismatch seed=" << m.seed << " event=" << m.event << " u=" << m.u.value << " v=" << m.v.value
              << " expected " << m.expected << " decoded " << m.decoded << '\n';
  }
  for (std::size_t i = 0; i < r.report.invariant_violations.size() && i < 10; ++i) {
    std::cout << "invariant: " << r.report.invariant_violations[i] << '\n';
  }
  for (std::size_t i = 0; i < r.report.bound_violations.size() && i < 10; ++i) {
    std::cout << "bound: " << r.report.bound_violations[i] << '\n';
  }
  if (!r.error.empty()) std::cout << "error: " << r.error << '\n';
  std::cout << (r.passed() ? "PASS" : "FAIL") << '\n';
  return dh::exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic tree labeling simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  dh::RunConfig run_config;
  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "generate a scenario and run a scheme on it");
  run->add_option("--seed", run_config.seed, "scenario seed")->capture_default_str();
  run->add_option("--events", run_config.events, "number of events")->capture_default_str();
  run->add_option("--pdelete", run_config.delete_probability, "probability an event removes a leaf")
      ->capture_default_str();
  add_run_flags(*run, run_config, run_flags);

  dh::RunConfig replay_config;
  RunFlags replay_flags;
  std::string replay_file;
  CLI::App* replay = app.add_subcommand("replay", "run a scheme on a scenario file");
  replay->add_option("scenario", replay_file, "file of `A <parent>` / `R <leaf>` lines")->required();
  replay->add_option("--seed", replay_config.seed, "seed for ports and sampling")->capture_default_str();
  add_run_flags(*replay, replay_config, replay_flags);

  std::uint64_t gen_seed = 1;
  std::uint64_t gen_events = 1000;
  double gen_pdelete = 0.0;
  std::string gen_out;
  CLI::App* generate = app.add_subcommand("generate", "write a random scenario");
  generate->add_option("--seed", gen_seed)->capture_default_str();
  generate->add_option("--events", gen_events)->capture_default_str();
  generate->add_option("--pdelete", gen_pdelete)->capture_default_str();
  generate->add_option("--out", gen_out, "output file (stdout when omitted)");

  dh::StandaloneConfig sa;
  std::string sa_growth;
  std::string sa_function = "ancestry";
  std::string sa_ports = "designer";
  CLI::App* standalone = app.add_subcommand("standalone", "grow one finite scheme until it would terminate");
  standalone->add_option("-k", sa.k, "branching factor")->capture_default_str();
  standalone->add_option("-p", sa.p, "levels")->capture_default_str();
  standalone->add_option("--seed", sa.seed)->capture_default_str();
  standalone->add_option("--growth", sa_growth, "random | path | star | greedy (default: by seed)");
  standalone->add_option("--function", sa_function)->capture_default_str();
  standalone->add_option("--ports", sa_ports)->capture_default_str();
  standalone->add_option("--max-joins", sa.max_joins, "stop after this many joins")->capture_default_str();
  bool sa_no_verify = false;
  standalone->add_flag("--no-verify", sa_no_verify, "skip decode checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      apply(run_config, run_flags);
      return summarize(dh::run(run_config));
    }
    if (*replay) {
      apply(replay_config, replay_flags);
      replay_config.scenario_file = replay_file;
      return summarize(dh::run(replay_config));
    }
    if (*generate) {
      const auto events = dh::generate_scenario(gen_seed, gen_events, gen_pdelete);
      if (gen_out.empty()) {
        dynlabel::simnet::write_scenario(std::cout, events);
      } else {
        std::ofstream out(gen_out);
        dynlabel::simnet::write_scenario(out, events);
      }
      return 0;
    }
    if (*standalone) {
      sa.growth = sa_growth.empty() ? dh::growth_for_seed(sa.seed) : dh::parse_growth(sa_growth);
      sa.function = dynlabel::functions::parse_function(sa_function);
      sa.ports = dh::parse_port_model(sa_ports);
      sa.verify = !sa_no_verify;
      const dh::StandaloneResult r = dh::run_standalone(sa);
      const bool ok = r.stopping_ok(sa.k, sa.p) && r.messages_ok() && r.report.passed();
      std::cout << "growth " << dh::name(sa.growth) << ", joins " << r.joins << (r.terminated ? "" : " (no stop)")
                << ", n " << r.final_n << ", messages " << r.messages << " <= " << r.message_bound
                << ", mismatches " << r.report.mismatch_count << '\n'
                << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
