#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "dynlabel/dynamic/kfunction.hpp"
#include "dynlabel/dynamic/schemes.hpp"
#include "dynlabel/functions/tree_function.hpp"
#include "dynlabel/memory/port_bookkeeping.hpp"
#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::harness {

enum class Model { Increasing, Dynamic };

std::string_view name(Model model);
Model parse_model(std::string_view text);
simnet::PortModel parse_port_model(std::string_view text);
std::string_view name(simnet::PortModel model);

/// How many label pairs are decoded after each event.
struct VerifyMode {
  enum class Kind { Auto, Exhaustive, Sampled, Off };
  Kind kind = Kind::Auto;
  /// Pairs per event for Sampled, and for Auto once n exceeds `auto_exhaustive_limit`.
  std::uint64_t samples = 64;

  static constexpr std::uint64_t auto_exhaustive_limit = 64;
  static constexpr std::uint64_t exhaustive_limit = 128;

  /// `auto`, `exhaustive`, `sampled:M` or `off`.
  static VerifyMode parse(std::string_view text);
  std::string to_string() const;
};

enum class InvariantMode { EveryEvent, Final, Off };

InvariantMode parse_invariant_mode(std::string_view text);
std::string_view name(InvariantMode mode);

/// Budget curves a run is checked against.
struct Bounds {
  /// Label bits <= label_constant * p * LS_pi(n).
  double label_constant = 3.0;
  /// Label bits <= scaling_constant * log_{k(n)}(n) * LS_pi(n).
  double scaling_constant = 6.0;
  /// Memory bits <= memory_constant * p * (log2(n) + log2(max port) + 2).
  double memory_constant = 12.0;
};

enum class Fault { None, FlipInterval };

Fault parse_fault(std::string_view text);

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t events = 1000;
  double delete_probability = 0.0;
  Model model = Model::Increasing;
  simnet::PortModel ports = simnet::PortModel::Designer;
  functions::FunctionKind function = functions::FunctionKind::Ancestry;
  dynamic::KFunction kfn = dynamic::KFunction::power_of_n(0.5);
  VerifyMode verify;
  InvariantMode invariants = InvariantMode::Final;
  std::string watch = "exact";
  /// Largest port number the adversary may assign.
  std::uint64_t port_cap = 1u << 20;
  Bounds bounds;
  Fault fault = Fault::None;
  /// Replays this file instead of generating a scenario.
  std::optional<std::filesystem::path> scenario_file;
  /// Metrics CSV; the JSON report goes next to it with a `.json` extension.
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> memory_csv;
};

/// Throws ConfigError when the fields contradict each other.
void validate(const RunConfig& config);

/// Scheme run for a model: SDL when increasing, DL when dynamic.
dynamic::SchemeKind scheme_for(Model model);
/// Bookkeeping for a port model. Routing labels embed the ports, so routing always keeps
/// them fixed and uses the table bookkeeping.
memory::BookkeepingKind bookkeeping_for(simnet::PortModel ports, functions::FunctionKind function);

}  // namespace dynlabel::harness
