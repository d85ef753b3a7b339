#include "dynlabel/harness/config.hpp"

#include <charconv>

#include "dynlabel/types.hpp"

namespace dynlabel::harness {

std::string_view name(Model model) { return model == Model::Increasing ? "increasing" : "dynamic"; }

Model parse_model(std::string_view text) {
  if (text == "increasing") return Model::Increasing;
  if (text == "dynamic") return Model::Dynamic;
  throw ConfigError("unknown model: " + std::string(text));
}

simnet::PortModel parse_port_model(std::string_view text) {
  if (text == "designer") return simnet::PortModel::Designer;
  if (text == "adversary") return simnet::PortModel::Adversary;
  throw ConfigError("unknown port model: " + std::string(text));
}

std::string_view name(simnet::PortModel model) {
  return model == simnet::PortModel::Designer ? "designer" : "adversary";
}

VerifyMode VerifyMode::parse(std::string_view text) {
  if (text == "auto") return VerifyMode{Kind::Auto, 64};
  if (text == "exhaustive") return VerifyMode{Kind::Exhaustive, 0};
  if (text == "off") return VerifyMode{Kind::Off, 0};
  constexpr std::string_view prefix = "sampled:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    std::uint64_t m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && m > 0) return VerifyMode{Kind::Sampled, m};
  }
  throw ConfigError("verify mode must be auto, exhaustive, sampled:M or off: " + std::string(text));
}

std::string VerifyMode::to_string() const {
  switch (kind) {
    case Kind::Auto:
      return "auto";
    case Kind::Exhaustive:
      return "exhaustive";
    case Kind::Sampled:
      return "sampled:" + std::to_string(samples);
    case Kind::Off:
      return "off";
  }
  return "?";
}

InvariantMode parse_invariant_mode(std::string_view text) {
  if (text == "every-event") return InvariantMode::EveryEvent;
  if (text == "final") return InvariantMode::Final;
  if (text == "off") return InvariantMode::Off;
  throw ConfigError("invariant mode must be every-event, final or off: " + std::string(text));
}

std::string_view name(InvariantMode mode) {
  switch (mode) {
    case InvariantMode::EveryEvent:
      return "every-event";
    case InvariantMode::Final:
      return "final";
    case InvariantMode::Off:
      return "off";
  }
  return "?";
}

Fault parse_fault(std::string_view text) {
  if (text == "none") return Fault::None;
  if (text == "flip-interval") return Fault::FlipInterval;
  throw ConfigError("unknown fault: " + std::string(text));
}

void validate(const RunConfig& config) {
  if (!(config.delete_probability >= 0.0 && config.delete_probability < 1.0)) {
    throw ConfigError("delete probability must lie in [0, 1)");
  }
  if (config.model == Model::Increasing && config.delete_probability != 0.0) {
    throw ConfigError("the increasing model has no deletions; use --pdelete 0");
  }
  if (config.verify.kind == VerifyMode::Kind::Exhaustive && !config.scenario_file &&
      config.events + 1 > VerifyMode::exhaustive_limit) {
    throw ConfigError("exhaustive verification is limited to trees of at most " +
                      std::to_string(VerifyMode::exhaustive_limit) + " nodes");
  }
  if (config.fault == Fault::FlipInterval && config.function != functions::FunctionKind::Ancestry) {
    throw ConfigError("the interval fault only applies to ancestry labels");
  }
  if (config.watch != "exact") throw ConfigError("unknown change estimator: " + config.watch);
  if (config.port_cap < 2) throw ConfigError("port cap must be at least 2");
}

dynamic::SchemeKind scheme_for(Model model) {
  return model == Model::Increasing ? dynamic::SchemeKind::Sdl : dynamic::SchemeKind::Dl;
}

memory::BookkeepingKind bookkeeping_for(simnet::PortModel ports, functions::FunctionKind function) {
  if (ports == simnet::PortModel::Designer && function != functions::FunctionKind::Routing) {
    return memory::BookkeepingKind::Designer;
  }
  return memory::BookkeepingKind::AdversaryTables;
}

}  // namespace dynlabel::harness
