#include "dynlabel/harness/verify.hpp"

#include <unordered_map>

namespace dynlabel::harness {

namespace {

std::vector<NodeId> alive_nodes(const simnet::TreeNetwork& net) {
  std::vector<NodeId> out;
  out.reserve(net.alive_count());
  for (std::uint32_t i = 0; i < net.node_count(); ++i) {
    if (net.alive(NodeId{i})) out.emplace_back(i);
  }
  return out;
}

class Checker {
 public:
  Checker(const fsdl::Engine& engine, std::uint64_t seed, std::uint64_t event, VerificationReport& report)
      : engine_(engine), seed_(seed), event_(event), report_(report) {}

  void check(NodeId u, NodeId v) {
    ++report_.queries_checked;
    const functions::FValue expected = functions::oracle(engine_.network(), engine_.scheme().function(), u, v);
    std::string decoded;
    try {
      const functions::FValue got = engine_.decode(label(u), label(v));
      if (got == expected) return;
      decoded = functions::describe(got);
    } catch (const std::exception& e) {
      decoded = std::string("error: ") + e.what();
    }
    ++report_.mismatch_count;
    if (report_.mismatches.size() < VerificationReport::kept_mismatches) {
      report_.mismatches.push_back(Mismatch{seed_, event_, u, v, functions::describe(expected), decoded});
    }
  }

 private:
  const BitString& label(NodeId v) {
    auto it = cache_.find(v);
    if (it == cache_.end()) it = cache_.emplace(v, engine_.label(v).bits).first;
    return it->second;
  }

  const fsdl::Engine& engine_;
  std::uint64_t seed_;
  std::uint64_t event_;
  VerificationReport& report_;
  std::unordered_map<NodeId, BitString> cache_;
};

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  queries_checked += other.queries_checked;
  mismatch_count += other.mismatch_count;
  for (const Mismatch& m : other.mismatches) {
    if (mismatches.size() < kept_mismatches) mismatches.push_back(m);
  }
  invariant_violations.insert(invariant_violations.end(), other.invariant_violations.begin(),
                              other.invariant_violations.end());
  bound_violations.insert(bound_violations.end(), other.bound_violations.begin(), other.bound_violations.end());
}

void verify_exhaustive(const fsdl::Engine& engine, std::uint64_t seed, std::uint64_t event,
                       VerificationReport& report) {
  const std::vector<NodeId> nodes = alive_nodes(engine.network());
  Checker checker(engine, seed, event, report);
  for (NodeId u : nodes) {
    for (NodeId v : nodes) checker.check(u, v);
  }
}

void verify_step(const fsdl::Engine& engine, const VerifyMode& mode, std::mt19937_64& rng, std::uint64_t seed,
                 std::uint64_t event, VerificationReport& report) {
  const std::uint64_t n = engine.network().alive_count();
  switch (mode.kind) {
    case VerifyMode::Kind::Off:
      return;
    case VerifyMode::Kind::Exhaustive:
      if (n > VerifyMode::exhaustive_limit) {
        throw ConfigError("exhaustive verification is limited to trees of at most " +
                          std::to_string(VerifyMode::exhaustive_limit) + " nodes");
      }
      verify_exhaustive(engine, seed, event, report);
      return;
    case VerifyMode::Kind::Auto:
      if (n <= VerifyMode::auto_exhaustive_limit) {
        verify_exhaustive(engine, seed, event, report);
        return;
      }
      break;
    case VerifyMode::Kind::Sampled:
      break;
  }
  const std::vector<NodeId> nodes = alive_nodes(engine.network());
  std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
  Checker checker(engine, seed, event, report);
  for (std::uint64_t i = 0; i < mode.samples; ++i) {
    const NodeId u = nodes[pick(rng)];
    const NodeId v = nodes[pick(rng)];
    checker.check(u, v);
  }
}

}  // namespace dynlabel::harness
