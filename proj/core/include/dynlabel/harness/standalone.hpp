#pragma once

#include <cstdint>
#include <string_view>

#include "dynlabel/functions/tree_function.hpp"
#include "dynlabel/harness/verify.hpp"
#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::harness {

/// Join orders for a standalone FSDL run.
enum class GrowthStrategy {
  Random,  // uniform alive parent
  Path,    // always below the newest node
  Star,    // always below the root
  Greedy,  // below the node whose enclosing instances are closest to terminating
};

std::string_view name(GrowthStrategy strategy);
GrowthStrategy parse_growth(std::string_view text);
/// Strategy used for an unspecified seed: cycles through the adversarial orders.
GrowthStrategy growth_for_seed(std::uint64_t seed);

struct StandaloneConfig {
  std::uint32_t k = 2;
  std::uint32_t p = 1;
  std::uint64_t seed = 1;
  GrowthStrategy growth = GrowthStrategy::Greedy;
  functions::FunctionKind function = functions::FunctionKind::Ancestry;
  simnet::PortModel ports = simnet::PortModel::Designer;
  std::uint64_t port_cap = 1u << 20;
  bool verify = true;
  /// Safety stop for schemes that never terminate.
  std::uint64_t max_joins = 1'000'000;
};

struct StandaloneResult {
  std::uint64_t joins = 0;  // joins up to and including the one that terminated the scheme
  bool terminated = false;
  std::uint64_t final_n = 0;
  std::uint64_t messages = 0;
  std::uint64_t mc = 0;          // MC_pi(final_n)
  std::uint64_t message_bound = 0;  // 5 p k MC_pi(final_n)
  std::uint64_t marker_overruns = 0;  // resets whose marker sent more than MC_pi(size)
  std::uint64_t max_label_bits = 0;
  VerificationReport report;

  /// Stopping time at least k^p.
  bool stopping_ok(std::uint32_t k, std::uint32_t p) const;
  bool messages_ok() const { return messages <= message_bound && marker_overruns == 0; }
};

/// FSDL^k_p from a single root, grown until it would terminate.
StandaloneResult run_standalone(const StandaloneConfig& config);

}  // namespace dynlabel::harness
