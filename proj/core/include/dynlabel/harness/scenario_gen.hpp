#pragma once

#include <cstdint>
#include <vector>

#include "dynlabel/simnet/scenario.hpp"

namespace dynlabel::harness {

/// `events` random events on a tree that starts as the root alone. With probability
/// `p_delete` an event removes a uniform non-root leaf; when there is none it adds
/// instead. Additions pick a uniform alive parent.
std::vector<simnet::ScenarioEvent> generate_scenario(std::uint64_t seed, std::uint64_t events, double p_delete);

}  // namespace dynlabel::harness
