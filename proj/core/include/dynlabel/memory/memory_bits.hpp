#pragma once

#include <cstdint>

#include "dynlabel/fsdl/scheme_state.hpp"
#include "dynlabel/memory/port_bookkeeping.hpp"

namespace dynlabel::memory {

/// Bits of the level machinery alone: one flag per level, then for each level the node
/// roots a counting bit and gamma(mu + 1), and gamma(omega) per tracked ever-count.
std::uint64_t level_state_bits(const fsdl::SchemeState& state);

/// level_state_bits plus the port bookkeeping fields.
std::uint64_t memory_bits(const fsdl::SchemeState& state, const PortBookkeeping& ports);

}  // namespace dynlabel::memory
