#include "dynlabel/memory/memory_bits.hpp"

#include "dynlabel/memory/adversary_tables.hpp"
#include "dynlabel/memory/designer_ports.hpp"

namespace dynlabel::memory {

std::string_view name(BookkeepingKind kind) {
  return kind == BookkeepingKind::Designer ? "designer" : "adversary";
}

std::unique_ptr<PortBookkeeping> make_bookkeeping(BookkeepingKind kind, bool track_pointers) {
  if (kind == BookkeepingKind::Designer) return std::make_unique<DesignerPorts>();
  return std::make_unique<AdversaryTables>(track_pointers);
}

std::uint64_t level_state_bits(const fsdl::SchemeState& state) {
  std::uint64_t bits = state.root_flag.size();
  for (std::uint32_t l = 1; l <= state.levels(); ++l) {
    if (state.flagged(l)) bits += 1 + gamma_length(state.instance[l - 1].mu + 1);
  }
  for (std::uint64_t w : state.omega) bits += gamma_length(w);
  return bits;
}

std::uint64_t memory_bits(const fsdl::SchemeState& state, const PortBookkeeping& ports) {
  return level_state_bits(state) + ports.field_bits(state);
}

}  // namespace dynlabel::memory
