#pragma once

#include "dynlabel/memory/port_bookkeeping.hpp"

namespace dynlabel::memory {

/// Designer port model: ports to children in T_l(v) are exactly 1..a_l.
class DesignerPorts final : public PortBookkeeping {
 public:
  BookkeepingKind kind() const override { return BookkeepingKind::Designer; }
  void init_fields(fsdl::SchemeState& state, std::uint32_t levels) const override;
  void on_leaf_joined(Context& ctx, NodeId parent, NodeId leaf) override;
  void on_leaf_removed(Context& ctx, NodeId parent, PortNumber port, const fsdl::SchemeState& removed) override;
  void on_level_reset(Context& ctx, NodeId v, std::uint32_t level, std::span<const NodeId> subtree_children,
                      bool whole_tree) override;
  std::vector<PortNumber> level_child_ports(Context& ctx, NodeId v, std::uint32_t l) override;
  std::uint64_t field_bits(const fsdl::SchemeState& state) const override;
  void check(const simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v) const override;
};

}  // namespace dynlabel::memory
