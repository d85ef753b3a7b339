#pragma once

#include "dynlabel/memory/port_bookkeeping.hpp"

namespace dynlabel::memory {

/// Adversary port model: c_l counts E_l(v), whose ports are spread over the Table_l
/// fields of v's first c_l children; Pointers_l links each member back to its holder.
class AdversaryTables final : public PortBookkeeping {
 public:
  explicit AdversaryTables(bool track_pointers) : track_pointers_(track_pointers) {}

  BookkeepingKind kind() const override { return BookkeepingKind::AdversaryTables; }
  bool tracks_pointers() const { return track_pointers_; }
  void init_fields(fsdl::SchemeState& state, std::uint32_t levels) const override;
  void on_leaf_joined(Context& ctx, NodeId parent, NodeId leaf) override;
  void on_leaf_removed(Context& ctx, NodeId parent, PortNumber port, const fsdl::SchemeState& removed) override;
  void on_level_reset(Context& ctx, NodeId v, std::uint32_t level, std::span<const NodeId> subtree_children,
                      bool whole_tree) override;
  std::vector<PortNumber> level_child_ports(Context& ctx, NodeId v, std::uint32_t l) override;
  std::uint64_t field_bits(const fsdl::SchemeState& state) const override;
  void check(const simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v) const override;

 private:
  bool track_pointers_;
};

}  // namespace dynlabel::memory
