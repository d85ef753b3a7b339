#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "dynlabel/fsdl/scheme_state.hpp"
#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::memory {

enum class BookkeepingKind { Designer, AdversaryTables };

std::string_view name(BookkeepingKind kind);

struct Context {
  simnet::TreeNetwork& net;
  fsdl::StateStore& store;
  std::uint32_t levels;  // p of the running phase
};

/// Lets every node recover E_l(v), the ports to its children inside T_l(v), for l < p.
/// All writes to another node's memory are charged one message per node written,
/// except nodes that receive the reset broadcast anyway.
class PortBookkeeping {
 public:
  virtual ~PortBookkeeping() = default;

  virtual BookkeepingKind kind() const = 0;

  /// Sizes and clears this model's fields for a phase with `levels` levels.
  virtual void init_fields(fsdl::SchemeState& state, std::uint32_t levels) const = 0;

  /// Initialises the new leaf's fields and updates its parent.
  virtual void on_leaf_joined(Context& ctx, NodeId parent, NodeId leaf) = 0;
  /// `port` is the deleted child's old port at the parent, `removed` its Memory as
  /// recovered from the backup copy. Runs after the network dropped the link.
  virtual void on_leaf_removed(Context& ctx, NodeId parent, PortNumber port, const fsdl::SchemeState& removed) = 0;
  /// v belongs to a reset whose broadcast starts fresh instances on every level below
  /// `level`. `subtree_children` are v's children inside that reset. `whole_tree` is set
  /// for the top-level reset of the entire tree.
  virtual void on_level_reset(Context& ctx, NodeId v, std::uint32_t level, std::span<const NodeId> subtree_children,
                              bool whole_tree) = 0;
  /// E_l(v) for 1 <= l < p.
  virtual std::vector<PortNumber> level_child_ports(Context& ctx, NodeId v, std::uint32_t l) = 0;

  virtual std::uint64_t field_bits(const fsdl::SchemeState& state) const = 0;

  /// Throws InvariantViolation when v's fields disagree with the decomposition.
  virtual void check(const simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v) const = 0;
};

/// `track_pointers` enables the Pointers fields needed once leaves can be deleted.
std::unique_ptr<PortBookkeeping> make_bookkeeping(BookkeepingKind kind, bool track_pointers);

}  // namespace dynlabel::memory
