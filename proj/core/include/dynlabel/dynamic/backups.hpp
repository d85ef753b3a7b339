#pragma once

#include <cstdint>
#include <vector>

#include "dynlabel/fsdl/scheme_state.hpp"
#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::dynamic {

struct BackupCopy {
  NodeId subject;
  fsdl::SchemeState memory;
};

/// Sibling ring of v's children by ascending port: next of the last is the first.
NodeId next_sibling(const simnet::TreeNetwork& net, NodeId u);
NodeId previous_sibling(const simnet::TreeNetwork& net, NodeId u);

/// Copies of children's Memory so a parent can recover a deleted leaf's state. The copy
/// of child u of v lives at v when u is v's only child, otherwise at next(u).
class BackupStore {
 public:
  /// The new child u keeps a copy of Memory(pre(u)) when it has siblings.
  void on_child_added(simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v, NodeId u);

  /// Recovers Memory(u) after u was removed from v. `port` is u's old port at v.
  fsdl::SchemeState retrieve(simnet::TreeNetwork& net, NodeId v, NodeId u, PortNumber port) const;

  /// Repairs the copies around a removed child: the remaining only child is copied to v,
  /// or next(u) takes over a copy of pre(u). Drops every copy u held or was the subject of.
  void on_child_removed(simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v, NodeId u,
                        PortNumber port);

  /// Re-sends copies of every listed node whose Memory changed. Returns the holders
  /// whose stored copies changed.
  std::vector<NodeId> flush(simnet::TreeNetwork& net, const fsdl::StateStore& store,
                            const std::vector<NodeId>& changed);

  const std::vector<BackupCopy>& held_by(NodeId v) const;
  void clear();

 private:
  std::vector<BackupCopy>& slot(NodeId v);
  void store_copy(const simnet::TreeNetwork& net, NodeId holder, NodeId subject, const fsdl::SchemeState& memory);

  std::vector<std::vector<BackupCopy>> held_;
};

}  // namespace dynlabel::dynamic
