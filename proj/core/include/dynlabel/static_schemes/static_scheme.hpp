#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "dynlabel/bits.hpp"
#include "dynlabel/functions/tree_function.hpp"
#include "dynlabel/simnet/protocols.hpp"
#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::static_schemes {

/// Sizes that bound a static label for one marker invocation.
struct LabelContext {
  std::uint64_t nodes = 1;
  std::uint64_t max_depth = 0;
  std::uint64_t max_port = 0;
};

/// A static F-labeling scheme run as a distributed marker over a subtree.
class StaticScheme {
 public:
  virtual ~StaticScheme() = default;

  virtual std::string_view name() const = 0;
  virtual functions::FunctionKind function() const = 0;

  /// Labels for `st.nodes`, index-aligned. Sends the marker's messages on `net`.
  virtual std::vector<BitString> mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const = 0;

  /// F(u,v) from two labels of the same invocation.
  virtual functions::FValue decode(const BitString& lu, const BitString& lv) const = 0;

  /// Worst-case marker messages on a subtree of m nodes.
  virtual std::uint64_t mc_budget(std::uint64_t m) const = 0;
  virtual std::uint64_t ls_budget(const LabelContext& ctx) const = 0;

  /// Label of a one-node invocation. Computed locally, no messages.
  BitString singleton_label(simnet::TreeNetwork& net, NodeId v) const;
};

struct SchemeOptions {
  /// Mutation for harness self-tests: the ancestry decoder tests containment backwards.
  bool flip_interval = false;
};

std::unique_ptr<StaticScheme> make_static_scheme(functions::FunctionKind kind, SchemeOptions options = {});

/// Generic fallback for F(u,w): both static labels, length-prefixed.
BitString encode_label_pair(const BitString& lu, const BitString& lw);
functions::FValue decode_label_pair(const StaticScheme& scheme, const BitString& encoded);

}  // namespace dynlabel::static_schemes
