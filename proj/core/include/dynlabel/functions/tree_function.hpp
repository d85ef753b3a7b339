#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "dynlabel/bits.hpp"
#include "dynlabel/simnet/tree_network.hpp"
#include "dynlabel/types.hpp"

namespace dynlabel::functions {

enum class FunctionKind { Ancestry, Distance, SeparationLevel, Routing };

std::string_view name(FunctionKind kind);
FunctionKind parse_function(std::string_view text);

/// Position of u relative to v.
enum class Relation : std::uint8_t { Equal = 0, Ancestor = 1, Descendant = 2, Unrelated = 3 };

struct Distance {
  std::uint64_t hops = 0;
  bool operator==(const Distance&) const = default;
};

/// Depth of the nearest common ancestor.
struct SepLevel {
  std::uint64_t depth = 0;
  bool operator==(const SepLevel&) const = default;
};

/// First hop in both directions: `forward` is the port at u towards v, `backward` the
/// port at v towards u. Both empty exactly when u == v.
struct Route {
  std::optional<PortNumber> forward;
  std::optional<PortNumber> backward;
  bool is_self() const { return !forward && !backward; }
  bool operator==(const Route&) const = default;
};

using FValue = std::variant<Relation, Distance, SepLevel, Route>;

FunctionKind kind_of(const FValue& value);
std::string describe(const FValue& value);

/// Ground truth by walking parent pointers. Throws TopologyError on dead nodes.
FValue oracle(const simnet::TreeNetwork& net, FunctionKind kind, NodeId u, NodeId v);

/// F(u,v) from F(u,w) and F(w,v), w on the u-v path. Throws CompositionError when the
/// two values cannot both hold for such a w.
FValue compose(const FValue& uw, const FValue& wv);

/// F(v,u) from F(u,v).
FValue reverse(const FValue& uv);

/// F(u,u) for the given node.
FValue identity(const simnet::TreeNetwork& net, FunctionKind kind, NodeId u);

/// F(z,w) for a parent z and its child w, from what z and w know locally.
FValue parent_to_child(const simnet::TreeNetwork& net, FunctionKind kind, NodeId z, NodeId w);

void encode(const FValue& value, BitWriter& out);
FValue decode(FunctionKind kind, BitReader& in);
BitString encode(const FValue& value);
FValue decode(FunctionKind kind, const BitString& bits);

}  // namespace dynlabel::functions
