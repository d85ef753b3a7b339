#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynlabel/static_schemes/static_scheme.hpp"

namespace dynlabel::static_schemes {

/// Light edge on the path from the invocation root: the ancestor's visit number and
/// the port it uses towards the light child.
struct LightHop {
  std::uint64_t ancestor = 0;
  PortNumber port;
  bool operator==(const LightHop&) const = default;
};

/// Heavy-first DFS interval plus the ports needed to leave or descend it.
struct RoutingLabel {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::optional<PortNumber> parent_port;
  std::optional<PortNumber> heavy_port;
  std::uint64_t heavy_size = 0;
  std::vector<LightHop> light;
  bool operator==(const RoutingLabel&) const = default;
};

BitString encode_routing_label(const RoutingLabel& label);
RoutingLabel decode_routing_label(const BitString& bits);

/// Port at the owner of `from` towards the owner of `to`; empty when they coincide.
std::optional<PortNumber> route_first_hop(const RoutingLabel& from, const RoutingLabel& to);

/// Labels carry the live port numbers, so ports must stay fixed while labels are in use.
class RoutingScheme final : public StaticScheme {
 public:
  std::string_view name() const override { return "heavy-path-routing"; }
  functions::FunctionKind function() const override { return functions::FunctionKind::Routing; }
  std::vector<BitString> mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const override;
  functions::FValue decode(const BitString& lu, const BitString& lv) const override;
  std::uint64_t mc_budget(std::uint64_t m) const override { return m == 0 ? 0 : 3 * (m - 1); }
  std::uint64_t ls_budget(const LabelContext& ctx) const override;

  /// Label computation alone, no messages.
  static std::vector<RoutingLabel> compute(const simnet::TreeNetwork& net, const simnet::Subtree& st);
};

}  // namespace dynlabel::static_schemes
