#include "dynlabel/functions/tree_function.hpp"

#include <string>

namespace dynlabel::functions {

std::string_view name(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::Ancestry: return "ancestry";
    case FunctionKind::Distance: return "distance";
    case FunctionKind::SeparationLevel: return "seplevel";
    case FunctionKind::Routing: return "routing";
  }
  return "?";
}

FunctionKind parse_function(std::string_view text) {
  if (text == "ancestry") return FunctionKind::Ancestry;
  if (text == "distance") return FunctionKind::Distance;
  if (text == "seplevel") return FunctionKind::SeparationLevel;
  if (text == "routing") return FunctionKind::Routing;
  throw ConfigError("unknown function '" + std::string(text) + "'");
}

FunctionKind kind_of(const FValue& value) {
  return static_cast<FunctionKind>(value.index());
}

std::string describe(const FValue& value) {
  struct Visitor {
    std::string operator()(Relation r) const {
      switch (r) {
        case Relation::Equal: return "equal";
        case Relation::Ancestor: return "ancestor";
        case Relation::Descendant: return "descendant";
        case Relation::Unrelated: return "unrelated";
      }
      return "?";
    }
    std::string operator()(Distance d) const { return "distance " + std::to_string(d.hops); }
    std::string operator()(SepLevel s) const { return "nca-depth " + std::to_string(s.depth); }
    std::string operator()(const Route& r) const {
      auto port = [](const std::optional<PortNumber>& p) { return p ? std::to_string(p->value) : std::string("self"); };
      return "route fwd " + port(r.forward) + " bwd " + port(r.backward);
    }
  };
  return std::visit(Visitor{}, value);
}

namespace {

NodeId nca(const simnet::TreeNetwork& net, NodeId u, NodeId v) {
  while (net.depth(u) > net.depth(v)) u = net.parent(u);
  while (net.depth(v) > net.depth(u)) v = net.parent(v);
  while (u != v) {
    u = net.parent(u);
    v = net.parent(v);
  }
  return u;
}

/// Port at a towards b, a != b.
PortNumber first_hop(const simnet::TreeNetwork& net, NodeId a, NodeId b, NodeId common) {
  if (common != a) return net.parent_port(a);
  NodeId x = b;
  while (net.parent(x) != a) x = net.parent(x);
  return net.port_to(a, x);
}

}  // namespace

FValue oracle(const simnet::TreeNetwork& net, FunctionKind kind, NodeId u, NodeId v) {
  if (!net.alive(u) || !net.alive(v)) throw TopologyError("oracle query on a dead node");
  const NodeId c = nca(net, u, v);
  switch (kind) {
    case FunctionKind::Ancestry:
      if (u == v) return Relation::Equal;
      if (c == u) return Relation::Ancestor;
      if (c == v) return Relation::Descendant;
      return Relation::Unrelated;
    case FunctionKind::Distance:
      return Distance{std::uint64_t{net.depth(u)} + net.depth(v) - 2ULL * net.depth(c)};
    case FunctionKind::SeparationLevel:
      return SepLevel{net.depth(c)};
    case FunctionKind::Routing:
      if (u == v) return Route{};
      return Route{first_hop(net, u, v, c), first_hop(net, v, u, c)};
  }
  throw std::logic_error("unreachable");
}

namespace {

Relation compose_relation(Relation x, Relation y) {
  using R = Relation;
  if (x == R::Equal) return y;
  if (y == R::Equal) return x;
  if (x == R::Ancestor && y == R::Ancestor) return R::Ancestor;
  if (x == R::Descendant && y == R::Descendant) return R::Descendant;
  if (x == R::Descendant && (y == R::Ancestor || y == R::Unrelated)) return R::Unrelated;
  if (x == R::Unrelated && y == R::Ancestor) return R::Unrelated;
  throw CompositionError("ancestry values cannot meet at a node on the path");
}

}  // namespace

FValue compose(const FValue& uw, const FValue& wv) {
  if (uw.index() != wv.index()) throw CompositionError("composing values of different functions");
  switch (kind_of(uw)) {
    case FunctionKind::Ancestry:
      return compose_relation(std::get<Relation>(uw), std::get<Relation>(wv));
    case FunctionKind::Distance:
      return Distance{std::get<Distance>(uw).hops + std::get<Distance>(wv).hops};
    case FunctionKind::SeparationLevel:
      return SepLevel{std::min(std::get<SepLevel>(uw).depth, std::get<SepLevel>(wv).depth)};
    case FunctionKind::Routing: {
      const Route& a = std::get<Route>(uw);
      const Route& b = std::get<Route>(wv);
      if (a.forward.has_value() != a.backward.has_value() || b.forward.has_value() != b.backward.has_value()) {
        throw CompositionError("half-empty route value");
      }
      return Route{a.is_self() ? b.forward : a.forward, b.is_self() ? a.backward : b.backward};
    }
  }
  throw std::logic_error("unreachable");
}

FValue reverse(const FValue& uv) {
  if (const auto* r = std::get_if<Relation>(&uv)) {
    if (*r == Relation::Ancestor) return Relation::Descendant;
    if (*r == Relation::Descendant) return Relation::Ancestor;
    return *r;
  }
  if (const auto* route = std::get_if<Route>(&uv)) return Route{route->backward, route->forward};
  return uv;
}

FValue identity(const simnet::TreeNetwork& net, FunctionKind kind, NodeId u) {
  switch (kind) {
    case FunctionKind::Ancestry: return Relation::Equal;
    case FunctionKind::Distance: return Distance{0};
    case FunctionKind::SeparationLevel: return SepLevel{net.depth(u)};
    case FunctionKind::Routing: return Route{};
  }
  throw std::logic_error("unreachable");
}

FValue parent_to_child(const simnet::TreeNetwork& net, FunctionKind kind, NodeId z, NodeId w) {
  switch (kind) {
    case FunctionKind::Ancestry: return Relation::Ancestor;
    case FunctionKind::Distance: return Distance{1};
    case FunctionKind::SeparationLevel: return SepLevel{net.depth(z)};
    case FunctionKind::Routing: return Route{net.port_to(z, w), net.parent_port(w)};
  }
  throw std::logic_error("unreachable");
}

namespace {

void encode_port(const std::optional<PortNumber>& p, BitWriter& out) {
  out.bit(p.has_value());
  if (p) out.gamma(p->value + 1);
}

std::optional<PortNumber> decode_port(BitReader& in) {
  if (!in.bit()) return std::nullopt;
  return PortNumber{in.gamma() - 1};
}

}  // namespace

void encode(const FValue& value, BitWriter& out) {
  switch (kind_of(value)) {
    case FunctionKind::Ancestry: out.fixed(static_cast<std::uint64_t>(std::get<Relation>(value)), 2); return;
    case FunctionKind::Distance: out.gamma(std::get<Distance>(value).hops + 1); return;
    case FunctionKind::SeparationLevel: out.gamma(std::get<SepLevel>(value).depth + 1); return;
    case FunctionKind::Routing: {
      const Route& r = std::get<Route>(value);
      encode_port(r.forward, out);
      encode_port(r.backward, out);
      return;
    }
  }
}

FValue decode(FunctionKind kind, BitReader& in) {
  switch (kind) {
    case FunctionKind::Ancestry: return static_cast<Relation>(in.fixed(2));
    case FunctionKind::Distance: return Distance{in.gamma() - 1};
    case FunctionKind::SeparationLevel: return SepLevel{in.gamma() - 1};
    case FunctionKind::Routing: {
      Route r;
      r.forward = decode_port(in);
      r.backward = decode_port(in);
      if (r.forward.has_value() != r.backward.has_value()) throw DecodeError("half-empty route value");
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

BitString encode(const FValue& value) {
  BitWriter w;
  encode(value, w);
  return std::move(w).take();
}

FValue decode(FunctionKind kind, const BitString& bits) {
  BitReader r(bits);
  FValue v = decode(kind, r);
  r.expect_end();
  return v;
}

}  // namespace dynlabel::functions
