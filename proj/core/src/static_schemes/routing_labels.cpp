#include "dynlabel/static_schemes/routing_labels.hpp"

#include <algorithm>

namespace dynlabel::static_schemes {

namespace {

void put_port(BitWriter& w, const std::optional<PortNumber>& p) {
  w.bit(p.has_value());
  if (p) w.gamma(p->value + 1);
}

std::optional<PortNumber> get_port(BitReader& r) {
  if (!r.bit()) return std::nullopt;
  return PortNumber{r.gamma() - 1};
}

}  // namespace

BitString encode_routing_label(const RoutingLabel& label) {
  BitWriter w;
  w.gamma(label.a);
  w.gamma(label.b - label.a + 1);
  put_port(w, label.parent_port);
  put_port(w, label.heavy_port);
  if (label.heavy_port) w.gamma(label.heavy_size);
  w.gamma(label.light.size() + 1);
  for (const LightHop& h : label.light) {
    w.gamma(h.ancestor);
    w.gamma(h.port.value + 1);
  }
  return std::move(w).take();
}

RoutingLabel decode_routing_label(const BitString& bits) {
  BitReader r(bits);
  RoutingLabel label;
  label.a = r.gamma();
  label.b = label.a + r.gamma() - 1;
  label.parent_port = get_port(r);
  label.heavy_port = get_port(r);
  if (label.heavy_port) label.heavy_size = r.gamma();
  const std::uint64_t count = r.gamma() - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    LightHop h;
    h.ancestor = r.gamma();
    h.port = PortNumber{r.gamma() - 1};
    label.light.push_back(h);
  }
  r.expect_end();
  return label;
}

std::optional<PortNumber> route_first_hop(const RoutingLabel& from, const RoutingLabel& to) {
  if (from.a == to.a) return std::nullopt;
  if (to.a < from.a || to.a > from.b) {
    if (!from.parent_port) throw DecodeError("routing target lies outside the invocation");
    return from.parent_port;
  }
  if (from.heavy_port && to.a <= from.a + from.heavy_size) return from.heavy_port;
  for (const LightHop& h : to.light) {
    if (h.ancestor == from.a) return h.port;
  }
  throw DecodeError("routing labels are inconsistent");
}

std::vector<RoutingLabel> RoutingScheme::compute(const simnet::TreeNetwork& net, const simnet::Subtree& st) {
  const std::size_t m = st.size();
  std::vector<std::uint64_t> size(m, 1);
  for (std::size_t i = m; i-- > 1;) size[static_cast<std::size_t>(st.parent[i])] += size[i];
  std::vector<int> heavy(m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    for (int c : st.children[i]) {
      if (heavy[i] < 0 || size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(heavy[i])]) heavy[i] = c;
    }
  }

  std::vector<RoutingLabel> labels(m);
  std::uint64_t counter = 0;
  // Heavy child first, then the rest in port order.
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    RoutingLabel& l = labels[i];
    l.a = ++counter;
    l.b = l.a + size[i] - 1;
    const NodeId v = st.nodes[i];
    if (i != 0) {
      l.parent_port = net.parent_port(v);
      const auto p = static_cast<std::size_t>(st.parent[i]);
      l.light = labels[p].light;
      if (heavy[p] != static_cast<int>(i)) l.light.push_back(LightHop{labels[p].a, net.port_at_parent(v)});
    }
    if (heavy[i] >= 0) {
      const auto h = static_cast<std::size_t>(heavy[i]);
      l.heavy_port = net.port_at_parent(st.nodes[h]);
      l.heavy_size = size[h];
    }
    const auto& kids = st.children[i];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it != heavy[i]) stack.push_back(static_cast<std::size_t>(*it));
    }
    if (heavy[i] >= 0) stack.push_back(static_cast<std::size_t>(heavy[i]));
  }
  return labels;
}

std::vector<BitString> RoutingScheme::mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const {
  simnet::charge_broadcast(net, st);
  simnet::charge_convergecast(net, st);
  simnet::charge_broadcast(net, st);
  std::vector<BitString> out;
  out.reserve(st.size());
  for (const RoutingLabel& l : compute(net, st)) out.push_back(encode_routing_label(l));
  return out;
}

functions::FValue RoutingScheme::decode(const BitString& lu, const BitString& lv) const {
  const RoutingLabel u = decode_routing_label(lu);
  const RoutingLabel v = decode_routing_label(lv);
  return functions::Route{route_first_hop(u, v), route_first_hop(v, u)};
}

std::uint64_t RoutingScheme::ls_budget(const LabelContext& ctx) const {
  const std::uint64_t m = std::max<std::uint64_t>(ctx.nodes, 1);
  const std::uint64_t port_bits = 1 + gamma_length(ctx.max_port + 1);
  const std::uint64_t light = binary_length(m);
  return 2 * gamma_length(m) + 2 * port_bits + gamma_length(m) + gamma_length(light + 1) +
         light * (gamma_length(m) + gamma_length(ctx.max_port + 1));
}

}  // namespace dynlabel::static_schemes
