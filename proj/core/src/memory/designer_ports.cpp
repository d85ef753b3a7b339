#include "dynlabel/memory/designer_ports.hpp"

#include <algorithm>
#include <string>

#include "dynlabel/fsdl/decomposition.hpp"

namespace dynlabel::memory {

void DesignerPorts::init_fields(fsdl::SchemeState& state, std::uint32_t levels) const {
  state.watermark.assign(levels - 1, 0);
  state.counter.clear();
  state.table.clear();
  state.pointers.clear();
}

void DesignerPorts::on_leaf_joined(Context& ctx, NodeId parent, NodeId leaf) {
  init_fields(ctx.store.write(leaf), ctx.levels);
  if (ctx.net.parent_port(leaf) != PortNumber{1}) {
    ctx.net.renumber_ports(leaf, [](PortNumber) { return PortNumber{1}; });
  }
  const PortNumber fresh = ctx.net.port_at_parent(leaf);
  ctx.net.renumber_ports(parent, [fresh](PortNumber p) { return p == fresh ? PortNumber{1} : PortNumber{p.value + 1}; });
  fsdl::SchemeState& ps = ctx.store.write(parent);
  for (auto& a : ps.watermark) ++a;
}

void DesignerPorts::on_leaf_removed(Context& ctx, NodeId parent, PortNumber port, const fsdl::SchemeState&) {
  ctx.net.renumber_ports(parent, [port](PortNumber p) { return p > port ? PortNumber{p.value - 1} : p; });
  fsdl::SchemeState& ps = ctx.store.write(parent);
  for (auto& a : ps.watermark) {
    if (a >= port.value) --a;
  }
}

void DesignerPorts::on_level_reset(Context& ctx, NodeId v, std::uint32_t level, std::span<const NodeId>,
                                   bool whole_tree) {
  fsdl::SchemeState& s = ctx.store.write(v);
  if (whole_tree) {
    const std::vector<PortNumber> kids = ctx.net.child_ports(v);
    const bool has_parent = ctx.net.parent(v).valid();
    const PortNumber up = has_parent ? ctx.net.parent_port(v) : PortNumber{};
    const std::uint64_t degree = kids.size() + (has_parent ? 1 : 0);
    ctx.net.renumber_ports(v, [&](PortNumber p) {
      if (has_parent && p == up) return PortNumber{degree};
      const auto rank = std::lower_bound(kids.begin(), kids.end(), p) - kids.begin();
      return PortNumber{static_cast<std::uint64_t>(rank) + 1};
    });
    std::fill(s.watermark.begin(), s.watermark.end(), 0);
    return;
  }
  for (std::uint32_t l = 1; l < level && l <= s.watermark.size(); ++l) s.watermark[l - 1] = 0;
}

std::vector<PortNumber> DesignerPorts::level_child_ports(Context& ctx, NodeId v, std::uint32_t l) {
  const fsdl::SchemeState& s = ctx.store.at(v);
  std::vector<PortNumber> out;
  for (std::uint64_t p = 1; p <= s.watermark.at(l - 1); ++p) out.emplace_back(p);
  return out;
}

std::uint64_t DesignerPorts::field_bits(const fsdl::SchemeState& state) const {
  std::uint64_t bits = 0;
  for (std::uint64_t a : state.watermark) bits += gamma_length(a + 1);
  return bits;
}

void DesignerPorts::check(const simnet::TreeNetwork& net, const fsdl::StateStore& store, NodeId v) const {
  const fsdl::SchemeState& s = store.at(v);
  const fsdl::DecompositionView view(net, store);
  if (s.watermark.size() + 1 != s.levels()) {
    throw InvariantViolation("designer: node " + to_string(v) + " has the wrong number of watermarks");
  }
  for (std::uint32_t l = 1; l < s.levels(); ++l) {
    const std::vector<PortNumber> truth = view.level_child_ports(v, l);
    bool ok = truth.size() == s.watermark[l - 1];
    for (std::size_t i = 0; ok && i < truth.size(); ++i) ok = truth[i] == PortNumber{i + 1};
    if (!ok) {
      throw InvariantViolation("designer: E_" + std::to_string(l) + "(" + to_string(v) + ") is not 1..a_l");
    }
  }
}

}  // namespace dynlabel::memory
