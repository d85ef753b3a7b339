#include "dynlabel/fsdl/dynamic_label.hpp"

#include <algorithm>
#include <utility>

namespace dynlabel::fsdl {

SchemeState& StateStore::at(NodeId v) {
  if (v.index() >= states_.size()) throw TopologyError("no scheme state for node " + to_string(v));
  return states_[v.index()];
}

const SchemeState& StateStore::at(NodeId v) const {
  if (v.index() >= states_.size()) throw TopologyError("no scheme state for node " + to_string(v));
  return states_[v.index()];
}

void StateStore::ensure(NodeId v) {
  if (v.index() >= states_.size()) {
    states_.resize(v.index() + 1);
    dirty_flag_.resize(v.index() + 1, 0);
  }
}

SchemeState& StateStore::write(NodeId v) {
  SchemeState& s = at(v);
  if (!dirty_flag_[v.index()]) {
    dirty_flag_[v.index()] = 1;
    dirty_.push_back(v);
  }
  return s;
}

std::vector<NodeId> StateStore::take_dirty() {
  for (NodeId v : dirty_) dirty_flag_[v.index()] = 0;
  return std::exchange(dirty_, {});
}

BitString encode_label(const LabelState& state) {
  BitWriter w;
  const std::size_t levels = std::max<std::size_t>(state.layers.size(), 1);
  w.gamma(levels);
  for (std::size_t l = levels; l >= 2; --l) {
    const auto& layer = state.layers[l - 1];
    w.bit(layer.has_value());
    if (layer) {
      w.delimited(layer->anchor);
      w.delimited(functions::encode(layer->anchor_to_node));
    }
  }
  w.delimited(state.base);
  return std::move(w).take();
}

ParsedLabel parse_label(const BitString& bits) {
  ParsedLabel out;
  BitReader r(bits);
  const std::uint64_t levels = r.gamma();
  if (levels > 64) throw DecodeError("label nesting too deep");
  for (std::uint64_t l = levels; l >= 2; --l) {
    ParsedLabel::Layer layer;
    layer.active = r.bit();
    if (layer.active) {
      layer.anchor = r.delimited();
      layer.f_value = r.delimited();
    }
    out.layers.push_back(std::move(layer));
  }
  out.base = r.delimited();
  r.expect_end();
  return out;
}

functions::FValue decode_labels(const static_schemes::StaticScheme& scheme, const BitString& x,
                                const BitString& y) {
  const ParsedLabel lx = parse_label(x);
  const ParsedLabel ly = parse_label(y);
  if (lx.layers.size() != ly.layers.size()) throw DecodeError("labels from different phases");
  const functions::FunctionKind kind = scheme.function();
  for (std::size_t i = 0; i < lx.layers.size(); ++i) {
    const auto& a = lx.layers[i];
    const auto& b = ly.layers[i];
    if (a.active != b.active) throw DecodeError("labels disagree on which levels are counting");
    if (!a.active || a.anchor == b.anchor) continue;
    const functions::FValue x_to_u = functions::reverse(functions::decode(kind, a.f_value));
    const functions::FValue u_to_v = scheme.decode(a.anchor, b.anchor);
    const functions::FValue v_to_y = functions::decode(kind, b.f_value);
    return functions::compose(functions::compose(x_to_u, u_to_v), v_to_y);
  }
  return scheme.decode(lx.base, ly.base);
}

}  // namespace dynlabel::fsdl
