#include "dynlabel/static_schemes/statdfs.hpp"

namespace dynlabel::static_schemes {

BitString encode_interval(const IntervalLabel& label) {
  BitWriter w;
  w.gamma(label.a);
  w.gamma(label.b - label.a + 1);
  return std::move(w).take();
}

IntervalLabel decode_interval(const BitString& bits) {
  BitReader r(bits);
  IntervalLabel label;
  label.a = r.gamma();
  label.b = label.a + r.gamma() - 1;
  r.expect_end();
  return label;
}

std::vector<IntervalLabel> interval_numbering(const simnet::Subtree& st) {
  std::vector<IntervalLabel> out(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) out[i].a = i + 1;
  for (std::size_t i = st.size(); i-- > 0;) {
    out[i].b = out[i].a;
    for (int c : st.children[i]) out[i].b = std::max(out[i].b, out[static_cast<std::size_t>(c)].b);
  }
  return out;
}

std::vector<BitString> StatDfs::mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const {
  // The DFS token crosses every edge down and back up, in visit order.
  std::vector<std::size_t> next_child(st.size(), 0);
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    if (next_child[i] < st.children[i].size()) {
      const auto c = static_cast<std::size_t>(st.children[i][next_child[i]++]);
      net.send(st.nodes[i], net.port_to(st.nodes[i], st.nodes[c]));
      stack.push_back(c);
    } else {
      stack.pop_back();
      if (i != 0) net.send(st.nodes[i], net.parent_port(st.nodes[i]));
    }
  }
  std::vector<BitString> labels;
  labels.reserve(st.size());
  for (const IntervalLabel& l : interval_numbering(st)) labels.push_back(encode_interval(l));
  return labels;
}

functions::Relation StatDfs::relate(const IntervalLabel& u, const IntervalLabel& v) const {
  using functions::Relation;
  if (u == v) return Relation::Equal;
  if (flip_) {
    if (v.contains(u)) return Relation::Ancestor;
    if (u.contains(v)) return Relation::Descendant;
    return Relation::Unrelated;
  }
  if (u.contains(v)) return Relation::Ancestor;
  if (v.contains(u)) return Relation::Descendant;
  return Relation::Unrelated;
}

functions::FValue StatDfs::decode(const BitString& lu, const BitString& lv) const {
  return relate(decode_interval(lu), decode_interval(lv));
}

std::uint64_t StatDfs::ls_budget(const LabelContext& ctx) const {
  return 2 * gamma_length(std::max<std::uint64_t>(ctx.nodes, 1));
}

}  // namespace dynlabel::static_schemes
