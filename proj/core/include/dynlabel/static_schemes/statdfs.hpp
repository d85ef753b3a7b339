#pragma once

#include <cstdint>

#include "dynlabel/static_schemes/static_scheme.hpp"

namespace dynlabel::static_schemes {

/// DFS interval [a, b]: a is the visit number, b the largest number in the subtree.
/// a doubles as the unique id within an invocation.
struct IntervalLabel {
  std::uint64_t a = 1;
  std::uint64_t b = 1;

  std::uint64_t uid() const { return a; }
  bool contains(const IntervalLabel& other) const { return a <= other.a && other.b <= b; }
  bool operator==(const IntervalLabel&) const = default;
};

BitString encode_interval(const IntervalLabel& label);
IntervalLabel decode_interval(const BitString& bits);

/// Interval numbering of `st` in preorder; no messages.
std::vector<IntervalLabel> interval_numbering(const simnet::Subtree& st);

class StatDfs final : public StaticScheme {
 public:
  explicit StatDfs(bool flip_interval = false) : flip_(flip_interval) {}

  std::string_view name() const override { return "statdfs"; }
  functions::FunctionKind function() const override { return functions::FunctionKind::Ancestry; }
  std::vector<BitString> mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const override;
  functions::FValue decode(const BitString& lu, const BitString& lv) const override;
  std::uint64_t mc_budget(std::uint64_t m) const override { return m == 0 ? 0 : 2 * (m - 1); }
  std::uint64_t ls_budget(const LabelContext& ctx) const override;

  functions::Relation relate(const IntervalLabel& u, const IntervalLabel& v) const;

 private:
  bool flip_;
};

}  // namespace dynlabel::static_schemes
