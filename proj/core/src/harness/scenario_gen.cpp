#include "dynlabel/harness/scenario_gen.hpp"

#include <random>

#include "dynlabel/types.hpp"

namespace dynlabel::harness {

namespace {

/// Swap-remove set with uniform sampling.
class IndexedSet {
 public:
  void insert(std::uint32_t v) {
    if (v >= where_.size()) where_.resize(v + 1, kAbsent);
    where_[v] = items_.size();
    items_.push_back(v);
  }
  void erase(std::uint32_t v) {
    const std::size_t i = where_[v];
    items_[i] = items_.back();
    where_[items_[i]] = i;
    items_.pop_back();
    where_[v] = kAbsent;
  }
  bool contains(std::uint32_t v) const { return v < where_.size() && where_[v] != kAbsent; }
  std::size_t size() const { return items_.size(); }
  std::uint32_t at(std::size_t i) const { return items_[i]; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::uint32_t> items_;
  std::vector<std::size_t> where_;
};

}  // namespace

std::vector<simnet::ScenarioEvent> generate_scenario(std::uint64_t seed, std::uint64_t events, double p_delete) {
  if (!(p_delete >= 0.0 && p_delete < 1.0)) throw ConfigError("delete probability must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution remove(p_delete);
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> children{0};
  IndexedSet alive;
  IndexedSet leaves;  // non-root leaves
  alive.insert(0);

  std::vector<simnet::ScenarioEvent> out;
  out.reserve(events);
  for (std::uint64_t i = 0; i < events; ++i) {
    if (remove(rng) && leaves.size() > 0) {
      const std::uint32_t leaf = leaves.at(std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng));
      const std::uint32_t p = parent[leaf];
      leaves.erase(leaf);
      alive.erase(leaf);
      if (--children[p] == 0 && p != 0) leaves.insert(p);
      out.emplace_back(simnet::RemoveLeaf{NodeId{leaf}});
      continue;
    }
    const std::uint32_t p = alive.at(std::uniform_int_distribution<std::size_t>(0, alive.size() - 1)(rng));
    const auto leaf = static_cast<std::uint32_t>(parent.size());
    parent.push_back(p);
    children.push_back(0);
    if (children[p]++ == 0 && leaves.contains(p)) leaves.erase(p);
    alive.insert(leaf);
    leaves.insert(leaf);
    out.emplace_back(simnet::AddLeaf{NodeId{p}});
  }
  return out;
}

}  // namespace dynlabel::harness
