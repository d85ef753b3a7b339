#include "dynlabel/static_schemes/distance_labels.hpp"

#include <algorithm>
#include <limits>

namespace dynlabel::static_schemes {

BitString encode_distance_label(const DistanceLabel& label) {
  BitWriter w;
  w.gamma(label.depth + 1);
  w.gamma(label.levels.size() + 1);
  for (const SeparatorEntry& e : label.levels) {
    w.gamma(e.separator + 1);
    w.gamma(e.distance + 1);
  }
  return std::move(w).take();
}

DistanceLabel decode_distance_label(const BitString& bits) {
  BitReader r(bits);
  DistanceLabel label;
  label.depth = r.gamma() - 1;
  const std::uint64_t count = r.gamma() - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    SeparatorEntry e;
    e.separator = r.gamma() - 1;
    e.distance = r.gamma() - 1;
    label.levels.push_back(e);
  }
  r.expect_end();
  return label;
}

std::vector<DistanceLabel> centroid_labels(const simnet::Subtree& st, const std::vector<std::uint64_t>& depth) {
  const std::size_t m = st.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 1; i < m; ++i) {
    const auto p = static_cast<std::size_t>(st.parent[i]);
    adj[i].push_back(p);
    adj[p].push_back(i);
  }
  std::vector<DistanceLabel> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i].depth = depth[i];

  std::vector<bool> removed(m, false);
  std::vector<std::size_t> size(m, 0);
  std::vector<std::size_t> parent(m, 0);
  std::vector<std::uint64_t> dist(m, 0);
  std::vector<std::size_t> pending{0};
  std::vector<std::size_t> order;
  while (!pending.empty()) {
    const std::size_t start = pending.back();
    pending.pop_back();

    // Component of `start`, in BFS order.
    order.assign(1, start);
    parent[start] = start;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (std::size_t y : adj[order[h]]) {
        if (!removed[y] && y != parent[order[h]]) {
          parent[y] = order[h];
          order.push_back(y);
        }
      }
    }
    for (std::size_t h = order.size(); h-- > 0;) {
      size[order[h]] = 1;
      for (std::size_t y : adj[order[h]]) {
        if (!removed[y] && y != parent[order[h]]) size[order[h]] += size[y];
      }
    }
    const std::size_t total = order.size();
    std::size_t best = start;
    std::size_t best_weight = std::numeric_limits<std::size_t>::max();
    for (std::size_t x : order) {
      std::size_t heaviest = total - size[x];
      for (std::size_t y : adj[x]) {
        if (!removed[y] && y != parent[x]) heaviest = std::max(heaviest, size[y]);
      }
      if (heaviest < best_weight || (heaviest == best_weight && st.nodes[x] < st.nodes[best])) {
        best = x;
        best_weight = heaviest;
      }
    }

    // Distances from the centroid within the component.
    order.assign(1, best);
    parent[best] = best;
    dist[best] = 0;
    for (std::size_t h = 0; h < order.size(); ++h) {
      const std::size_t x = order[h];
      labels[x].levels.push_back(SeparatorEntry{best, dist[x]});
      for (std::size_t y : adj[x]) {
        if (!removed[y] && y != parent[x]) {
          parent[y] = x;
          dist[y] = dist[x] + 1;
          order.push_back(y);
        }
      }
    }
    removed[best] = true;
    for (std::size_t y : adj[best]) {
      if (!removed[y]) pending.push_back(y);
    }
  }
  return labels;
}

std::uint64_t label_distance(const DistanceLabel& u, const DistanceLabel& v) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const std::size_t common = std::min(u.levels.size(), v.levels.size());
  for (std::size_t i = 0; i < common && u.levels[i].separator == v.levels[i].separator; ++i) {
    best = std::min(best, u.levels[i].distance + v.levels[i].distance);
  }
  if (best == std::numeric_limits<std::uint64_t>::max()) {
    throw DecodeError("distance labels share no separator");
  }
  return best;
}

DistanceScheme::DistanceScheme(functions::FunctionKind kind) : kind_(kind) {
  if (kind != functions::FunctionKind::Distance && kind != functions::FunctionKind::SeparationLevel) {
    throw ConfigError("distance scheme answers distance or seplevel only");
  }
}

std::string_view DistanceScheme::name() const {
  return kind_ == functions::FunctionKind::Distance ? "centroid-distance" : "centroid-seplevel";
}

std::vector<BitString> DistanceScheme::mark(simnet::TreeNetwork& net, const simnet::Subtree& st) const {
  // Start, collect the shape at the root, push the labels back down.
  simnet::charge_broadcast(net, st);
  simnet::charge_convergecast(net, st);
  simnet::charge_broadcast(net, st);
  std::vector<std::uint64_t> depth(st.size());
  for (std::size_t i = 0; i < st.size(); ++i) depth[i] = net.depth(st.nodes[i]);
  std::vector<BitString> out;
  out.reserve(st.size());
  for (const DistanceLabel& l : centroid_labels(st, depth)) out.push_back(encode_distance_label(l));
  return out;
}

functions::FValue DistanceScheme::decode(const BitString& lu, const BitString& lv) const {
  const DistanceLabel u = decode_distance_label(lu);
  const DistanceLabel v = decode_distance_label(lv);
  const std::uint64_t d = label_distance(u, v);
  if (kind_ == functions::FunctionKind::Distance) return functions::Distance{d};
  const std::uint64_t twice = u.depth + v.depth - d;
  if (twice % 2 != 0 || u.depth + v.depth < d) throw DecodeError("inconsistent distance labels");
  return functions::SepLevel{twice / 2};
}

std::uint64_t DistanceScheme::ls_budget(const LabelContext& ctx) const {
  const std::uint64_t m = std::max<std::uint64_t>(ctx.nodes, 1);
  const std::uint64_t levels = binary_length(m);
  return gamma_length(ctx.max_depth + 1) + gamma_length(levels + 1) + levels * 2 * gamma_length(m);
}

}  // namespace dynlabel::static_schemes
