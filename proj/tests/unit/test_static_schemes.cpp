#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dynlabel/static_schemes/distance_labels.hpp"
#include "dynlabel/static_schemes/routing_labels.hpp"
#include "dynlabel/static_schemes/statdfs.hpp"
#include "test_support.hpp"

namespace {

using namespace dynlabel;
using namespace dynlabel::static_schemes;
using functions::FunctionKind;
using functions::FValue;
using functions::Relation;

simnet::Subtree whole(const simnet::TreeNetwork& net) {
  return simnet::snapshot_subtree(net, net.root(), simnet::all_children(net));
}

std::vector<IntervalLabel> intervals_of(const std::vector<std::uint32_t>& parents) {
  simnet::TreeNetwork net;
  dltest::grow(net, parents);
  return interval_numbering(whole(net));
}

TEST(StatDfs, FrozenIntervals) {
  EXPECT_EQ(intervals_of({0}), (std::vector<IntervalLabel>{{1, 1}}));
  EXPECT_EQ(intervals_of({0, 0, 1}), (std::vector<IntervalLabel>{{1, 3}, {2, 3}, {3, 3}}));
  EXPECT_EQ(intervals_of({0, 0, 0, 0}), (std::vector<IntervalLabel>{{1, 4}, {2, 2}, {3, 3}, {4, 4}}));
}

TEST(StatDfs, FrozenDecodes) {
  const StatDfs s;
  EXPECT_EQ(s.relate({1, 3}, {2, 3}), Relation::Ancestor);
  EXPECT_EQ(s.relate({2, 3}, {1, 3}), Relation::Descendant);
  EXPECT_EQ(s.relate({2, 2}, {3, 3}), Relation::Unrelated);
  EXPECT_EQ(s.relate({2, 2}, {2, 2}), Relation::Equal);
  const BitString l = encode_interval({5, 9});
  EXPECT_EQ(decode_interval(l), (IntervalLabel{5, 9}));
  EXPECT_EQ(s.decode(l, l), FValue{Relation::Equal});
}

TEST(StatDfs, FlippedDecoderIsWrong) {
  const StatDfs bad(true);
  EXPECT_EQ(bad.relate({1, 3}, {2, 3}), Relation::Descendant);
}

/// Marker on random trees: unique labels, exact decoding, messages and label budgets.
void sweep(const StaticScheme& scheme, simnet::PortModel model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (dltest::Shape shape : {dltest::Shape::Random, dltest::Shape::Path, dltest::Shape::Star,
                              dltest::Shape::Caterpillar, dltest::Shape::Binary}) {
    for (std::uint32_t n : {1u, 2u, 5u, 8u, 33u, 64u}) {
      simnet::TreeNetwork net(model, model == simnet::PortModel::Designer
                                         ? simnet::smallest_free_ports()
                                         : simnet::random_adversary_ports(rng(), 1u << 16));
      dltest::grow(net, dltest::random_parents(rng, n, shape));
      const simnet::Subtree st = whole(net);
      const auto before = net.messages_sent();
      const std::vector<BitString> labels = scheme.mark(net, st);
      EXPECT_LE(net.messages_sent() - before, scheme.mc_budget(n)) << scheme.name();
      ASSERT_EQ(labels.size(), n);
      EXPECT_EQ(std::set<BitString>(labels.begin(), labels.end()).size(), n) << "labels not unique";

      std::uint64_t depth = 0;
      std::uint64_t port = 0;
      for (NodeId v : st.nodes) {
        depth = std::max<std::uint64_t>(depth, net.depth(v));
        for (PortNumber q : net.ports(v)) port = std::max(port, q.value);
      }
      const std::uint64_t budget = scheme.ls_budget(LabelContext{n, depth, port});
      for (const BitString& l : labels) EXPECT_LE(l.size(), budget) << scheme.name() << " n=" << n;

      const dltest::Reference ref(net);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const NodeId u = st.nodes[i];
          const NodeId v = st.nodes[j];
          const FValue got = scheme.decode(labels[i], labels[j]);
          switch (scheme.function()) {
            case FunctionKind::Ancestry: {
              Relation want = u == v                  ? Relation::Equal
                              : ref.is_ancestor(u, v) ? Relation::Ancestor
                              : ref.is_ancestor(v, u) ? Relation::Descendant
                                                      : Relation::Unrelated;
              EXPECT_EQ(got, FValue{want});
              break;
            }
            case FunctionKind::Distance:
              EXPECT_EQ(got, FValue{functions::Distance{ref.distance(u, v)}});
              break;
            case FunctionKind::SeparationLevel:
              EXPECT_EQ(got, FValue{functions::SepLevel{ref.nca_depth(u, v)}});
              break;
            case FunctionKind::Routing: {
              const auto& r = std::get<functions::Route>(got);
              if (u == v) {
                EXPECT_TRUE(r.is_self());
              } else {
                EXPECT_EQ(r.forward, ref.first_port(u, v));
                EXPECT_EQ(r.backward, ref.first_port(v, u));
              }
              break;
            }
          }
        }
      }
    }
  }
}

TEST(StaticSchemes, AncestrySweep) { sweep(StatDfs(), simnet::PortModel::Designer, 1); }
TEST(StaticSchemes, DistanceSweep) { sweep(DistanceScheme(FunctionKind::Distance), simnet::PortModel::Designer, 2); }
TEST(StaticSchemes, SepLevelSweep) {
  sweep(DistanceScheme(FunctionKind::SeparationLevel), simnet::PortModel::Adversary, 3);
}
TEST(StaticSchemes, RoutingSweepDesigner) { sweep(RoutingScheme(), simnet::PortModel::Designer, 4); }
TEST(StaticSchemes, RoutingSweepAdversary) { sweep(RoutingScheme(), simnet::PortModel::Adversary, 5); }

TEST(Distance, PathEndpoints) {
  simnet::TreeNetwork net;
  dltest::grow(net, {0, 0, 1, 2, 3});
  const DistanceScheme s(FunctionKind::Distance);
  const auto labels = s.mark(net, whole(net));
  EXPECT_EQ(s.decode(labels.front(), labels.back()), FValue{functions::Distance{4}});
  EXPECT_EQ(s.decode(labels[2], labels[2]), FValue{functions::Distance{0}});
}

TEST(Distance, LabelRoundTrip) {
  const DistanceLabel l{7, {{0, 3}, {4, 1}, {9, 0}}};
  EXPECT_EQ(decode_distance_label(encode_distance_label(l)), l);
}

TEST(Routing, RootAndLeafHops) {
  std::mt19937_64 rng(8);
  simnet::TreeNetwork net(simnet::PortModel::Adversary, simnet::random_adversary_ports(8, 100));
  dltest::grow(net, dltest::random_parents(rng, 8));
  const RoutingScheme s;
  const simnet::Subtree st = whole(net);
  const auto labels = RoutingScheme::compute(net, st);
  const dltest::Reference ref(net);
  for (std::size_t i = 1; i < st.size(); ++i) {
    EXPECT_EQ(route_first_hop(labels[0], labels[i]), ref.first_port(net.root(), st.nodes[i]));
    EXPECT_EQ(route_first_hop(labels[i], labels[0]), net.parent_port(st.nodes[i]));
  }
  for (const RoutingLabel& l : labels) EXPECT_EQ(decode_routing_label(encode_routing_label(l)), l);
}

TEST(Factory, SchemesByFunction) {
  for (FunctionKind kind : {FunctionKind::Ancestry, FunctionKind::Distance, FunctionKind::SeparationLevel,
                            FunctionKind::Routing}) {
    EXPECT_EQ(make_static_scheme(kind)->function(), kind);
  }
}

TEST(Factory, SingletonLabelDecodesToIdentity) {
  simnet::TreeNetwork net;
  net.add_leaf(net.root());
  for (FunctionKind kind : {FunctionKind::Ancestry, FunctionKind::Distance, FunctionKind::SeparationLevel,
                            FunctionKind::Routing}) {
    const auto s = make_static_scheme(kind);
    const BitString l = s->singleton_label(net, NodeId{1});
    EXPECT_EQ(s->decode(l, l), functions::identity(net, kind, NodeId{1}));
  }
}

TEST(LabelPair, GenericFallbackRoundTrips) {
  simnet::TreeNetwork net;
  dltest::grow(net, {0, 0, 1, 1});
  const DistanceScheme s(FunctionKind::Distance);
  const auto labels = s.mark(net, whole(net));
  const BitString pair = encode_label_pair(labels[1], labels[3]);
  EXPECT_EQ(decode_label_pair(s, pair), s.decode(labels[1], labels[3]));
}

}  // namespace
