#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dynlabel/dynamic/backups.hpp"
#include "dynlabel/dynamic/change_watch.hpp"
#include "dynlabel/dynamic/kfunction.hpp"
#include "dynlabel/dynamic/schemes.hpp"
#include "dynlabel/harness/invariants.hpp"
#include "dynlabel/static_schemes/static_scheme.hpp"
#include "test_support.hpp"

namespace {

using namespace dynlabel;
using dynamic::KFunction;
using dynamic::SchemeKind;
using functions::FunctionKind;

/// The largest p' with k^p' <= 2n', by repeated multiplication in 128 bits.
std::uint32_t reference_p_prime(std::uint64_t n_prime, std::uint64_t k) {
  const unsigned __int128 target = static_cast<unsigned __int128>(n_prime) * 2;
  unsigned __int128 power = 1;
  std::uint32_t e = 0;
  while (power * k <= target) {
    power *= k;
    ++e;
  }
  return e;
}

TEST(KFunction, ParseAndClamp) {
  EXPECT_EQ(KFunction::parse("pow:0.5")(100), 10u);
  EXPECT_EQ(KFunction::parse("pow:0.5")(1), 2u);
  EXPECT_EQ(KFunction::parse("pow:0.5")(99), 9u);
  EXPECT_EQ(KFunction::parse("logpow:0.5")(1024), 3u);
  EXPECT_THROW(KFunction::parse("logpow:1"), ConfigError);
  EXPECT_EQ(KFunction::parse("logpow:0.5")(2), 2u);
  EXPECT_EQ(KFunction::parse("const:7")(123456), 7u);
  EXPECT_EQ(KFunction::parse("const:7").to_string(), "const:7");
  EXPECT_THROW(KFunction::parse("const:1"), ConfigError);
  EXPECT_THROW(KFunction::parse("pow:"), ConfigError);
  EXPECT_THROW(KFunction::parse("cubic:2"), ConfigError);
}

TEST(PhaseParams, FrozenCases) {
  const auto a = dynamic::compute_phase_params(10, KFunction::constant(3));
  EXPECT_EQ(a.k, 3u);
  EXPECT_EQ(a.p, 4u);
  const auto b = dynamic::compute_phase_params(1, KFunction::constant(2));
  EXPECT_EQ(b.p, 3u);
  const auto c = dynamic::compute_phase_params(8, KFunction::constant(2));  // 2^4 = 16 = 2n'
  EXPECT_EQ(c.p, 6u);
}

TEST(PhaseParams, MatchesReferenceOnRandomDraws) {
  std::mt19937_64 rng(5);
  const KFunction kinds[] = {KFunction::power_of_n(0.5), KFunction::power_of_n(0.25), KFunction::power_of_log(0.9),
                             KFunction::constant(2), KFunction::constant(5)};
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t n = 1 + (rng() >> (2 + rng() % 62));
    const KFunction& kf = kinds[i % 5];
    const auto params = dynamic::compute_phase_params(n, kf);
    ASSERT_EQ(params.k, kf(n));
    ASSERT_EQ(params.p, reference_p_prime(n, params.k) + 2) << "n'=" << n << " " << kf.to_string();
  }
}

TEST(PhaseParams, SaturatingPow) {
  EXPECT_EQ(dynamic::saturating_pow(3, 4), 81u);
  EXPECT_EQ(dynamic::saturating_pow(7, 0), 1u);
  EXPECT_EQ(dynamic::saturating_pow(2, 64), UINT64_MAX);
  EXPECT_EQ(dynamic::saturating_pow(1u << 20, 4), UINT64_MAX);
}

TEST(ChangeWatch, CrossesAtEleventhAdditionOfNinety) {
  simnet::TreeNetwork net;
  dynamic::ExactChangeWatch watch;
  watch.start(90);
  for (int i = 1; i <= 11; ++i) {
    const NodeId leaf = net.add_leaf(net.root());
    watch.on_leaf_added(net, leaf);
    EXPECT_EQ(watch.crossed(), i == 11) << i;
  }
  EXPECT_EQ(watch.messages(), 11u);  // one hop per star leaf
  watch.start(90);
  EXPECT_FALSE(watch.crossed());
}

TEST(ChangeWatch, DeletionTokensStartAtTheParent) {
  simnet::TreeNetwork net;
  const NodeId a = net.add_leaf(net.root());
  const NodeId b = net.add_leaf(a);
  const NodeId c = net.add_leaf(b);
  dynamic::ExactChangeWatch watch;
  watch.start(9);
  net.remove_leaf(c);
  watch.on_leaf_removed(net, b);
  EXPECT_EQ(watch.messages(), 2u);
  EXPECT_EQ(watch.estimated_deletions(), 1u);
  EXPECT_FALSE(watch.crossed());
  net.remove_leaf(b);
  watch.on_leaf_removed(net, a);
  EXPECT_TRUE(watch.crossed());
  EXPECT_THROW(dynamic::make_change_estimator("sketch"), ConfigError);
}

struct SchemeRig {
  SchemeRig(SchemeKind kind, simnet::PortModel model, FunctionKind fn = FunctionKind::Distance,
            KFunction kfn = KFunction::power_of_n(0.5), std::uint64_t seed = 3)
      : net(model, model == simnet::PortModel::Designer ? simnet::smallest_free_ports()
                                                        : simnet::random_adversary_ports(seed, 1u << 16)),
        scheme(static_schemes::make_static_scheme(fn)),
        dl(net, *scheme,
           model == simnet::PortModel::Designer && fn != FunctionKind::Routing ? memory::BookkeepingKind::Designer
                                                                               : memory::BookkeepingKind::AdversaryTables,
           kind, kfn) {}

  NodeId add(NodeId parent) {
    const NodeId leaf = net.add_leaf(parent);
    dl.finish_event();
    return leaf;
  }
  void remove(NodeId leaf) {
    net.remove_leaf(leaf);
    dl.finish_event();
  }
  std::vector<std::string> violations() const {
    std::vector<std::string> out;
    harness::scan_invariants(dl.engine(), out);
    return out;
  }

  simnet::TreeNetwork net;
  std::unique_ptr<static_schemes::StaticScheme> scheme;
  dynamic::DynamicScheme dl;
};

TEST(EverCount, SurvivesDeletion) {
  SchemeRig rig(SchemeKind::SemDl, simnet::PortModel::Designer);
  rig.dl.start();
  const std::uint32_t top = rig.dl.engine().levels();
  const NodeId root = rig.net.root();
  const std::uint64_t base = rig.dl.engine().ever_count(root, top);
  const NodeId a = rig.add(root);
  EXPECT_EQ(rig.dl.engine().ever_count(root, rig.dl.engine().levels()), base + 1);
  rig.remove(a);
  if (rig.dl.phases().size() == 1) EXPECT_EQ(rig.dl.engine().ever_count(root, top), base + 1);
  EXPECT_TRUE(rig.violations().empty());
}

TEST(Backups, OnlyChildIsCopiedAtParent) {
  SchemeRig rig(SchemeKind::SemDl, simnet::PortModel::Designer);
  rig.dl.start();
  const NodeId a = rig.add(rig.net.root());
  const auto& held = rig.dl.engine().backups()->held_by(rig.net.root());
  ASSERT_TRUE(std::ranges::any_of(held, [&](const dynamic::BackupCopy& c) { return c.subject == a; }));
}

TEST(Backups, MiddleDeletionHandsCopyToNext) {
  SchemeRig rig(SchemeKind::SemDl, simnet::PortModel::Adversary);
  rig.dl.start();
  const NodeId root = rig.net.root();
  rig.add(root);
  const NodeId b = rig.add(root);
  rig.add(root);
  const NodeId next = dynamic::next_sibling(rig.net, b);
  const NodeId pre = dynamic::previous_sibling(rig.net, b);
  rig.remove(b);
  const auto& held = rig.dl.engine().backups()->held_by(next);
  const auto copy = std::ranges::find_if(held, [&](const dynamic::BackupCopy& c) { return c.subject == pre; });
  ASSERT_NE(copy, held.end());
  EXPECT_EQ(copy->memory, rig.dl.engine().store().at(pre));
  EXPECT_TRUE(rig.violations().empty());
}

TEST(Backups, LongSweepKeepsCopyInvariants) {
  for (simnet::PortModel model : {simnet::PortModel::Designer, simnet::PortModel::Adversary}) {
    SchemeRig rig(SchemeKind::Dl, model);
    rig.dl.start();
    std::mt19937_64 rng(11);
    std::vector<NodeId> nodes{rig.net.root()};
    for (int step = 0; step < 2000; ++step) {
      std::vector<NodeId> leaves;
      for (NodeId v : nodes) {
        if (v != rig.net.root() && rig.net.is_leaf(v)) leaves.push_back(v);
      }
      if (!leaves.empty() && rng() % 10 < 3) {
        const NodeId leaf = leaves[rng() % leaves.size()];
        rig.remove(leaf);
        std::erase(nodes, leaf);
      } else {
        nodes.push_back(rig.add(nodes[rng() % nodes.size()]));
      }
      if (step % 50 == 0) {
        std::vector<std::string> v;
        harness::scan_copy_invariants(rig.dl.engine(), v);
        ASSERT_TRUE(v.empty()) << "step " << step << ": " << v.front();
      }
    }
    const auto v = rig.violations();
    EXPECT_TRUE(v.empty()) << v.front();
  }
}

TEST(Schemes, SdlSingletonBeginsWithOneLevel) {
  SchemeRig rig(SchemeKind::Sdl, simnet::PortModel::Designer);
  rig.dl.start();
  ASSERT_EQ(rig.dl.phases().size(), 1u);
  EXPECT_EQ(rig.dl.phases()[0].params.p, 1u);
  EXPECT_EQ(rig.dl.watch(), nullptr);
  for (int i = 0; i < 40; ++i) rig.add(rig.net.root());
  EXPECT_GT(rig.dl.phases().size(), 1u);
  for (std::size_t i = 1; i < rig.dl.phases().size(); ++i) {
    const auto& params = rig.dl.phases()[i].params;
    EXPECT_EQ(params.p, reference_p_prime(params.n_prime, params.k) + 2);
  }
}

TEST(Schemes, SdlRejectsDeletion) {
  SchemeRig rig(SchemeKind::Sdl, simnet::PortModel::Designer);
  rig.dl.start();
  const NodeId a = rig.add(rig.net.root());
  EXPECT_THROW(rig.net.remove_leaf(a), ConfigError);
}

TEST(Schemes, DlRestartsWhenTheWatchFires) {
  SchemeRig rig(SchemeKind::Dl, simnet::PortModel::Designer);
  rig.dl.start();
  ASSERT_NE(rig.dl.watch(), nullptr);
  EXPECT_EQ(rig.dl.watch()->n0(), 1u);
  rig.add(rig.net.root());
  ASSERT_EQ(rig.dl.restarts().size(), 1u);
  EXPECT_EQ(rig.dl.restarts()[0].n0, 1u);
  EXPECT_EQ(rig.dl.restarts()[0].additions, 1u);
  EXPECT_EQ(rig.dl.watch()->n0(), 2u);
  for (int i = 0; i < 200; ++i) rig.add(NodeId{static_cast<std::uint32_t>(i / 3)});
  for (const auto& r : rig.dl.restarts()) EXPECT_GT(9 * std::max(r.additions, r.deletions), r.n0);
  const auto* watch = rig.dl.watch();
  EXPECT_LE(9 * watch->estimated_additions(), watch->n0());
}

TEST(Schemes, LabelsDecodeAfterMixedEvents) {
  for (FunctionKind fn : {FunctionKind::Ancestry, FunctionKind::Distance, FunctionKind::SeparationLevel,
                          FunctionKind::Routing}) {
    SchemeRig rig(SchemeKind::Dl, simnet::PortModel::Adversary, fn, KFunction::constant(2), 9);
    rig.dl.start();
    std::mt19937_64 rng(21);
    std::vector<NodeId> nodes{rig.net.root()};
    for (int step = 0; step < 150; ++step) {
      std::vector<NodeId> leaves;
      for (NodeId v : nodes) {
        if (v != rig.net.root() && rig.net.is_leaf(v)) leaves.push_back(v);
      }
      if (!leaves.empty() && rng() % 4 == 0) {
        const NodeId leaf = leaves[rng() % leaves.size()];
        rig.remove(leaf);
        std::erase(nodes, leaf);
      } else {
        nodes.push_back(rig.add(nodes[rng() % nodes.size()]));
      }
    }
    for (NodeId u : nodes) {
      for (NodeId v : nodes) {
        ASSERT_EQ(rig.dl.decode(rig.dl.label(u).bits, rig.dl.label(v).bits),
                  functions::oracle(rig.net, fn, u, v))
            << functions::name(fn) << " u=" << u.value << " v=" << v.value;
      }
    }
  }
}

}  // namespace
