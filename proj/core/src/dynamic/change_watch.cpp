#include "dynlabel/dynamic/change_watch.hpp"

#include <string>

namespace dynlabel::dynamic {

void ExactChangeWatch::start(std::uint64_t n0) {
  n0_ = n0;
  additions_ = 0;
  deletions_ = 0;
}

void ExactChangeWatch::on_leaf_added(simnet::TreeNetwork& net, NodeId leaf) {
  const std::uint64_t before = net.messages_sent();
  net.relay_up(leaf, net.root());
  messages_ += net.messages_sent() - before;
  ++additions_;
}

void ExactChangeWatch::on_leaf_removed(simnet::TreeNetwork& net, NodeId parent) {
  const std::uint64_t before = net.messages_sent();
  net.relay_up(parent, net.root());
  messages_ += net.messages_sent() - before;
  ++deletions_;
}

std::unique_ptr<ChangeEstimator> make_change_estimator(std::string_view name) {
  if (name == "exact") return std::make_unique<ExactChangeWatch>();
  throw ConfigError("unknown change estimator: " + std::string(name));
}

}  // namespace dynlabel::dynamic
