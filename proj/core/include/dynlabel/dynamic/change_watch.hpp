#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "dynlabel/simnet/tree_network.hpp"

namespace dynlabel::dynamic {

/// Root-side estimates of the additions and deletions since the watch started.
class ChangeEstimator {
 public:
  virtual ~ChangeEstimator() = default;

  virtual void start(std::uint64_t n0) = 0;
  /// Called after the leaf joined.
  virtual void on_leaf_added(simnet::TreeNetwork& net, NodeId leaf) = 0;
  /// Called after the leaf left; `parent` reports it.
  virtual void on_leaf_removed(simnet::TreeNetwork& net, NodeId parent) = 0;

  virtual std::uint64_t n0() const = 0;
  virtual std::uint64_t estimated_additions() const = 0;
  virtual std::uint64_t estimated_deletions() const = 0;

  /// An estimate exceeds n0 / 9.
  bool crossed() const { return 9 * estimated_additions() > n0() || 9 * estimated_deletions() > n0(); }
};

/// Every event sends one token up to the root, so the estimates are exact.
class ExactChangeWatch final : public ChangeEstimator {
 public:
  void start(std::uint64_t n0) override;
  void on_leaf_added(simnet::TreeNetwork& net, NodeId leaf) override;
  void on_leaf_removed(simnet::TreeNetwork& net, NodeId parent) override;

  std::uint64_t n0() const override { return n0_; }
  std::uint64_t estimated_additions() const override { return additions_; }
  std::uint64_t estimated_deletions() const override { return deletions_; }
  std::uint64_t messages() const { return messages_; }

 private:
  std::uint64_t n0_ = 1;
  std::uint64_t additions_ = 0;
  std::uint64_t deletions_ = 0;
  std::uint64_t messages_ = 0;
};

/// `exact` is the only estimator. Throws ConfigError otherwise.
std::unique_ptr<ChangeEstimator> make_change_estimator(std::string_view name);

}  // namespace dynlabel::dynamic
