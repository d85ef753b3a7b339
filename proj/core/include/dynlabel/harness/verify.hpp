#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dynlabel/fsdl/engine.hpp"
#include "dynlabel/harness/config.hpp"

namespace dynlabel::harness {

struct Mismatch {
  std::uint64_t seed = 0;
  std::uint64_t event = 0;
  NodeId u;
  NodeId v;
  std::string expected;
  std::string decoded;  // or the decoder's error
};

struct VerificationReport {
  std::uint64_t queries_checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // the first few, with repro context
  std::vector<std::string> invariant_violations;
  std::vector<std::string> bound_violations;

  static constexpr std::size_t kept_mismatches = 16;

  bool passed() const {
    return mismatch_count == 0 && invariant_violations.empty() && bound_violations.empty();
  }
  void merge(const VerificationReport& other);
};

/// Decodes the checked pairs from the engine's current labels and compares them with the
/// oracle on the live tree. Exhaustive covers every ordered pair (u == v included).
void verify_step(const fsdl::Engine& engine, const VerifyMode& mode, std::mt19937_64& rng, std::uint64_t seed,
                 std::uint64_t event, VerificationReport& report);

/// Every ordered pair of alive nodes.
void verify_exhaustive(const fsdl::Engine& engine, std::uint64_t seed, std::uint64_t event,
                       VerificationReport& report);

}  // namespace dynlabel::harness
