#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dynlabel::dynamic {

/// Growth function k(x) that picks the branching factor of each phase.
class KFunction {
 public:
  enum class Kind { PowerOfN, PowerOfLog, Constant };

  static KFunction power_of_n(double epsilon);
  static KFunction power_of_log(double epsilon);
  static KFunction constant(std::uint64_t k);
  /// `pow:0.5`, `logpow:0.5` or `const:4`. Throws ConfigError.
  static KFunction parse(std::string_view spec);

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  /// k(x), clamped to at least 2.
  std::uint64_t operator()(std::uint64_t x) const;
  std::string to_string() const;

 private:
  KFunction(Kind kind, double exponent, std::uint64_t k) : kind_(kind), exponent_(exponent), k_(k) {}

  Kind kind_;
  double exponent_;
  std::uint64_t k_;
};

struct PhaseParams {
  std::uint64_t n_prime = 0;
  std::uint32_t k = 2;
  std::uint32_t p = 2;  // p' + 2
};

/// k = k(n'), p = p' + 2 where k^p' <= 2n' < k^(p'+1). Exact integer arithmetic.
PhaseParams compute_phase_params(std::uint64_t n_prime, const KFunction& kf);

/// k^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t k, std::uint32_t e);

}  // namespace dynlabel::dynamic
