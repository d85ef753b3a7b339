#include "dynlabel/dynamic/kfunction.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "dynlabel/types.hpp"

namespace dynlabel::dynamic {

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t clamp_floor(double v) {
  if (!(v >= 2.0)) return 2;
  if (v >= 4.0e18) return 4'000'000'000'000'000'000ULL;
  return static_cast<std::uint64_t>(std::floor(v + 1e-9));
}

double parse_exponent(std::string_view text) {
  double e = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), e);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(e > 0.0) || !(e < 1.0)) {
    throw ConfigError("k-function exponent must lie in (0, 1): " + std::string(text));
  }
  return e;
}

}  // namespace

KFunction KFunction::power_of_n(double epsilon) { return KFunction(Kind::PowerOfN, epsilon, 0); }
KFunction KFunction::power_of_log(double epsilon) { return KFunction(Kind::PowerOfLog, epsilon, 0); }
KFunction KFunction::constant(std::uint64_t k) { return KFunction(Kind::Constant, 0.0, k < 2 ? 2 : k); }

KFunction KFunction::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ConfigError("k-function needs the form kind:value");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view value = spec.substr(colon + 1);
  if (kind == "pow") return power_of_n(parse_exponent(value));
  if (kind == "logpow") return power_of_log(parse_exponent(value));
  if (kind == "const") {
    std::uint64_t k = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), k);
    if (ec != std::errc{} || ptr != value.data() + value.size() || k < 2) {
      throw ConfigError("constant k must be an integer >= 2: " + std::string(value));
    }
    return constant(k);
  }
  throw ConfigError("unknown k-function kind: " + std::string(kind));
}

std::uint64_t KFunction::operator()(std::uint64_t x) const {
  const double xd = static_cast<double>(x < 1 ? 1 : x);
  switch (kind_) {
    case Kind::PowerOfN:
      return clamp_floor(std::pow(xd, exponent_));
    case Kind::PowerOfLog:
      return clamp_floor(std::pow(std::log2(xd), exponent_));
    case Kind::Constant:
      return k_;
  }
  return 2;
}

std::string KFunction::to_string() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::PowerOfN:
      out << "pow:" << exponent_;
      break;
    case Kind::PowerOfLog:
      out << "logpow:" << exponent_;
      break;
    case Kind::Constant:
      out << "const:" << k_;
      break;
  }
  return out.str();
}

std::uint64_t saturating_pow(std::uint64_t k, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (k != 0 && r > kMax / k) return kMax;
    r *= k;
  }
  return r;
}

PhaseParams compute_phase_params(std::uint64_t n_prime, const KFunction& kf) {
  if (n_prime < 1) throw ConfigError("phase parameters need n' >= 1");
  const std::uint64_t k = kf(n_prime);
  if (k > std::numeric_limits<std::uint32_t>::max()) throw ConfigError("k(n') does not fit the level counters");
  // 2n' overflows 64 bits for n' >= 2^63.
  __extension__ using Wide = unsigned __int128;
  const Wide target = Wide{n_prime} * 2;
  std::uint32_t p_prime = 0;
  Wide power = 1;  // k^p'
  while (power * k <= target) {
    power *= k;
    ++p_prime;
  }
  return PhaseParams{n_prime, static_cast<std::uint32_t>(k), p_prime + 2};
}

}  // namespace dynlabel::dynamic
