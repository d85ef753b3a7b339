#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace dynlabel {

/// Stable node identity. Ids are handed out in arrival order and never reused.
struct NodeId {
  std::uint32_t value = std::numeric_limits<std::uint32_t>::max();

  constexpr NodeId() = default;
  constexpr explicit NodeId(std::uint32_t v) : value(v) {}
  constexpr bool valid() const { return value != std::numeric_limits<std::uint32_t>::max(); }
  constexpr std::size_t index() const { return value; }
  constexpr auto operator<=>(const NodeId&) const = default;
};

inline constexpr NodeId kNoNode{};

/// Local port name at one node. Only meaningful together with the node that owns it.
struct PortNumber {
  std::uint64_t value = 0;

  constexpr PortNumber() = default;
  constexpr explicit PortNumber(std::uint64_t v) : value(v) {}
  constexpr auto operator<=>(const PortNumber&) const = default;
};

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MessageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(NodeId v);

}  // namespace dynlabel

template <>
struct std::hash<dynlabel::NodeId> {
  std::size_t operator()(const dynlabel::NodeId& v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

template <>
struct std::hash<dynlabel::PortNumber> {
  std::size_t operator()(const dynlabel::PortNumber& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.value);
  }
};
