#pragma once

#include <istream>
#include <ostream>
#include <variant>
#include <vector>

#include "dynlabel/types.hpp"

namespace dynlabel::simnet {

struct AddLeaf {
  NodeId parent;
  bool operator==(const AddLeaf&) const = default;
};

struct RemoveLeaf {
  NodeId leaf;
  bool operator==(const RemoveLeaf&) const = default;
};

using ScenarioEvent = std::variant<AddLeaf, RemoveLeaf>;

/// Lines `A <parentId>` or `R <leafId>`; blank lines and `#` comments are skipped.
std::vector<ScenarioEvent> read_scenario(std::istream& in);
void write_scenario(std::ostream& out, const std::vector<ScenarioEvent>& events);

/// Replays the events on a plain parent array and throws TopologyError at the first
/// event that would be invalid at its application time.
void validate_scenario(const std::vector<ScenarioEvent>& events);

}  // namespace dynlabel::simnet
