#include "dynlabel/simnet/scenario.hpp"

#include <sstream>
#include <string>

namespace dynlabel::simnet {

std::vector<ScenarioEvent> read_scenario(std::istream& in) {
  std::vector<ScenarioEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string kind;
    if (!(fields >> kind) || kind.front() == '#') continue;
    std::uint64_t id = 0;
    if (!(fields >> id) || id >= kNoNode.value) {
      throw TopologyError("scenario line " + std::to_string(line_no) + ": expected a node id");
    }
    std::string extra;
    if (fields >> extra) throw TopologyError("scenario line " + std::to_string(line_no) + ": trailing input");
    const NodeId node{static_cast<std::uint32_t>(id)};
    if (kind == "A") {
      events.emplace_back(AddLeaf{node});
    } else if (kind == "R") {
      events.emplace_back(RemoveLeaf{node});
    } else {
      throw TopologyError("scenario line " + std::to_string(line_no) + ": unknown event '" + kind + "'");
    }
  }
  return events;
}

void write_scenario(std::ostream& out, const std::vector<ScenarioEvent>& events) {
  for (const ScenarioEvent& e : events) {
    if (const auto* add = std::get_if<AddLeaf>(&e)) {
      out << "A " << add->parent.value << '\n';
    } else {
      out << "R " << std::get<RemoveLeaf>(e).leaf.value << '\n';
    }
  }
}

void validate_scenario(const std::vector<ScenarioEvent>& events) {
  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint32_t> children{0};
  std::vector<bool> alive{true};
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = "event " + std::to_string(i) + ": ";
    if (const auto* add = std::get_if<AddLeaf>(&events[i])) {
      const auto p = add->parent.value;
      if (p >= alive.size() || !alive[p]) throw TopologyError(where + "parent is not alive");
      parent.push_back(p);
      children.push_back(0);
      alive.push_back(true);
      ++children[p];
    } else {
      const auto v = std::get<RemoveLeaf>(events[i]).leaf.value;
      if (v == 0) throw TopologyError(where + "cannot remove the root");
      if (v >= alive.size() || !alive[v]) throw TopologyError(where + "leaf is not alive");
      if (children[v] != 0) throw TopologyError(where + "node is not a leaf");
      alive[v] = false;
      --children[parent[v]];
    }
  }
}

}  // namespace dynlabel::simnet
