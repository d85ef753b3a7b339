#pragma once

#include <ostream>

#include "dynlabel/harness/config.hpp"

namespace dynlabel::harness {

struct RunResult;

/// Machine-readable summary of a run as JSON.
void write_report(std::ostream& out, const RunConfig& config, const RunResult& result);

}  // namespace dynlabel::harness
