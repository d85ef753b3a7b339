#pragma once

#include <string>
#include <vector>

#include "dynlabel/fsdl/engine.hpp"

namespace dynlabel::harness {

/// Global scan of everything the engine must keep consistent: tree and port structure,
/// flag nesting, per-model port bookkeeping, backup copies and ever-count shares.
/// Appends one message per violation found.
void scan_invariants(const fsdl::Engine& engine, std::vector<std::string>& violations);

/// Copy invariants only: every child's Memory is backed up where it should be and no
/// node holds more than two copies.
void scan_copy_invariants(const fsdl::Engine& engine, std::vector<std::string>& violations);

/// For every level-l subtree T, the ever-count shares over T sum to the nodes ever in T.
void scan_omega_invariant(const fsdl::Engine& engine, std::vector<std::string>& violations);

}  // namespace dynlabel::harness
