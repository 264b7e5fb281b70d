#pragma once

#include <cstdint>
#include <optional>

#include "distcol/instance.hpp"

namespace distcol {

// Plain depth-first search over edges in id order, colours 0..d ascending,
// pruned on A-side and B-side clashes. Works for any d and any degree; meant
// for instances of a dozen or so edges.

enum class OracleStatus { Found, Exhausted, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Exhausted;
  std::optional<EdgeColouring> witness;
  /// Consistent partial assignments visited (one per edge-colour placement).
  std::uint64_t nodes = 0;
};

OracleResult exhaustive_solve(const DistortionInstance& inst, std::uint64_t node_budget);

/// Number of proper distortion-colourings, saturating at `cap`.
std::uint64_t count_solutions(const DistortionInstance& inst, std::uint64_t cap);

const char* to_string(OracleStatus status);

}  // namespace distcol
