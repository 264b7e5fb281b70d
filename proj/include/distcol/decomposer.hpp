#pragma once

#include <span>
#include <vector>

#include "distcol/instance.hpp"

namespace distcol {

/// A closed walk through a 2-factor component.
///
/// `vertices` alternates A and B: even positions hold A-vertex indices, odd
/// positions B-vertex indices. `edges[i]` joins `vertices[i]` and
/// `vertices[(i + 1) % length()]`. A 2-cycle is two parallel edges on one
/// vertex pair.
struct Cycle {
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices;

  std::size_t length() const { return edges.size(); }
  bool is_two_cycle() const { return edges.size() == 2; }

  bool operator==(const Cycle&) const = default;
};

struct Decomposition {
  /// Perfect matching M, ascending edge ids.
  std::vector<EdgeId> matching;
  /// M-edge at each vertex (kNoEdge if uncovered).
  std::vector<EdgeId> matched_at_a;
  std::vector<EdgeId> matched_at_b;
  /// Cycles partitioning E \ M.
  std::vector<Cycle> cycles;
};

/// Phase-based augmenting-path maximum matching on the multigraph. Throws
/// DecompositionError naming an uncovered vertex if the maximum matching is
/// not perfect (only possible when the input is not regular bipartite).
std::vector<EdgeId> perfect_matching(const DistortionInstance& cubic);

/// Splits the non-matching edges into cycles. Walks start at the lowest
/// unvisited A-vertex along its lowest-id free edge. Throws DecompositionError
/// if `matching` is not perfect or the remainder is not 2-regular.
std::vector<Cycle> cycle_decomposition(const DistortionInstance& cubic, std::span<const EdgeId> matching);

Decomposition decompose(const DistortionInstance& cubic);

}  // namespace distcol
