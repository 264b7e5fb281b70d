#pragma once

#include "distcol/instance.hpp"

namespace distcol {

/// A cubic supergraph of an instance. Original edges keep their ids and come
/// first; everything at or after `original_edge_count` is a dummy edge with
/// identity distortion. Dummy vertices are appended after the real ones.
struct RegularizedInstance {
  DistortionInstance cubic;
  int original_edge_count = 0;
  int added_vertices_a = 0;
  int added_vertices_b = 0;

  int dummy_edge_count() const { return static_cast<int>(cubic.edges.size()) - original_edge_count; }
};

/// Pads the smaller class with isolated vertices, then joins deficient A and
/// B vertices (lowest index first) with dummy edges until every degree is 3.
/// Throws InvalidInstance if d != 3 or some degree exceeds 3.
RegularizedInstance regularize(const DistortionInstance& inst);

/// Restriction of a colouring of `reg.cubic` to the original edges.
EdgeColouring strip(const EdgeColouring& f, const RegularizedInstance& reg);

}  // namespace distcol
