#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace distcol {

using Colour = int;
using EdgeId = int;
using Vertex = int;

inline constexpr Colour kUnassigned = -1;
inline constexpr EdgeId kNoEdge = -1;

enum class Side { A, B };

/// A bijection on {0, ..., d}. `apply` maps the colour given at the A end of
/// an edge to the colour seen at its B end; `invert` goes the other way.
class Distortion {
 public:
  Distortion() = default;

  /// Throws InvalidInstance unless `image` is a permutation of 0..size-1.
  explicit Distortion(std::vector<Colour> image);

  static Distortion identity(int colours);
  /// perm[i] = (i + delay) mod colours; negative delays wrap.
  static Distortion shift(int delay, int colours);

  Colour apply(Colour c) const { return image_[static_cast<std::size_t>(c)]; }
  Colour invert(Colour c) const;

  int colours() const { return static_cast<int>(image_.size()); }
  std::span<const Colour> image() const { return image_; }

  bool operator==(const Distortion&) const = default;

 private:
  std::vector<Colour> image_;
};

inline Colour apply_distortion(const Distortion& r, Colour c) { return r.apply(c); }
inline Colour invert_distortion(const Distortion& r, Colour c) { return r.invert(c); }

struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  Distortion distortion;
  bool dummy = false;

  bool operator==(const Edge&) const = default;
};

/// Bipartite multigraph with classes A = {0..size_a-1}, B = {0..size_b-1}.
/// Edge ids are positions in `edges`; parallel edges are distinct by id.
struct DistortionInstance {
  int d = 3;
  int size_a = 0;
  int size_b = 0;
  std::vector<Edge> edges;

  int colours() const { return d + 1; }
  std::size_t edge_count() const { return edges.size(); }

  /// Structural checks only: endpoints in range, every distortion acts on
  /// {0..d}. Degree bounds are enforced by the solver path, not here, so the
  /// oracle can look at over-full instances.
  void validate() const;

  bool operator==(const DistortionInstance&) const = default;
};

struct Degrees {
  std::vector<int> a;
  std::vector<int> b;
};

Degrees vertex_degrees(const DistortionInstance& inst);

/// Throws InvalidInstance naming the first vertex whose degree exceeds `bound`.
void require_max_degree(const DistortionInstance& inst, int bound);

/// Edges incident to each vertex, in ascending id order (CSR layout).
class Incidence {
 public:
  Incidence() = default;
  explicit Incidence(const DistortionInstance& inst);

  std::span<const EdgeId> at_a(Vertex a) const { return slice(offset_a_, edges_a_, a); }
  std::span<const EdgeId> at_b(Vertex b) const { return slice(offset_b_, edges_b_, b); }

 private:
  static std::span<const EdgeId> slice(const std::vector<std::size_t>& offsets,
                                       const std::vector<EdgeId>& edges, Vertex v) {
    const auto i = static_cast<std::size_t>(v);
    return std::span<const EdgeId>(edges).subspan(offsets[i], offsets[i + 1] - offsets[i]);
  }

  std::vector<std::size_t> offset_a_, offset_b_;
  std::vector<EdgeId> edges_a_, edges_b_;
};

/// A-side colour per edge id. B-side colours are never stored; they are
/// derived through the edge's distortion.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  explicit EdgeColouring(std::size_t edge_count) : colours_(edge_count, kUnassigned) {}
  explicit EdgeColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

  std::size_t size() const { return colours_.size(); }
  Colour operator[](EdgeId e) const { return colours_[static_cast<std::size_t>(e)]; }
  bool is_assigned(EdgeId e) const { return (*this)[e] != kUnassigned; }
  bool complete() const;

  void assign(EdgeId e, Colour c) { colours_[static_cast<std::size_t>(e)] = c; }
  void unassign(EdgeId e) { assign(e, kUnassigned); }

  std::span<const Colour> values() const { return colours_; }

  bool operator==(const EdgeColouring&) const = default;

 private:
  std::vector<Colour> colours_;
};

/// Colour of `e` as seen from its B end, or kUnassigned.
inline Colour b_side_colour(const DistortionInstance& inst, const EdgeColouring& f, EdgeId e) {
  const Colour c = f[e];
  return c == kUnassigned ? kUnassigned : inst.edges[static_cast<std::size_t>(e)].distortion.apply(c);
}

struct Violation {
  enum class Kind { Unassigned, OutOfRange, ASideClash, BSideClash };

  Kind kind;
  Vertex vertex = -1;       // -1 for per-edge kinds
  Colour colour = kUnassigned;
  std::vector<EdgeId> edges;

  bool operator==(const Violation&) const = default;
};

/// "vertex a3 side A colour 2 edges 4 7" style single line.
std::string describe(const Violation& v);

/// Empty iff `f` is a proper distortion-colouring of `inst`. One violation per
/// (vertex, clashing colour) group; unassigned and out-of-range entries are
/// reported per edge. Throws std::invalid_argument if sizes disagree.
std::vector<Violation> verify_colouring(const DistortionInstance& inst, const EdgeColouring& f);

}  // namespace distcol
