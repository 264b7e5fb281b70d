#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "distcol/instance.hpp"

namespace distcol {

/// Portable seeded RNG: std::mt19937_64 (whose output sequence the standard
/// fixes) with rejection sampling and our own Fisher-Yates, so a seed yields
/// the same instance on every platform. Bump kGeneratorVersion when the
/// draw sequence changes.
inline constexpr int kGeneratorVersion = 1;

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
    }
  }

  Distortion permutation(int colours);

 private:
  std::mt19937_64 engine_;
};

struct DelayEdge {
  Vertex a = 0;
  Vertex b = 0;
  int delay = 0;
};

/// Bipartite multigraph whose edges carry integer delays, reduced modulo d+1.
class DelayInstance {
 public:
  DelayInstance(int d, int size_a, int size_b, std::vector<DelayEdge> edges);

  int d() const { return d_; }
  int size_a() const { return size_a_; }
  int size_b() const { return size_b_; }
  std::span<const DelayEdge> edges() const { return edges_; }

 private:
  int d_;
  int size_a_;
  int size_b_;
  std::vector<DelayEdge> edges_;
};

/// perm[i] = (i + delay) mod (d+1) per edge.
DistortionInstance delay_to_distortion(const DelayInstance& di);

/// Direct check of the delay condition: f proper at every A-vertex and
/// (f + delay) mod (d+1) proper at every B-vertex. Returns the number of
/// vertices where it fails (0 = proper); does not go through Distortion.
std::size_t count_delay_violations(const DelayInstance& di, const EdgeColouring& f);

enum class GeneratorMode { Cubic, Subcubic, Delay };

GeneratorMode parse_generator_mode(std::string_view text);

/// Cubic: union of three random perfect matchings (size_a must equal size_b).
/// Subcubic: a cubic multigraph on max(size_a, size_b) per side, dropping
/// edges that leave the requested classes and a random quarter of the rest.
/// Delay: subcubic-style structure without the random drop, delays in [0, 16).
/// Distortions are uniformly random permutations of {0,1,2,3}.
DistortionInstance random_instance(std::uint64_t seed, int size_a, int size_b, GeneratorMode mode);

DelayInstance random_delay_instance(std::uint64_t seed, int size_a, int size_b);

}  // namespace distcol
