#pragma once

// Test-only helpers: a naive verifier, a brute-force colouring enumerator and
// an isolated-cycle harness. None of these go through the engine.

#include <cstdint>
#include <functional>
#include <vector>

#include "distcol/decomposer.hpp"
#include "distcol/generators.hpp"
#include "distcol/instance.hpp"

namespace distcol::testing {

/// Pairwise double loop over all edges.
inline bool naive_is_proper(const DistortionInstance& inst, const EdgeColouring& f) {
  for (std::size_t i = 0; i < inst.edges.size(); ++i) {
    const Colour ci = f[static_cast<EdgeId>(i)];
    if (ci < 0 || ci > inst.d) return false;
    for (std::size_t j = i + 1; j < inst.edges.size(); ++j) {
      const Colour cj = f[static_cast<EdgeId>(j)];
      if (cj < 0 || cj > inst.d) return false;
      const Edge& ei = inst.edges[i];
      const Edge& ej = inst.edges[j];
      if (ei.a == ej.a && ci == cj) return false;
      if (ei.b == ej.b && ei.distortion.apply(ci) == ej.distortion.apply(cj)) return false;
    }
  }
  return true;
}

/// Calls `visit` on every total assignment in {0..d}^|E| (odometer order).
inline void for_each_assignment(const DistortionInstance& inst,
                                const std::function<void(const EdgeColouring&)>& visit) {
  std::vector<Colour> c(inst.edges.size(), 0);
  while (true) {
    visit(EdgeColouring(c));
    std::size_t i = 0;
    while (i < c.size() && c[i] == inst.d) c[i++] = 0;
    if (i == c.size()) return;
    ++c[i];
  }
}

inline std::uint64_t brute_force_count(const DistortionInstance& inst) {
  std::uint64_t count = 0;
  for_each_assignment(inst, [&](const EdgeColouring& f) { count += naive_is_proper(inst, f) ? 1 : 0; });
  return count;
}

/// A single cycle a0-b0-a1-b1-...-a(k-1)-b(k-1)-a0 of length 2k with its
/// matching environment: a_i -- b_(k+i) (the M-edges at the cycle's A side)
/// and a_(k+i) -- b_i (the M-edges at its B side). Edge ids: cycle edges
/// 0..2k-1 in cycle order, then A-side M-edges, then B-side M-edges.
struct IsolatedCycle {
  int k = 0;
  DistortionInstance instance;
  Decomposition decomposition;

  EdgeId cycle_edge(int i) const { return i; }
  EdgeId a_side_matching(int i) const { return 2 * k + i; }
  EdgeId b_side_matching(int i) const { return 3 * k + i; }
};

/// Random distortions everywhere; with `identical_anchor` the two cycle edges
/// at b0 (ids 0 and 1) share a distortion.
inline IsolatedCycle make_isolated_cycle(int k, std::uint64_t seed, bool identical_anchor) {
  SeededRng rng(seed);
  IsolatedCycle c;
  c.k = k;
  auto& inst = c.instance;
  inst.d = 3;
  inst.size_a = 2 * k;
  inst.size_b = 2 * k;
  for (int i = 0; i < k; ++i) {
    inst.edges.push_back({i, i, rng.permutation(4), false});
    inst.edges.push_back({(i + 1) % k, i, rng.permutation(4), false});
  }
  if (identical_anchor) inst.edges[1].distortion = inst.edges[0].distortion;
  for (int i = 0; i < k; ++i) inst.edges.push_back({i, k + i, rng.permutation(4), false});
  for (int i = 0; i < k; ++i) inst.edges.push_back({k + i, i, rng.permutation(4), false});

  auto& dec = c.decomposition;
  dec.matched_at_a.assign(static_cast<std::size_t>(2 * k), kNoEdge);
  dec.matched_at_b.assign(static_cast<std::size_t>(2 * k), kNoEdge);
  for (int i = 0; i < k; ++i) {
    dec.matching.push_back(c.a_side_matching(i));
    dec.matched_at_a[static_cast<std::size_t>(i)] = c.a_side_matching(i);
    dec.matched_at_b[static_cast<std::size_t>(k + i)] = c.a_side_matching(i);
  }
  for (int i = 0; i < k; ++i) {
    dec.matching.push_back(c.b_side_matching(i));
    dec.matched_at_a[static_cast<std::size_t>(k + i)] = c.b_side_matching(i);
    dec.matched_at_b[static_cast<std::size_t>(i)] = c.b_side_matching(i);
  }
  Cycle cycle;
  for (int i = 0; i < k; ++i) {
    cycle.vertices.push_back(i);
    cycle.vertices.push_back(i);
    cycle.edges.push_back(c.cycle_edge(2 * i));
    cycle.edges.push_back(c.cycle_edge(2 * i + 1));
  }
  dec.cycles.push_back(std::move(cycle));
  return c;
}

}  // namespace distcol::testing
