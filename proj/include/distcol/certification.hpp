#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distcol/decomposer.hpp"
#include "distcol/instance.hpp"

namespace distcol {

// Exhaustive self-certification suites behind `distcol selftest`.

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
  /// JSON describing the first failing case, empty when passed.
  std::string reproducer;
};

/// Smallest cubic setting around a 2-cycle: a0=b0 doubled (distortions r1,
/// r2, edges 0 and 1), m_u = a0-b1 (edge 2), m_v = a1-b0 (edge 3, identity),
/// and a second 2-cycle a1=b1 (edges 4, 5). `colouring` has m_u = anchor
/// colour and m_v showing `v_colour` at b0; everything else unassigned.
struct TwoCycleFixture {
  DistortionInstance instance;
  Decomposition decomposition;
  EdgeColouring colouring;
};

TwoCycleFixture make_two_cycle_fixture(const Distortion& r1, const Distortion& r2, Colour anchor_colour,
                                       Colour v_colour);

/// All 24 permutations of {0,1,2,3} in lexicographic order.
std::vector<Distortion> all_permutations_4();

SuiteResult certify_two_cycle_lemma();
SuiteResult certify_beta_gamma_delta();
SuiteResult certify_latin_squares();
SuiteResult certify_random_cross_check(std::uint64_t seed, int instances);

std::vector<SuiteResult> run_selftest();

}  // namespace distcol
