#include "distcol/certification.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "distcol/engine.hpp"
#include "distcol/errors.hpp"
#include "distcol/generators.hpp"
#include "distcol/latin.hpp"
#include "distcol/oracle.hpp"
#include "distcol/serialization.hpp"

namespace distcol {

namespace {

std::string perm_text(const Distortion& r) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < r.image().size(); ++i) out << (i ? "," : "") << r.image()[i];
  out << ']';
  return out.str();
}

void fail(SuiteResult& result, std::string detail, std::string reproducer) {
  if (!result.passed) return;  // keep the first failure
  result.passed = false;
  result.detail = std::move(detail);
  result.reproducer = std::move(reproducer);
}

// True iff colour_two_cycle completes on the fixture.
bool two_cycle_completes(const Distortion& r1, const Distortion& r2, Colour anchor, Colour v_colour) {
  TwoCycleFixture fx = make_two_cycle_fixture(r1, r2, anchor, v_colour);
  const ColouringProblem problem(fx.instance, fx.decomposition);
  const CycleContext ctx = choose_anchor(problem, fx.decomposition.cycles[0]);
  try {
    colour_two_cycle(problem, ctx, fx.colouring);
  } catch (const TheoremViolation&) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<Distortion> all_permutations_4() {
  std::vector<Colour> p(4);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Distortion> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TwoCycleFixture make_two_cycle_fixture(const Distortion& r1, const Distortion& r2, Colour anchor_colour,
                                       Colour v_colour) {
  const Distortion id = Distortion::identity(4);
  TwoCycleFixture fx;
  fx.instance.d = 3;
  fx.instance.size_a = 2;
  fx.instance.size_b = 2;
  fx.instance.edges = {
      {0, 0, r1, false}, {0, 0, r2, false}, {0, 1, id, false},
      {1, 0, id, false}, {1, 1, id, false}, {1, 1, id, false},
  };
  fx.decomposition.matching = {2, 3};
  fx.decomposition.matched_at_a = {2, 3};
  fx.decomposition.matched_at_b = {3, 2};
  fx.decomposition.cycles = {Cycle{{0, 1}, {0, 0}}, Cycle{{4, 5}, {1, 1}}};
  fx.colouring = EdgeColouring(fx.instance.edges.size());
  fx.colouring.assign(2, anchor_colour);
  fx.colouring.assign(3, v_colour);
  return fx;
}

SuiteResult certify_two_cycle_lemma() {
  SuiteResult result{"two-cycle lemma", true, 0, {}, {}};
  // Refutation: with anchor colour 0 instead of alpha there is no completion.
  const Distortion id = Distortion::identity(4);
  const Distortion swap12({0, 2, 1, 3});
  ++result.cases;
  if (two_cycle_completes(id, swap12, 0, 3)) {
    fail(result, "refutation case (anchor 0, v_colour 3) unexpectedly completed", "{}");
  }
  {
    const TwoCycleFixture fx = make_two_cycle_fixture(id, swap12, 0, 0);
    const ColouringProblem problem(fx.instance, fx.decomposition);
    const AnchorPlan plan = plan_anchor(problem, choose_anchor(problem, fx.decomposition.cycles[0]));
    if (plan.colour_m_u == 0) {
      const TwoCycleFixture bad = make_two_cycle_fixture(id, swap12, 0, 3);
      fail(result, "anchor rule picked colour 0 for r1=[0,1,2,3] r2=[0,2,1,3]; refuted at v_colour=3",
           encode_diagnostic(bad.instance, bad.colouring, "alpha rule refutation"));
    }
  }

  const auto perms = all_permutations_4();
  for (const Distortion& r1 : perms) {
    for (const Distortion& r2 : perms) {
      std::vector<Colour> anchors;
      if (r1 == r2) {
        anchors = {0, 1, 2, 3};
      } else {
        const TwoCycleFixture fx = make_two_cycle_fixture(r1, r2, 0, 0);
        const ColouringProblem problem(fx.instance, fx.decomposition);
        anchors = {plan_anchor(problem, choose_anchor(problem, fx.decomposition.cycles[0])).colour_m_u};
      }
      for (const Colour anchor : anchors) {
        for (Colour v_colour = 0; v_colour < 4; ++v_colour) {
          ++result.cases;
          if (!two_cycle_completes(r1, r2, anchor, v_colour)) {
            const TwoCycleFixture bad = make_two_cycle_fixture(r1, r2, anchor, v_colour);
            fail(result, "no completion for r1=" + perm_text(r1) + " r2=" + perm_text(r2) + " anchor=" +
                             std::to_string(anchor) + " v_colour=" + std::to_string(v_colour),
                 encode_diagnostic(bad.instance, bad.colouring, "two-cycle completion failed"));
          }
        }
      }
    }
  }
  if (result.passed) result.detail = "all 24x24 distortion pairs complete; refutation holds";
  return result;
}

SuiteResult certify_beta_gamma_delta() {
  SuiteResult result{"beta/gamma/delta lemma", true, 0, {}, {}};
  for (unsigned m1 = 0; m1 < 16; ++m1) {
    for (unsigned m2 = 0; m2 < 16; ++m2) {
      const ColourSet l1(m1), l2(m2);
      if (l1.count() < 2 || l2.count() < 2 || l1 == l2 || (l1 & l2).none()) continue;
      ++result.cases;
      const std::string repro = "{\"l1\":\"" + l1.to_string() + "\",\"l2\":\"" + l2.to_string() + "\"}";
      try {
        const BetaGammaDelta t = select_beta_gamma_delta(l1, l2);
        const auto in = [](const ColourSet& s, Colour c) {
          return c >= 0 && c < kSolverColours && s.test(static_cast<std::size_t>(c));
        };
        const bool ok = in(l1, t.beta) && in(l2, t.beta) && in(l1, t.gamma) && in(l2, t.delta) &&
                        t.beta != t.gamma && t.beta != t.delta && t.gamma != t.delta;
        if (!ok) fail(result, "invalid triple for lists " + l1.to_string() + " / " + l2.to_string(), repro);
      } catch (const TheoremViolation& ex) {
        fail(result, ex.what(), repro);
      }
    }
  }
  if (result.passed) result.detail = "every admissible list pair yields a distinct triple";
  return result;
}

SuiteResult certify_latin_squares() {
  SuiteResult result{"order-4 Latin squares", true, 0, {}, {}};
  const auto squares = enumerate_latin_4();
  if (squares.size() != 576) {
    fail(result, "enumerated " + std::to_string(squares.size()) + " squares, expected 576", "{}");
  }
  for (const LatinSquare& sq : squares) {
    ++result.cases;
    try {
      const Transversal t = find_partial_transversal(sq);
      if (t.size() != 3 || !is_transversal(sq, t)) {
        fail(result, "invalid transversal", sq.to_text());
      }
    } catch (const std::exception& ex) {
      fail(result, ex.what(), sq.to_text());
    }
  }
  if (result.passed) result.detail = "576 squares, each with a verified size-3 transversal";
  return result;
}

SuiteResult certify_random_cross_check(std::uint64_t seed, int instances) {
  SuiteResult result{"random cross-check", true, 0, {}, {}};
  const GeneratorMode modes[] = {GeneratorMode::Cubic, GeneratorMode::Subcubic, GeneratorMode::Delay};
  SeededRng sizes(seed);
  for (int i = 0; i < instances; ++i) {
    const GeneratorMode mode = modes[i % 3];
    const int small = 1 + static_cast<int>(sizes.below(3));
    const int other = mode == GeneratorMode::Cubic ? small : 1 + static_cast<int>(sizes.below(3));
    const DistortionInstance inst = random_instance(seed + static_cast<std::uint64_t>(i), small, other, mode);
    ++result.cases;
    try {
      const EdgeColouring f = solve(inst);
      if (!verify_colouring(inst, f).empty()) {
        fail(result, "solver output does not verify", encode_instance(inst));
        continue;
      }
      const OracleResult oracle = exhaustive_solve(inst, 1'000'000);
      if (oracle.status != OracleStatus::Found || !verify_colouring(inst, *oracle.witness).empty()) {
        fail(result, std::string("oracle disagrees: ") + to_string(oracle.status), encode_instance(inst));
      }
    } catch (const TheoremViolation& ex) {
      fail(result, ex.what(), ex.context());
    } catch (const std::exception& ex) {
      fail(result, ex.what(), encode_instance(inst));
    }
  }
  if (result.passed) result.detail = "solver and oracle agree on every instance";
  return result;
}

std::vector<SuiteResult> run_selftest() {
  return {certify_two_cycle_lemma(), certify_beta_gamma_delta(), certify_latin_squares(),
          certify_random_cross_check(20261016, 600)};
}

}  // namespace distcol
