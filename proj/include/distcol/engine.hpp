#pragma once

#include <bitset>
#include <functional>
#include <optional>

#include "distcol/decomposer.hpp"
#include "distcol/instance.hpp"

namespace distcol {

// Constructive 4-colouring for maximum degree 3.
//
// Phase 1 colours the whole perfect matching M: each cycle C of the 2-factor
// E \ M picks colours for the M-edges at its A-vertices (the anchor plan),
// without looking at any B-side colour. Phase 2 extends each cycle, reading
// the M-edges at its B-vertices as a fixed but arbitrary environment.

inline constexpr int kSolverColours = 4;

/// Subset of {0,1,2,3}.
using ColourSet = std::bitset<kSolverColours>;

/// Bundles an instance, its decomposition and the incidence lists. The
/// instance need not be cubic: per-cycle operations only look at edges
/// incident to the cycle, which is what the small-scale certifications use.
class ColouringProblem {
 public:
  ColouringProblem(const DistortionInstance& inst, const Decomposition& decomp);

  const DistortionInstance& instance() const { return *inst_; }
  const Decomposition& decomposition() const { return *decomp_; }
  const Incidence& incidence() const { return incidence_; }

  const Edge& edge(EdgeId e) const { return inst_->edges[static_cast<std::size_t>(e)]; }
  EdgeId matched_at_a(Vertex a) const { return decomp_->matched_at_a[static_cast<std::size_t>(a)]; }
  EdgeId matched_at_b(Vertex b) const { return decomp_->matched_at_b[static_cast<std::size_t>(b)]; }

 private:
  const DistortionInstance* inst_;
  const Decomposition* decomp_;
  Incidence incidence_;
};

/// The 2-edge subarc u-v-y of a cycle and the matching edges around it.
/// For a 2-cycle u == y and m_u == m_y.
struct CycleContext {
  const Cycle* cycle = nullptr;
  Vertex u = -1;
  Vertex v = -1;
  Vertex y = -1;
  EdgeId e_uv = kNoEdge;
  EdgeId e_vy = kNoEdge;
  EdgeId m_u = kNoEdge;
  EdgeId m_y = kNoEdge;
  EdgeId m_v = kNoEdge;

  bool is_two_cycle() const { return cycle->is_two_cycle(); }
};

enum class AnchorCase { IdenticalDistortions, DifferingDistortions, TwoCycleIdentical, TwoCycleDiffering };

struct AnchorPlan {
  AnchorCase kind = AnchorCase::IdenticalDistortions;
  Colour colour_m_u = kUnassigned;
  Colour colour_m_y = kUnassigned;
  std::optional<Colour> alpha;
};

/// B-side colours still open for a cycle edge given every coloured edge
/// incident to either of its endpoints.
struct AvailabilityList {
  EdgeId edge = kNoEdge;
  ColourSet allowed;

  std::size_t size() const { return allowed.count(); }
  bool contains(Colour c) const { return allowed.test(static_cast<std::size_t>(c)); }
};

struct BetaGammaDelta {
  Colour beta = kUnassigned;
  Colour gamma = kUnassigned;
  Colour delta = kUnassigned;
};

/// What extend_cycle decided, for instrumentation.
struct ExtensionTrace {
  BetaGammaDelta triple;
  Colour first_b_colour = kUnassigned;  // B-side colour of e_uv (always gamma)
  Colour final_b_colour = kUnassigned;  // B-side colour of e_vy (beta or delta)
  std::size_t walked_edges = 0;
};

/// Subarc centred at the lowest-indexed B-vertex of the cycle; e_uv is the
/// lower-id cycle edge at v. 2-cycles take their two edges in id order.
CycleContext choose_anchor(const ColouringProblem& problem, const Cycle& cycle);

/// Identical distortions on e_uv, e_vy: m_u, m_y get distinct colours 0, 1
/// (a 2-cycle just gets 0). Otherwise both get alpha, the smallest colour on
/// which the two distortions disagree.
AnchorPlan plan_anchor(const ColouringProblem& problem, const CycleContext& ctx);

/// Writes the plan's colours onto m_u and m_y.
void apply_anchor_plan(const CycleContext& ctx, const AnchorPlan& plan, EdgeColouring& f);

/// Colours every edge of M: anchors per cycle, then `filler` for every other
/// M-edge (colour 0 when not given). Cycle edges stay unassigned.
using FillerPolicy = std::function<Colour(EdgeId)>;
EdgeColouring colour_matching_phase(const ColouringProblem& problem, const FillerPolicy& filler = {});

AvailabilityList availability(const ColouringProblem& problem, EdgeId e, const EdgeColouring& f);

/// First lexicographic (beta, gamma, delta) with beta in both lists, gamma in
/// l1, delta in l2, all distinct. Throws TheoremViolation when none exists.
BetaGammaDelta select_beta_gamma_delta(const ColourSet& l1, const ColourSet& l2);
inline BetaGammaDelta select_beta_gamma_delta(const AvailabilityList& l1, const AvailabilityList& l2) {
  return select_beta_gamma_delta(l1.allowed, l2.allowed);
}

/// Colours every edge of a cycle of length >= 4. Requires all M-edges at the
/// cycle's vertices to be coloured.
ExtensionTrace extend_cycle(const ColouringProblem& problem, const CycleContext& ctx, EdgeColouring& f);

/// Colours both edges of a 2-cycle by scanning A-side colour pairs in
/// lexicographic order.
void colour_two_cycle(const ColouringProblem& problem, const CycleContext& ctx, EdgeColouring& f);

/// Full pipeline for d = 3 and maximum degree <= 3: regularize, decompose,
/// colour M, extend every cycle, strip dummies.
EdgeColouring solve(const DistortionInstance& inst);

}  // namespace distcol
