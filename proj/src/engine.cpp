#include "distcol/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "distcol/errors.hpp"
#include "distcol/regularizer.hpp"
#include "distcol/serialization.hpp"

namespace distcol {

ColouringProblem::ColouringProblem(const DistortionInstance& inst, const Decomposition& decomp)
    : inst_(&inst), decomp_(&decomp), incidence_(inst) {}

namespace {

std::string cycle_label(const CycleContext& ctx) {
  return "cycle through b" + std::to_string(ctx.v) + " (length " + std::to_string(ctx.cycle->length()) + ")";
}

void assign_once(EdgeColouring& f, EdgeId e, Colour c) {
  if (f.is_assigned(e)) {
    throw TheoremViolation("internal invariant: edge " + std::to_string(e) + " coloured twice");
  }
  f.assign(e, c);
}

std::size_t index_of(const Cycle& cycle, EdgeId e) {
  return static_cast<std::size_t>(std::find(cycle.edges.begin(), cycle.edges.end(), e) - cycle.edges.begin());
}

Colour lowest(const ColourSet& set) {
  for (Colour c = 0; c < kSolverColours; ++c) {
    if (set.test(static_cast<std::size_t>(c))) return c;
  }
  return kUnassigned;
}

}  // namespace

CycleContext choose_anchor(const ColouringProblem& problem, const Cycle& cycle) {
  if (cycle.length() < 2 || cycle.length() % 2 != 0) {
    throw std::invalid_argument("cycle must have even length >= 2");
  }
  std::size_t p = 1;
  for (std::size_t i = 3; i < cycle.vertices.size(); i += 2) {
    if (cycle.vertices[i] < cycle.vertices[p]) p = i;
  }
  const EdgeId before = cycle.edges[p - 1];
  const EdgeId after = cycle.edges[p];

  CycleContext ctx;
  ctx.cycle = &cycle;
  ctx.v = cycle.vertices[p];
  ctx.e_uv = std::min(before, after);
  ctx.e_vy = std::max(before, after);
  ctx.u = problem.edge(ctx.e_uv).a;
  ctx.y = problem.edge(ctx.e_vy).a;
  ctx.m_u = problem.matched_at_a(ctx.u);
  ctx.m_y = problem.matched_at_a(ctx.y);
  ctx.m_v = problem.matched_at_b(ctx.v);
  return ctx;
}

AnchorPlan plan_anchor(const ColouringProblem& problem, const CycleContext& ctx) {
  const Distortion& r_uv = problem.edge(ctx.e_uv).distortion;
  const Distortion& r_vy = problem.edge(ctx.e_vy).distortion;
  const bool two_cycle = ctx.is_two_cycle();

  AnchorPlan plan;
  if (r_uv == r_vy) {
    plan.kind = two_cycle ? AnchorCase::TwoCycleIdentical : AnchorCase::IdenticalDistortions;
    plan.colour_m_u = 0;
    plan.colour_m_y = two_cycle ? 0 : 1;
    return plan;
  }

  Colour alpha = 0;
  while (r_uv.apply(alpha) == r_vy.apply(alpha)) ++alpha;
#ifdef DISTCOL_MUTANT_ALPHA_ZERO
  alpha = 0;
#endif
  plan.kind = two_cycle ? AnchorCase::TwoCycleDiffering : AnchorCase::DifferingDistortions;
  plan.alpha = alpha;
  plan.colour_m_u = alpha;
  plan.colour_m_y = alpha;
  return plan;
}

void apply_anchor_plan(const CycleContext& ctx, const AnchorPlan& plan, EdgeColouring& f) {
  if (ctx.m_u == kNoEdge || ctx.m_y == kNoEdge) {
    throw std::invalid_argument("anchor vertex has no matching edge");
  }
  assign_once(f, ctx.m_u, plan.colour_m_u);
  if (ctx.m_y != ctx.m_u) assign_once(f, ctx.m_y, plan.colour_m_y);
}

EdgeColouring colour_matching_phase(const ColouringProblem& problem, const FillerPolicy& filler) {
  EdgeColouring f(problem.instance().edges.size());
  const auto& cycles = problem.decomposition().cycles;
  for (const Cycle& cycle : cycles) {
    const CycleContext ctx = choose_anchor(problem, cycle);
    apply_anchor_plan(ctx, plan_anchor(problem, ctx), f);
  }
  // The rest of each M_{C cap A}; these colours do not matter.
  for (const Cycle& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.vertices.size(); i += 2) {
      const EdgeId m = problem.matched_at_a(cycle.vertices[i]);
      if (m != kNoEdge && !f.is_assigned(m)) f.assign(m, filler ? filler(m) : 0);
    }
  }
  return f;
}

AvailabilityList availability(const ColouringProblem& problem, EdgeId e, const EdgeColouring& f) {
  const DistortionInstance& inst = problem.instance();
  const Edge& edge = problem.edge(e);
  AvailabilityList list{e, ColourSet{}.set()};
  for (const EdgeId g : problem.incidence().at_a(edge.a)) {
    if (g != e && f.is_assigned(g)) list.allowed.reset(static_cast<std::size_t>(edge.distortion.apply(f[g])));
  }
  for (const EdgeId g : problem.incidence().at_b(edge.b)) {
    if (g != e && f.is_assigned(g)) list.allowed.reset(static_cast<std::size_t>(b_side_colour(inst, f, g)));
  }
  return list;
}

BetaGammaDelta select_beta_gamma_delta(const ColourSet& l1, const ColourSet& l2) {
#ifdef DISTCOL_MUTANT_NO_BGD_SCAN
  const Colour beta = lowest(l1 & l2), gamma = lowest(l1), delta = lowest(l2);
  if (beta != kUnassigned && gamma != kUnassigned && delta != kUnassigned) return {beta, gamma, delta};
#else
  for (Colour beta = 0; beta < kSolverColours; ++beta) {
    if (!l1.test(static_cast<std::size_t>(beta)) || !l2.test(static_cast<std::size_t>(beta))) continue;
    for (Colour gamma = 0; gamma < kSolverColours; ++gamma) {
      if (gamma == beta || !l1.test(static_cast<std::size_t>(gamma))) continue;
      for (Colour delta = 0; delta < kSolverColours; ++delta) {
        if (delta == beta || delta == gamma || !l2.test(static_cast<std::size_t>(delta))) continue;
        return {beta, gamma, delta};
      }
    }
  }
#endif
  throw TheoremViolation("no distinct (beta, gamma, delta) for lists " + l1.to_string() + " / " +
                         l2.to_string());
}

ExtensionTrace extend_cycle(const ColouringProblem& problem, const CycleContext& ctx, EdgeColouring& f) {
  const Cycle& cycle = *ctx.cycle;
  if (cycle.length() < 4) throw std::invalid_argument("extend_cycle needs a cycle of length >= 4");
  for (const EdgeId e : cycle.edges) {
    if (f.is_assigned(e)) throw TheoremViolation("internal invariant: cycle edge " + std::to_string(e) +
                                                 " already coloured before extension");
  }

  const AvailabilityList l_uv = availability(problem, ctx.e_uv, f);
  const AvailabilityList l_vy = availability(problem, ctx.e_vy, f);
  if (l_uv.size() < 2 || l_vy.size() < 2) {
    throw TheoremViolation("availability below 2 at the anchor of " + cycle_label(ctx));
  }

  ExtensionTrace trace;
  trace.triple = select_beta_gamma_delta(l_uv, l_vy);
  const Edge& first = problem.edge(ctx.e_uv);
  f.assign(ctx.e_uv, first.distortion.invert(trace.triple.gamma));
  trace.first_b_colour = trace.triple.gamma;

  // Walk from u away from v; the last edge reached is e_vy.
  const std::size_t len = cycle.length();
  const std::size_t i_uv = index_of(cycle, ctx.e_uv);
  const bool backward = cycle.edges[(i_uv + 1) % len] == ctx.e_vy;
  for (std::size_t step = 1; step + 1 < len; ++step) {
    const std::size_t i = backward ? (i_uv + len - step) % len : (i_uv + step) % len;
    const EdgeId e = cycle.edges[i];
    const AvailabilityList list = availability(problem, e, f);
    if (list.size() == 0) {
      throw TheoremViolation("empty availability on edge " + std::to_string(e) + " while walking " +
                             cycle_label(ctx));
    }
    f.assign(e, problem.edge(e).distortion.invert(lowest(list.allowed)));
    ++trace.walked_edges;
  }

  const AvailabilityList last = availability(problem, ctx.e_vy, f);
  Colour closing = kUnassigned;
  if (last.contains(trace.triple.beta)) {
    closing = trace.triple.beta;
  } else if (last.contains(trace.triple.delta)) {
    closing = trace.triple.delta;
  } else {
    throw TheoremViolation("neither beta nor delta survives on the closing edge of " + cycle_label(ctx));
  }
  f.assign(ctx.e_vy, problem.edge(ctx.e_vy).distortion.invert(closing));
  trace.final_b_colour = closing;
  return trace;
}

void colour_two_cycle(const ColouringProblem& problem, const CycleContext& ctx, EdgeColouring& f) {
  if (!ctx.is_two_cycle()) throw std::invalid_argument("colour_two_cycle needs a 2-cycle");
  if (f.is_assigned(ctx.e_uv) || f.is_assigned(ctx.e_vy)) {
    throw TheoremViolation("internal invariant: 2-cycle already coloured");
  }
  const Distortion& r1 = problem.edge(ctx.e_uv).distortion;
  const Distortion& r2 = problem.edge(ctx.e_vy).distortion;
  for (Colour c1 = 0; c1 < kSolverColours; ++c1) {
    if (!availability(problem, ctx.e_uv, f).contains(r1.apply(c1))) continue;
    f.assign(ctx.e_uv, c1);
    const AvailabilityList second = availability(problem, ctx.e_vy, f);
    for (Colour c2 = 0; c2 < kSolverColours; ++c2) {
      if (second.contains(r2.apply(c2))) {
        f.assign(ctx.e_vy, c2);
        return;
      }
    }
    f.unassign(ctx.e_uv);
  }
  throw TheoremViolation("no proper colour pair for the " + cycle_label(ctx));
}

EdgeColouring solve(const DistortionInstance& inst) {
  inst.validate();
  if (inst.d != 3) {
    throw InvalidInstance("the constructive solver supports d=3 only (got d=" + std::to_string(inst.d) +
                          "); use the oracle for other colour counts");
  }
  require_max_degree(inst, 3);

  const RegularizedInstance reg = regularize(inst);
  const Decomposition decomp = decompose(reg.cubic);
  const ColouringProblem problem(reg.cubic, decomp);
  EdgeColouring f(reg.cubic.edges.size());
  try {
    f = colour_matching_phase(problem);
    for (const Cycle& cycle : decomp.cycles) {
      const CycleContext ctx = choose_anchor(problem, cycle);
      if (cycle.is_two_cycle()) {
        colour_two_cycle(problem, ctx, f);
      } else {
        extend_cycle(problem, ctx, f);
      }
    }
  } catch (const TheoremViolation& ex) {
    throw TheoremViolation(ex.what(), encode_diagnostic(reg.cubic, f, ex.what()));
  }
  return strip(f, reg);
}

}  // namespace distcol
