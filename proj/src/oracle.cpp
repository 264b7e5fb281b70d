#include "distcol/oracle.hpp"

#include <limits>
#include <vector>

namespace distcol {

namespace {

class Backtracker {
 public:
  explicit Backtracker(const DistortionInstance& inst) : inst_(inst), colours_(inst.edges.size(), kUnassigned) {
    inst.validate();
    const Incidence incidence(inst);
    earlier_a_.resize(inst.edges.size());
    earlier_b_.resize(inst.edges.size());
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
      for (const EdgeId j : incidence.at_a(inst.edges[i].a)) {
        if (static_cast<std::size_t>(j) < i) earlier_a_[i].push_back(static_cast<std::size_t>(j));
      }
      for (const EdgeId j : incidence.at_b(inst.edges[i].b)) {
        if (static_cast<std::size_t>(j) < i) earlier_b_[i].push_back(static_cast<std::size_t>(j));
      }
    }
  }

  // Calls `on_solution` for each proper colouring until it returns false or
  // the node budget runs out. Returns false iff the budget ran out.
  template <typename OnSolution>
  bool search(std::uint64_t budget, OnSolution&& on_solution) {
    const std::size_t m = colours_.size();
    if (m == 0) {
      on_solution(colours_);
      return true;
    }
    std::size_t i = 0;
    while (true) {
      const Colour next = first_consistent(i, colours_[i] + 1);
      if (next == kUnassigned) {
        colours_[i] = kUnassigned;
        if (i == 0) return true;
        --i;
        continue;
      }
      if (nodes_ == budget) return false;
      ++nodes_;
      colours_[i] = next;
      if (i + 1 == m) {
        if (!on_solution(colours_)) return true;
      } else {
        ++i;
      }
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Colour first_consistent(std::size_t i, Colour from) const {
    const Edge& e = inst_.edges[i];
    for (Colour c = from; c <= inst_.d; ++c) {
      bool ok = true;
      for (const std::size_t j : earlier_a_[i]) {
        if (colours_[j] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const Colour seen = e.distortion.apply(c);
      for (const std::size_t j : earlier_b_[i]) {
        if (inst_.edges[j].distortion.apply(colours_[j]) == seen) {
          ok = false;
          break;
        }
      }
      if (ok) return c;
    }
    return kUnassigned;
  }

  const DistortionInstance& inst_;
  std::vector<Colour> colours_;
  std::vector<std::vector<std::size_t>> earlier_a_, earlier_b_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult exhaustive_solve(const DistortionInstance& inst, std::uint64_t node_budget) {
  Backtracker search(inst);
  OracleResult result;
  const bool finished = search.search(node_budget, [&](const std::vector<Colour>& colours) {
    result.witness = EdgeColouring(colours);
    return false;
  });
  result.nodes = search.nodes();
  if (result.witness) {
    result.status = OracleStatus::Found;
  } else {
    result.status = finished ? OracleStatus::Exhausted : OracleStatus::BudgetExceeded;
  }
  return result;
}

std::uint64_t count_solutions(const DistortionInstance& inst, std::uint64_t cap) {
  Backtracker search(inst);
  std::uint64_t count = 0;
  if (cap == 0) return 0;
  search.search(std::numeric_limits<std::uint64_t>::max(), [&](const std::vector<Colour>&) {
    ++count;
    return count < cap;
  });
  return count;
}

const char* to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::Found:
      return "found";
    case OracleStatus::Exhausted:
      return "proven-unsat";
    case OracleStatus::BudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

}  // namespace distcol
