#include "distcol/regularizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "distcol/errors.hpp"

namespace distcol {

namespace {
constexpr int kDegree = 3;
}

RegularizedInstance regularize(const DistortionInstance& inst) {
  if (inst.d != kDegree) {
    throw InvalidInstance("regularizer requires d=3, got d=" + std::to_string(inst.d));
  }
  inst.validate();
  require_max_degree(inst, kDegree);

  RegularizedInstance reg;
  reg.cubic = inst;
  reg.original_edge_count = static_cast<int>(inst.edges.size());

  const int n = std::max(inst.size_a, inst.size_b);
  reg.added_vertices_a = n - inst.size_a;
  reg.added_vertices_b = n - inst.size_b;
  reg.cubic.size_a = n;
  reg.cubic.size_b = n;

  Degrees deg = vertex_degrees(reg.cubic);
  const Distortion identity = Distortion::identity(inst.colours());
  reg.cubic.edges.reserve(static_cast<std::size_t>(3 * n));

  // Deficits on both sides sum to 3n - |E|, so the two cursors run out together.
  std::size_t a = 0;
  std::size_t b = 0;
  const auto size = static_cast<std::size_t>(n);
  while (true) {
    while (a < size && deg.a[a] == kDegree) ++a;
    while (b < size && deg.b[b] == kDegree) ++b;
    if (a == size || b == size) break;
    reg.cubic.edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b), identity, true});
    ++deg.a[a];
    ++deg.b[b];
  }
  return reg;
}

EdgeColouring strip(const EdgeColouring& f, const RegularizedInstance& reg) {
  if (f.size() != reg.cubic.edges.size()) {
    throw std::invalid_argument("colouring does not match the regularized instance");
  }
  const auto values = f.values().first(static_cast<std::size_t>(reg.original_edge_count));
  return EdgeColouring(std::vector<Colour>(values.begin(), values.end()));
}

}  // namespace distcol
