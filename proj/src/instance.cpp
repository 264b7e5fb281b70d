#include "distcol/instance.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "distcol/errors.hpp"

namespace distcol {

Distortion::Distortion(std::vector<Colour> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (const Colour c : image_) {
    if (c < 0 || static_cast<std::size_t>(c) >= image_.size() || seen[static_cast<std::size_t>(c)]) {
      throw InvalidInstance("distortion is not a permutation of 0.." +
                            std::to_string(static_cast<int>(image_.size()) - 1));
    }
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

Distortion Distortion::identity(int colours) { return shift(0, colours); }

Distortion Distortion::shift(int delay, int colours) {
  if (colours <= 0) throw InvalidInstance("colour count must be positive");
  const int k = ((delay % colours) + colours) % colours;
  std::vector<Colour> image(static_cast<std::size_t>(colours));
  for (int i = 0; i < colours; ++i) image[static_cast<std::size_t>(i)] = (i + k) % colours;
  return Distortion(std::move(image));
}

Colour Distortion::invert(Colour c) const {
  const auto it = std::find(image_.begin(), image_.end(), c);
  return static_cast<Colour>(it - image_.begin());
}

void DistortionInstance::validate() const {
  if (d < 0) throw InvalidInstance("d must be non-negative");
  if (size_a < 0 || size_b < 0) throw InvalidInstance("class sizes must be non-negative");
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (e.a < 0 || e.a >= size_a) {
      throw InvalidInstance("edge " + std::to_string(id) + ": A-endpoint " + std::to_string(e.a) +
                            " out of range");
    }
    if (e.b < 0 || e.b >= size_b) {
      throw InvalidInstance("edge " + std::to_string(id) + ": B-endpoint " + std::to_string(e.b) +
                            " out of range");
    }
    if (e.distortion.colours() != colours()) {
      throw InvalidInstance("edge " + std::to_string(id) + ": distortion acts on " +
                            std::to_string(e.distortion.colours()) + " colours, expected " +
                            std::to_string(colours()));
    }
  }
}

Degrees vertex_degrees(const DistortionInstance& inst) {
  Degrees deg{std::vector<int>(static_cast<std::size_t>(inst.size_a), 0),
              std::vector<int>(static_cast<std::size_t>(inst.size_b), 0)};
  for (const Edge& e : inst.edges) {
    ++deg.a[static_cast<std::size_t>(e.a)];
    ++deg.b[static_cast<std::size_t>(e.b)];
  }
  return deg;
}

void require_max_degree(const DistortionInstance& inst, int bound) {
  const Degrees deg = vertex_degrees(inst);
  for (std::size_t v = 0; v < deg.a.size(); ++v) {
    if (deg.a[v] > bound) {
      throw InvalidInstance("vertex a" + std::to_string(v) + " has degree " + std::to_string(deg.a[v]) +
                            " > " + std::to_string(bound));
    }
  }
  for (std::size_t v = 0; v < deg.b.size(); ++v) {
    if (deg.b[v] > bound) {
      throw InvalidInstance("vertex b" + std::to_string(v) + " has degree " + std::to_string(deg.b[v]) +
                            " > " + std::to_string(bound));
    }
  }
}

namespace {

void build_csr(std::size_t vertex_count, const std::vector<Edge>& edges, bool a_side,
               std::vector<std::size_t>& offsets, std::vector<EdgeId>& out) {
  offsets.assign(vertex_count + 1, 0);
  for (const Edge& e : edges) ++offsets[static_cast<std::size_t>(a_side ? e.a : e.b) + 1];
  for (std::size_t v = 0; v < vertex_count; ++v) offsets[v + 1] += offsets[v];
  out.assign(edges.size(), kNoEdge);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Ascending id order falls out of the single forward pass.
  for (std::size_t id = 0; id < edges.size(); ++id) {
    const auto v = static_cast<std::size_t>(a_side ? edges[id].a : edges[id].b);
    out[cursor[v]++] = static_cast<EdgeId>(id);
  }
}

}  // namespace

Incidence::Incidence(const DistortionInstance& inst) {
  build_csr(static_cast<std::size_t>(inst.size_a), inst.edges, true, offset_a_, edges_a_);
  build_csr(static_cast<std::size_t>(inst.size_b), inst.edges, false, offset_b_, edges_b_);
}

bool EdgeColouring::complete() const {
  return std::none_of(colours_.begin(), colours_.end(), [](Colour c) { return c == kUnassigned; });
}

std::string describe(const Violation& v) {
  std::ostringstream out;
  switch (v.kind) {
    case Violation::Kind::Unassigned:
      out << "unassigned edge";
      break;
    case Violation::Kind::OutOfRange:
      out << "colour " << v.colour << " out of range on edge";
      break;
    case Violation::Kind::ASideClash:
      out << "vertex a" << v.vertex << " side A colour " << v.colour << " edges";
      break;
    case Violation::Kind::BSideClash:
      out << "vertex b" << v.vertex << " side B colour " << v.colour << " edges";
      break;
  }
  for (const EdgeId e : v.edges) out << ' ' << e;
  return out.str();
}

namespace {

// Groups (vertex, colour, edge) triples and reports every group of size > 1.
void collect_clashes(std::vector<std::tuple<Vertex, Colour, EdgeId>>& keyed, Violation::Kind kind,
                     std::vector<Violation>& out) {
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i + 1;
    while (j < keyed.size() && std::get<0>(keyed[j]) == std::get<0>(keyed[i]) &&
           std::get<1>(keyed[j]) == std::get<1>(keyed[i])) {
      ++j;
    }
    if (j - i > 1) {
      Violation v{kind, std::get<0>(keyed[i]), std::get<1>(keyed[i]), {}};
      for (std::size_t k = i; k < j; ++k) v.edges.push_back(std::get<2>(keyed[k]));
      out.push_back(std::move(v));
    }
    i = j;
  }
}

}  // namespace

std::vector<Violation> verify_colouring(const DistortionInstance& inst, const EdgeColouring& f) {
  if (f.size() != inst.edges.size()) {
    throw std::invalid_argument("colouring has " + std::to_string(f.size()) + " entries, instance has " +
                                std::to_string(inst.edges.size()) + " edges");
  }
  std::vector<Violation> violations;
  std::vector<std::tuple<Vertex, Colour, EdgeId>> a_keyed, b_keyed;
  a_keyed.reserve(f.size());
  b_keyed.reserve(f.size());
  for (std::size_t id = 0; id < inst.edges.size(); ++id) {
    const auto e = static_cast<EdgeId>(id);
    const Colour c = f[e];
    if (c == kUnassigned) {
      violations.push_back({Violation::Kind::Unassigned, -1, kUnassigned, {e}});
      continue;
    }
    if (c < 0 || c > inst.d) {
      violations.push_back({Violation::Kind::OutOfRange, -1, c, {e}});
      continue;
    }
    const Edge& edge = inst.edges[id];
    a_keyed.emplace_back(edge.a, c, e);
    b_keyed.emplace_back(edge.b, edge.distortion.apply(c), e);
  }
  collect_clashes(a_keyed, Violation::Kind::ASideClash, violations);
  collect_clashes(b_keyed, Violation::Kind::BSideClash, violations);
  return violations;
}

}  // namespace distcol
