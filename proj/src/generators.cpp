#include "distcol/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "distcol/errors.hpp"

namespace distcol {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  // Reject the incomplete top block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

Distortion SeededRng::permutation(int colours) {
  std::vector<Colour> image(static_cast<std::size_t>(colours));
  std::iota(image.begin(), image.end(), 0);
  shuffle(std::span<Colour>(image));
  return Distortion(std::move(image));
}

DelayInstance::DelayInstance(int d, int size_a, int size_b, std::vector<DelayEdge> edges)
    : d_(d), size_a_(size_a), size_b_(size_b), edges_(std::move(edges)) {
  if (d < 0 || size_a < 0 || size_b < 0) throw InvalidInstance("delay instance: negative parameter");
  const int m = d + 1;
  for (DelayEdge& e : edges_) {
    if (e.a < 0 || e.a >= size_a || e.b < 0 || e.b >= size_b) {
      throw InvalidInstance("delay instance: endpoint out of range");
    }
    e.delay = ((e.delay % m) + m) % m;
  }
}

DistortionInstance delay_to_distortion(const DelayInstance& di) {
  DistortionInstance inst;
  inst.d = di.d();
  inst.size_a = di.size_a();
  inst.size_b = di.size_b();
  inst.edges.reserve(di.edges().size());
  for (const DelayEdge& e : di.edges()) {
    inst.edges.push_back(Edge{e.a, e.b, Distortion::shift(e.delay, di.d() + 1), false});
  }
  return inst;
}

std::size_t count_delay_violations(const DelayInstance& di, const EdgeColouring& f) {
  const int m = di.d() + 1;
  std::vector<std::multiset<int>> at_a(static_cast<std::size_t>(di.size_a()));
  std::vector<std::multiset<int>> at_b(static_cast<std::size_t>(di.size_b()));
  std::size_t bad = 0;
  const auto edges = di.edges();
  if (f.size() != edges.size()) return edges.size() + 1;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Colour c = f[static_cast<EdgeId>(i)];
    if (c < 0 || c >= m) {
      ++bad;
      continue;
    }
    at_a[static_cast<std::size_t>(edges[i].a)].insert(c);
    at_b[static_cast<std::size_t>(edges[i].b)].insert((c + edges[i].delay) % m);
  }
  const auto has_repeat = [](const std::multiset<int>& values) {
    return std::set<int>(values.begin(), values.end()).size() != values.size();
  };
  bad += static_cast<std::size_t>(std::count_if(at_a.begin(), at_a.end(), has_repeat));
  bad += static_cast<std::size_t>(std::count_if(at_b.begin(), at_b.end(), has_repeat));
  return bad;
}

GeneratorMode parse_generator_mode(std::string_view text) {
  if (text == "cubic") return GeneratorMode::Cubic;
  if (text == "subcubic") return GeneratorMode::Subcubic;
  if (text == "delay") return GeneratorMode::Delay;
  throw InvalidInstance("unknown generator mode '" + std::string(text) + "'");
}

namespace {

struct Skeleton {
  int size_a;
  int size_b;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// Union of three random perfect matchings on n + n vertices, then trimmed to
// the requested classes; `keep_quarters` of 4 survive the random drop.
Skeleton skeleton(SeededRng& rng, int size_a, int size_b, int keep_quarters) {
  if (size_a < 0 || size_b < 0) throw InvalidInstance("class sizes must be non-negative");
  const int n = std::max(size_a, size_b);
  Skeleton s{size_a, size_b, {}};
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int round = 0; round < 3; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<Vertex>(perm));
    for (Vertex a = 0; a < n; ++a) {
      const Vertex b = perm[static_cast<std::size_t>(a)];
      const bool drop = rng.below(4) >= static_cast<std::uint64_t>(keep_quarters);
      if (a < size_a && b < size_b && !drop) s.pairs.emplace_back(a, b);
    }
  }
  return s;
}

}  // namespace

DistortionInstance random_instance(std::uint64_t seed, int size_a, int size_b, GeneratorMode mode) {
  if (mode == GeneratorMode::Delay) return delay_to_distortion(random_delay_instance(seed, size_a, size_b));
  if (mode == GeneratorMode::Cubic && size_a != size_b) {
    throw InvalidInstance("cubic mode needs size_a == size_b");
  }
  SeededRng rng(seed);
  const Skeleton s = skeleton(rng, size_a, size_b, mode == GeneratorMode::Cubic ? 4 : 3);
  DistortionInstance inst;
  inst.d = 3;
  inst.size_a = size_a;
  inst.size_b = size_b;
  inst.edges.reserve(s.pairs.size());
  for (const auto& [a, b] : s.pairs) inst.edges.push_back(Edge{a, b, rng.permutation(4), false});
  return inst;
}

DelayInstance random_delay_instance(std::uint64_t seed, int size_a, int size_b) {
  SeededRng rng(seed);
  const Skeleton s = skeleton(rng, size_a, size_b, 4);
  std::vector<DelayEdge> edges;
  edges.reserve(s.pairs.size());
  for (const auto& [a, b] : s.pairs) edges.push_back({a, b, static_cast<int>(rng.below(16))});
  return DelayInstance(3, size_a, size_b, std::move(edges));
}

}  // namespace distcol
