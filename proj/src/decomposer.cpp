#include "distcol/decomposer.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <queue>

#include "distcol/errors.hpp"

namespace distcol {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp over edge ids so that parallel edges stay distinct. The DFS
// is iterative: augmenting paths in large cubic graphs can be long.
class MatchingSearch {
 public:
  explicit MatchingSearch(const DistortionInstance& g)
      : g_(g),
        adj_(g),
        mate_a_(static_cast<std::size_t>(g.size_a), kNoEdge),
        mate_b_(static_cast<std::size_t>(g.size_b), kNoEdge),
        dist_(static_cast<std::size_t>(g.size_a), kInf),
        cursor_(static_cast<std::size_t>(g.size_a), 0) {}

  void run() {
    greedy_start();
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (Vertex a = 0; a < g_.size_a; ++a) {
        if (mate_a_[idx(a)] == kNoEdge) augment_from(a);
      }
    }
  }

  const std::vector<EdgeId>& mate_a() const { return mate_a_; }
  const std::vector<EdgeId>& mate_b() const { return mate_b_; }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }
  const Edge& edge(EdgeId e) const { return g_.edges[static_cast<std::size_t>(e)]; }

  void match(EdgeId e) {
    mate_a_[idx(edge(e).a)] = e;
    mate_b_[idx(edge(e).b)] = e;
  }

  void greedy_start() {
    for (Vertex a = 0; a < g_.size_a; ++a) {
      for (const EdgeId e : adj_.at_a(a)) {
        if (mate_b_[idx(edge(e).b)] == kNoEdge) {
          match(e);
          break;
        }
      }
    }
  }

  // BFS layering from free A-vertices; returns whether a free B-vertex is reachable.
  bool layer() {
    std::queue<Vertex> queue;
    for (Vertex a = 0; a < g_.size_a; ++a) {
      if (mate_a_[idx(a)] == kNoEdge) {
        dist_[idx(a)] = 0;
        queue.push(a);
      } else {
        dist_[idx(a)] = kInf;
      }
    }
    shortest_ = kInf;
    while (!queue.empty()) {
      const Vertex a = queue.front();
      queue.pop();
      if (dist_[idx(a)] >= shortest_) continue;
      for (const EdgeId e : adj_.at_a(a)) {
        const EdgeId mate = mate_b_[idx(edge(e).b)];
        if (mate == kNoEdge) {
          shortest_ = std::min(shortest_, dist_[idx(a)]);
        } else if (dist_[idx(edge(mate).a)] == kInf) {
          dist_[idx(edge(mate).a)] = dist_[idx(a)] + 1;
          queue.push(edge(mate).a);
        }
      }
    }
    return shortest_ != kInf;
  }

  void augment_from(Vertex root) {
    std::vector<Vertex>& stack = stack_;
    std::vector<EdgeId>& via = via_;
    stack.assign(1, root);
    via.clear();
    while (!stack.empty()) {
      const Vertex a = stack.back();
      const auto incident = adj_.at_a(a);
      std::size_t& pos = cursor_[idx(a)];
      if (pos == incident.size()) {
        dist_[idx(a)] = kInf;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      const EdgeId e = incident[pos++];
      const EdgeId mate = mate_b_[idx(edge(e).b)];
      if (mate == kNoEdge) {
        if (dist_[idx(a)] != shortest_) continue;
        via.push_back(e);
        for (const EdgeId step : via) match(step);
        return;
      }
      const Vertex next = edge(mate).a;
      if (dist_[idx(next)] == dist_[idx(a)] + 1 && dist_[idx(next)] <= shortest_) {
        via.push_back(e);
        stack.push_back(next);
      }
    }
  }

  const DistortionInstance& g_;
  Incidence adj_;
  std::vector<EdgeId> mate_a_, mate_b_;
  std::vector<int> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<Vertex> stack_;
  std::vector<EdgeId> via_;
  int shortest_ = kInf;
};

using Slots = std::array<EdgeId, 2>;

EdgeId other(const Slots& slots, EdgeId e) { return slots[0] == e ? slots[1] : slots[0]; }

}  // namespace

std::vector<EdgeId> perfect_matching(const DistortionInstance& cubic) {
  MatchingSearch search(cubic);
  search.run();
  for (Vertex a = 0; a < cubic.size_a; ++a) {
    if (search.mate_a()[static_cast<std::size_t>(a)] == kNoEdge) {
      throw DecompositionError("no perfect matching: vertex a" + std::to_string(a) + " is unmatched");
    }
  }
  for (Vertex b = 0; b < cubic.size_b; ++b) {
    if (search.mate_b()[static_cast<std::size_t>(b)] == kNoEdge) {
      throw DecompositionError("no perfect matching: vertex b" + std::to_string(b) + " is unmatched");
    }
  }
  std::vector<EdgeId> matching(search.mate_a().begin(), search.mate_a().end());
  std::sort(matching.begin(), matching.end());
  return matching;
}

std::vector<Cycle> cycle_decomposition(const DistortionInstance& cubic, std::span<const EdgeId> matching) {
  const auto na = static_cast<std::size_t>(cubic.size_a);
  const auto nb = static_cast<std::size_t>(cubic.size_b);
  std::vector<char> in_matching(cubic.edges.size(), 0);
  std::vector<int> covered_a(na, 0), covered_b(nb, 0);
  for (const EdgeId e : matching) {
    if (e < 0 || static_cast<std::size_t>(e) >= cubic.edges.size() || in_matching[static_cast<std::size_t>(e)]) {
      throw DecompositionError("matching contains an invalid or repeated edge id " + std::to_string(e));
    }
    in_matching[static_cast<std::size_t>(e)] = 1;
    ++covered_a[static_cast<std::size_t>(cubic.edges[static_cast<std::size_t>(e)].a)];
    ++covered_b[static_cast<std::size_t>(cubic.edges[static_cast<std::size_t>(e)].b)];
  }
  for (std::size_t v = 0; v < na; ++v) {
    if (covered_a[v] != 1) throw DecompositionError("matching covers a" + std::to_string(v) + " " +
                                                    std::to_string(covered_a[v]) + " times");
  }
  for (std::size_t v = 0; v < nb; ++v) {
    if (covered_b[v] != 1) throw DecompositionError("matching covers b" + std::to_string(v) + " " +
                                                    std::to_string(covered_b[v]) + " times");
  }

  std::vector<Slots> slot_a(na, Slots{kNoEdge, kNoEdge});
  std::vector<Slots> slot_b(nb, Slots{kNoEdge, kNoEdge});
  std::vector<int> fill_a(na, 0), fill_b(nb, 0);
  for (std::size_t id = 0; id < cubic.edges.size(); ++id) {
    if (in_matching[id]) continue;
    const Edge& e = cubic.edges[id];
    const auto a = static_cast<std::size_t>(e.a);
    const auto b = static_cast<std::size_t>(e.b);
    if (fill_a[a] == 2) throw DecompositionError("remainder is not 2-regular at a" + std::to_string(a));
    if (fill_b[b] == 2) throw DecompositionError("remainder is not 2-regular at b" + std::to_string(b));
    slot_a[a][static_cast<std::size_t>(fill_a[a]++)] = static_cast<EdgeId>(id);
    slot_b[b][static_cast<std::size_t>(fill_b[b]++)] = static_cast<EdgeId>(id);
  }
  for (std::size_t v = 0; v < na; ++v) {
    if (fill_a[v] != 2) throw DecompositionError("remainder is not 2-regular at a" + std::to_string(v));
  }
  for (std::size_t v = 0; v < nb; ++v) {
    if (fill_b[v] != 2) throw DecompositionError("remainder is not 2-regular at b" + std::to_string(v));
  }

  std::vector<Cycle> cycles;
  std::vector<char> visited(na, 0);
  for (std::size_t start = 0; start < na; ++start) {
    if (visited[start]) continue;
    Cycle cycle;
    auto a = static_cast<Vertex>(start);
    EdgeId e = slot_a[start][0];
    do {
      visited[static_cast<std::size_t>(a)] = 1;
      cycle.vertices.push_back(a);
      cycle.edges.push_back(e);
      const Vertex b = cubic.edges[static_cast<std::size_t>(e)].b;
      cycle.vertices.push_back(b);
      const EdgeId f = other(slot_b[static_cast<std::size_t>(b)], e);
      cycle.edges.push_back(f);
      a = cubic.edges[static_cast<std::size_t>(f)].a;
      e = other(slot_a[static_cast<std::size_t>(a)], f);
    } while (a != static_cast<Vertex>(start));
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Decomposition decompose(const DistortionInstance& cubic) {
  Decomposition out;
  out.matching = perfect_matching(cubic);
  out.matched_at_a.assign(static_cast<std::size_t>(cubic.size_a), kNoEdge);
  out.matched_at_b.assign(static_cast<std::size_t>(cubic.size_b), kNoEdge);
  for (const EdgeId e : out.matching) {
    out.matched_at_a[static_cast<std::size_t>(cubic.edges[static_cast<std::size_t>(e)].a)] = e;
    out.matched_at_b[static_cast<std::size_t>(cubic.edges[static_cast<std::size_t>(e)].b)] = e;
  }
  out.cycles = cycle_decomposition(cubic, out.matching);
  return out;
}

}  // namespace distcol
