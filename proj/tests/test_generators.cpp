#include <doctest.h>

#include "distcol/engine.hpp"
#include "distcol/errors.hpp"
#include "distcol/generators.hpp"
#include "distcol/serialization.hpp"

using namespace distcol;

TEST_CASE("delay_to_distortion") {
  const DelayInstance di(3, 1, 1, {{0, 0, 0}, {0, 0, 1}, {0, 0, 5}, {0, 0, -1}});
  const DistortionInstance inst = delay_to_distortion(di);
  CHECK(inst.edges[0].distortion == Distortion::identity(4));
  CHECK(inst.edges[1].distortion == Distortion({1, 2, 3, 0}));
  CHECK(inst.edges[2].distortion == inst.edges[1].distortion);
  CHECK(inst.edges[3].distortion == Distortion({3, 0, 1, 2}));
  CHECK(di.edges()[2].delay == 1);
  CHECK(di.edges()[3].delay == 3);
}

TEST_CASE("count_delay_violations") {
  const DelayInstance di(3, 1, 1, {{0, 0, 0}, {0, 0, 1}});
  CHECK(count_delay_violations(di, EdgeColouring(std::vector<Colour>{0, 1})) == 0);
  // f proper at A but 1+0 == 0+1 at B
  CHECK(count_delay_violations(di, EdgeColouring(std::vector<Colour>{1, 0})) == 1);
  CHECK(count_delay_violations(di, EdgeColouring(std::vector<Colour>{2, 2})) == 1);
}

TEST_CASE("random_instance is seeded and deterministic") {
  for (const auto mode : {GeneratorMode::Cubic, GeneratorMode::Subcubic, GeneratorMode::Delay}) {
    CHECK(encode_instance(random_instance(77, 20, 20, mode)) == encode_instance(random_instance(77, 20, 20, mode)));
    CHECK(encode_instance(random_instance(77, 20, 20, mode)) != encode_instance(random_instance(78, 20, 20, mode)));
  }
}

TEST_CASE("SeededRng sequence is pinned") {
  // Frozen from the first run; a change here means generated instances changed.
  SeededRng rng(12345);
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < 6; ++i) draws.push_back(rng.below(1000));
  CHECK(draws == std::vector<std::uint64_t>{346, 521, 285, 954, 996, 45});
}

TEST_CASE("generator modes") {
  const auto cubic = random_instance(5, 30, 30, GeneratorMode::Cubic);
  const Degrees deg = vertex_degrees(cubic);
  for (int x : deg.a) CHECK(x == 3);
  for (int x : deg.b) CHECK(x == 3);

  const auto sub = random_instance(5, 30, 17, GeneratorMode::Subcubic);
  CHECK(sub.size_b == 17);
  CHECK_NOTHROW(sub.validate());
  CHECK_NOTHROW(require_max_degree(sub, 3));
  CHECK(sub.edges.size() < 3 * 17);

  const auto delay = random_instance(5, 12, 12, GeneratorMode::Delay);
  for (const Edge& e : delay.edges) {
    const Colour k = e.distortion.apply(0);
    CHECK(e.distortion == Distortion::shift(k, 4));
  }

  CHECK_THROWS_AS(random_instance(1, 3, 4, GeneratorMode::Cubic), InvalidInstance);
  CHECK(random_instance(1, 0, 0, GeneratorMode::Cubic).edges.empty());
  CHECK_THROWS_AS(parse_generator_mode("quartic"), InvalidInstance);
}

TEST_CASE("solved delay instances meet the delay condition") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DelayInstance di = random_delay_instance(seed, 15, 11);
    CHECK(count_delay_violations(di, solve(delay_to_distortion(di))) == 0);
  }
}
