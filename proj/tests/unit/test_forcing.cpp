#include <doctest.h>

#include <random>

#include "fortlib/forcing.hpp"
#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"

using namespace fortlib;

TEST_CASE("single forcing steps") {
  Graph q2 = Graph::hypercube(2);
  auto [forces, after] = forcing_step(q2, VertexSet::of(4, {0, 1}));
  REQUIRE(forces.size() == 2);
  CHECK(forces[0] == Force{0, 2});
  CHECK(forces[1] == Force{1, 3});
  CHECK(after == VertexSet::full(4));

  auto [fixed, unchanged] = forcing_step(q2, VertexSet::full(4));
  CHECK(fixed.empty());
  CHECK(unchanged == VertexSet::full(4));

  Graph q3 = Graph::hypercube(3);
  auto [none, same] = forcing_step(q3, VertexSet::of(8, {0}));
  CHECK(none.empty());
  CHECK(same == VertexSet::of(8, {0}));
}

TEST_CASE("the smallest-index forcer wins ties") {
  Graph path = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  auto [forces, after] = forcing_step(path, VertexSet::of(3, {0, 2}));
  REQUIRE(forces.size() == 1);
  CHECK(forces[0] == Force{0, 1});
  CHECK(after == VertexSet::full(3));
}

TEST_CASE("closures") {
  Graph q3 = Graph::hypercube(3);

  ForcingTrace fast = closure(q3, VertexSet::of(8, {0, 2, 3, 1}));
  CHECK(fast.propagation_steps() == 1);
  CHECK(fast.final == VertexSet::full(8));

  ForcingTrace slow = closure(q3, VertexSet::of(8, {0, 2, 5, 1}));
  CHECK(slow.propagation_steps() == 2);
  CHECK(slow.final == VertexSet::full(8));

  ForcingTrace stuck = closure(q3, VertexSet::of(8, {1, 2, 4}));
  CHECK(stuck.propagation_steps() == 0);
  CHECK(stuck.final == VertexSet::of(8, {1, 2, 4}));
}

TEST_CASE("zero forcing set membership") {
  Graph q2 = Graph::hypercube(2);
  CHECK(is_zero_forcing_set(q2, VertexSet::of(4, {0, 1})));
  CHECK(!is_zero_forcing_set(q2, VertexSet::of(4, {0, 3})));
  CHECK(is_zero_forcing_set(q2, VertexSet::full(4)));
  Graph q3 = Graph::hypercube(3);
  CHECK(is_zero_forcing_set(q3, VertexSet::full(8)));
}

TEST_CASE("propagation times of known 4-cube sets") {
  Graph q4 = Graph::hypercube(4);
  CHECK(propagation_time(q4, VertexSet::of(16, {6, 7, 0, 4, 5, 3, 1, 2})) == 1);
  CHECK(propagation_time(q4, VertexSet::of(16, {11, 10, 0, 4, 5, 3, 1, 2})) == 2);
  CHECK(propagation_time(q4, VertexSet::of(16, {3, 13, 9, 1, 10, 0, 4, 2})) == 3);
  CHECK(propagation_time(q4, VertexSet::of(16, {15, 13, 9, 1, 10, 0, 4, 2})) == 4);
}

TEST_CASE("propagation time rejects stalled sets") {
  Graph q3 = Graph::hypercube(3);
  try {
    propagation_time(q3, VertexSet::of(8, {0}));
    FAIL("expected not_zero_forcing_error");
  } catch (const not_zero_forcing_error& e) {
    CHECK(e.stalled_final == VertexSet::of(8, {0}));
  }
}

TEST_CASE("stalled sets") {
  Graph q3 = Graph::hypercube(3);
  CHECK(is_stalled(q3, VertexSet::of(8, {1, 2, 4}).complement()));
  Graph q2 = Graph::hypercube(2);
  CHECK(!is_stalled(q2, VertexSet::of(4, {0, 1})));
  CHECK(is_stalled(q2, VertexSet(4)));
  CHECK(!is_stalled(q2, VertexSet::full(4)));
}

TEST_CASE("traces are internally consistent on random inputs") {
  std::mt19937_64 rng(20250808);
  for (int d = 2; d <= 4; ++d) {
    Graph q = Graph::hypercube(d);
    int n = q.order();
    for (int trial = 0; trial < 200; ++trial) {
      VertexSet start = VertexSet::from_mask(n, rng() & ((1u << n) - 1));
      ForcingTrace trace = closure(q, start);
      VertexSet seen = start;
      for (const auto& step : trace.steps) {
        VertexSet before = seen;
        for (const auto& force : step) {
          REQUIRE(before.test(force.forcer));
          REQUIRE(!before.test(force.forced));
          REQUIRE((q.neighborhood(force.forcer) - before).count() == 1);
          REQUIRE(!seen.test(force.forced));  // forced exactly once, never in initial
          seen.set(force.forced);
        }
      }
      REQUIRE(seen == trace.final);
      REQUIRE(closure(q, trace.final).steps.empty());
    }
  }
}

TEST_CASE("closure is monotone in the starting set") {
  std::mt19937_64 rng(424242);
  for (int d = 2; d <= 5; ++d) {
    Graph q = Graph::hypercube(d);
    int n = q.order();
    for (int trial = 0; trial < 100; ++trial) {
      uint64_t big = rng() & ((uint64_t{1} << n) - 1);
      uint64_t small = big & rng();
      VertexSet s = VertexSet::from_mask(n, small), t = VertexSet::from_mask(n, big);
      REQUIRE(closure(q, s).final.is_subset_of(closure(q, t).final));
    }
  }
}

TEST_CASE("forts are exactly the complements of stalled sets") {
  for (int d = 2; d <= 3; ++d) {
    Graph q = Graph::hypercube(d);
    int n = q.order();
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      VertexSet f = VertexSet::from_mask(n, mask);
      REQUIRE(is_fort(q, f) == is_stalled(q, f.complement()));
    }
  }
}

TEST_CASE("a set forces if and only if it meets every minimal fort") {
  for (int d = 2; d <= 3; ++d) {
    Graph q = Graph::hypercube(d);
    int n = q.order();
    FortCensus census = enumerate_minimal_forts(q);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      bool hits_all = true;
      for (const auto& fort : census.minimal_forts)
        if (!s.intersects(fort)) {
          hits_all = false;
          break;
        }
      REQUIRE(is_zero_forcing_set(q, s) == hits_all);
    }
  }
}
