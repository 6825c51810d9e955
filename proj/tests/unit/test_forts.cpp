#include <doctest.h>

#include <set>

#include "fortlib/errors.hpp"
#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"

using namespace fortlib;

TEST_CASE("fort membership and violation reports") {
  Graph q3 = Graph::hypercube(3);
  CHECK(is_fort(q3, VertexSet::of(8, {1, 2, 4})));
  CHECK(is_fort(q3, VertexSet::of(8, {0, 3, 7, 4})));
  Graph q4 = Graph::hypercube(4);
  CHECK(is_fort(q4, VertexSet::of(16, {0, 15, 6, 9})));

  FortCheck bad = check_fort(q3, VertexSet::of(8, {0, 4}));
  CHECK(!bad.fort);
  REQUIRE(bad.violations.size() == 4);  // |N(u) ∪ N(v)| - 2 = 2d - 2
  CHECK(bad.violations[0] == Violation{1, 0});
  CHECK(bad.violations[1] == Violation{2, 0});
  CHECK(bad.violations[2] == Violation{5, 4});
  CHECK(bad.violations[3] == Violation{6, 4});

  FortCheck empty = check_fort(q3, VertexSet(8));
  CHECK(!empty.fort);
  CHECK(empty.empty_input);
  CHECK(empty.violations.empty());

  CHECK(is_fort(q3, VertexSet::full(8)));
}

TEST_CASE("minimal fort checks") {
  Graph q3 = Graph::hypercube(3);
  CHECK(is_minimal_fort(q3, q3.neighborhood(0)));

  Graph q4 = Graph::hypercube(4);
  CHECK(!is_minimal_fort(q4, VertexSet::of(16, {0, 1, 6, 7, 14, 15, 8, 9})));
  CHECK(is_minimal_fort(q4, VertexSet::of(16, {0, 1, 5, 6, 8, 11, 14, 15})));

  CHECK_THROWS_AS(is_minimal_fort(q3, VertexSet::of(8, {0, 4})), invalid_input);
}

namespace {

bool brute_force_minimal(const Graph& q, uint64_t mask) {
  for (uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
    if (is_fort(q, VertexSet::from_mask(q.order(), sub))) return false;
  return true;
}

}  // namespace

TEST_CASE("the minimality criterion agrees with brute-force subset scans") {
  for (int d = 2; d <= 3; ++d) {
    Graph q = Graph::hypercube(d);
    int n = q.order();
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
      VertexSet f = VertexSet::from_mask(n, mask);
      if (!is_fort(q, f)) continue;
      REQUIRE(is_minimal_fort(q, f) == brute_force_minimal(q, mask));
    }
  }
}

TEST_CASE("minimal fort censuses") {
  Graph q2 = Graph::hypercube(2);
  FortCensus census2 = enumerate_minimal_forts(q2);
  CHECK(census2.complete);
  REQUIRE(census2.minimal_forts.size() == 2);
  CHECK(census2.minimal_forts[0] == VertexSet::of(4, {1, 2}));
  CHECK(census2.minimal_forts[1] == VertexSet::of(4, {0, 3}));

  Graph q3 = Graph::hypercube(3);
  FortCensus census3 = enumerate_minimal_forts(q3);
  CHECK(census3.minimal_forts.size() == 14);
  CHECK(census3.by_size == std::map<int, long long>{{3, 8}, {4, 6}});

  Graph q4 = Graph::hypercube(4);
  FortCensus census4 = enumerate_minimal_forts(q4, /*jobs=*/4);
  CHECK(census4.minimal_forts.size() == 348);

  // every member re-verifies; masks strictly increase, so there are no duplicates
  for (const auto& census : {census3, census4}) {
    const Graph& q = census.minimal_forts[0].universe() == 8 ? q3 : q4;
    for (size_t i = 0; i < census.minimal_forts.size(); ++i) {
      REQUIRE(is_fort(q, census.minimal_forts[i]));
      REQUIRE(is_minimal_fort(q, census.minimal_forts[i]));
      if (i) REQUIRE(census.minimal_forts[i - 1] < census.minimal_forts[i]);
    }
  }

  CHECK(enumerate_minimal_forts(q4, 3).minimal_forts == census4.minimal_forts);
  CHECK_THROWS_AS(enumerate_minimal_forts(Graph::hypercube(5)), resource_limit);

  // census members up to size 6 also survive the brute-force subset scan
  for (const auto& f : census4.minimal_forts)
    if (f.count() <= 6) REQUIRE(brute_force_minimal(q4, f.low_word()));
}

TEST_CASE("size-limited fort scans") {
  Graph q5 = Graph::hypercube(5);
  CHECK(enumerate_forts_of_size(q5, 4).empty());

  auto q5_minimum = enumerate_forts_of_size(q5, 5, kDefaultCandidateBudget, /*jobs=*/4);
  std::set<VertexSet> neighborhoods;
  for (int v = 0; v < 32; ++v) neighborhoods.insert(q5.neighborhood(v));
  CHECK(q5_minimum.size() == 32);
  CHECK(std::set<VertexSet>(q5_minimum.begin(), q5_minimum.end()) == neighborhoods);

  Graph q4 = Graph::hypercube(4);
  auto q4_minimum = enumerate_forts_of_size(q4, 4);
  CHECK(q4_minimum.size() == 28);  // 16 neighborhoods + 12 antipodal 4-sets
  int nbhd = 0, antipodal = 0;
  for (const auto& f : q4_minimum) {
    bool is_nbhd = false;
    for (int v = 0; v < 16 && !is_nbhd; ++v) is_nbhd = f == q4.neighborhood(v);
    if (is_nbhd) {
      ++nbhd;
      continue;
    }
    ++antipodal;
    // all pairwise distances even, with exactly two antipodal pairs
    auto members = f.members();
    int distance4_pairs = 0;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        int dist = *q4.distance(members[i], members[j]);
        REQUIRE((dist == 2 || dist == 4));
        if (dist == 4) ++distance4_pairs;
      }
    REQUIRE(distance4_pairs == 2);
  }
  CHECK(nbhd == 16);
  CHECK(antipodal == 12);

  CHECK_THROWS_AS(enumerate_forts_of_size(q5, 5, /*budget=*/10), resource_limit);
  CHECK_THROWS_AS(enumerate_forts_of_size(q5, 0), invalid_input);
}

TEST_CASE("minimum forts") {
  MinimumFort q3_min = minimum_fort(Graph::hypercube(3));
  CHECK(q3_min.size == 3);
  CHECK(q3_min.witness == VertexSet::of(8, {1, 2, 4}));

  MinimumFort k2_min = minimum_fort(Graph::from_edge_list(2, {{0, 1}}));
  CHECK(k2_min.size == 2);
  CHECK(k2_min.witness == VertexSet::of(2, {0, 1}));

  CHECK_THROWS_AS(minimum_fort(Graph::hypercube(3), /*budget=*/2), resource_limit);
}

TEST_CASE("minimum forts avoid adjacent vertices and straddle no bipartition") {
  for (int d = 2; d <= 5; ++d) {
    Graph q = Graph::hypercube(d);
    auto minimum = enumerate_forts_of_size(q, d);
    auto parts = q.bipartition();
    for (const auto& f : minimum) {
      f.for_each([&](int v) { REQUIRE(!q.neighborhood(v).intersects(f)); });
      if (d != 4)
        REQUIRE((f.is_subset_of(parts->part0) || f.is_subset_of(parts->part1)));
    }
  }
}

TEST_CASE("unions of disjoint minimal forts are forts") {
  Graph q3 = Graph::hypercube(3);
  FortCensus census = enumerate_minimal_forts(q3);
  for (size_t i = 0; i < census.minimal_forts.size(); ++i)
    for (size_t j = i + 1; j < census.minimal_forts.size(); ++j) {
      const VertexSet& a = census.minimal_forts[i];
      const VertexSet& b = census.minimal_forts[j];
      if (!a.intersects(b)) REQUIRE(is_fort(q3, a | b));
    }
}

TEST_CASE("failed zero forcing numbers") {
  CHECK(failed_zf_number(Graph::hypercube(2)) == 2);
  CHECK(failed_zf_number(Graph::hypercube(3)) == 5);
  CHECK(failed_zf_number(Graph::hypercube(4)) == 12);
  CHECK(failed_zf_number(Graph::from_edge_list(2, {{0, 1}})) == 0);
}
