#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "fortlib/errors.hpp"
#include "fortlib/forts.hpp"
#include "fortlib/graph.hpp"
#include "fortlib/io.hpp"
#include "fortlib/symmetry.hpp"

using namespace fortlib;

namespace {

std::vector<SignedPermutation> whole_group(int d) {
  std::vector<SignedPermutation> group;
  for_each_signed_permutation(d, [&](const SignedPermutation& g) { group.push_back(g); });
  return group;
}

}  // namespace

TEST_CASE("group order and axioms") {
  for (int d = 1; d <= 4; ++d) {
    auto group = whole_group(d);
    CHECK(static_cast<long long>(group.size()) == signed_permutation_group_order(d));

    std::mt19937_64 rng(7);
    SignedPermutation id = SignedPermutation::identity(d);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& a = group[rng() % group.size()];
      const auto& b = group[rng() % group.size()];
      SignedPermutation ab = a.compose(b);
      for (int v = 0; v < (1 << d); ++v)
        REQUIRE(ab.apply_vertex(v) == a.apply_vertex(b.apply_vertex(v)));
      SignedPermutation inv = a.inverse();
      for (int v = 0; v < (1 << d); ++v) {
        REQUIRE(a.compose(inv).apply_vertex(v) == v);
        REQUIRE(inv.compose(a).apply_vertex(v) == v);
      }
      REQUIRE(id.compose(a).perm == a.perm);
      REQUIRE(id.compose(a).mask == a.mask);
    }
  }
}

TEST_CASE("identity fixes every vertex") {
  for (int d = 1; d <= 4; ++d) {
    SignedPermutation id = SignedPermutation::identity(d);
    for (int v = 0; v < (1 << d); ++v) REQUIRE(id.apply_vertex(v) == v);
  }
}

TEST_CASE("every element preserves hypercube adjacency") {
  for (int d = 1; d <= 4; ++d) {
    Graph q = Graph::hypercube(d);
    for_each_signed_permutation(d, [&](const SignedPermutation& g) {
      for (auto [u, v] : q.edge_list()) REQUIRE(q.adjacent(g.apply_vertex(u), g.apply_vertex(v)));
    });
  }
  {
    Graph q5 = Graph::hypercube(5);
    std::mt19937_64 rng(11);
    auto group = whole_group(5);
    auto edges = q5.edge_list();
    for (int trial = 0; trial < 200; ++trial) {
      const auto& g = group[rng() % group.size()];
      auto [u, v] = edges[rng() % edges.size()];
      REQUIRE(q5.adjacent(g.apply_vertex(u), g.apply_vertex(v)));
    }
  }
}

TEST_CASE("signed permutations are all automorphisms of the 3-cube") {
  Graph q3 = Graph::hypercube(3);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> adjacency_preserving;
  do {
    bool ok = true;
    for (int u = 0; u < 8 && ok; ++u)
      for (int v = u + 1; v < 8 && ok; ++v)
        if (q3.adjacent(u, v) != q3.adjacent(perm[u], perm[v])) ok = false;
    if (ok) adjacency_preserving.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(adjacency_preserving.size() == 48);  // 2^3 * 3!

  std::set<std::vector<int>> signed_maps;
  for_each_signed_permutation(3, [&](const SignedPermutation& g) {
    std::vector<int> map(8);
    for (int v = 0; v < 8; ++v) map[static_cast<size_t>(v)] = g.apply_vertex(v);
    signed_maps.insert(map);
  });
  CHECK(signed_maps == adjacency_preserving);
}

TEST_CASE("canonical forms and orbit sizes") {
  CanonicalForm six = canonical_form(3, VertexSet::of(8, {2, 3, 4, 5}));
  CHECK(six.orbit_size == 6);

  CanonicalForm thirty_two = canonical_form(4, VertexSet::of(16, {2, 3, 4, 5, 8, 9}));
  CHECK(thirty_two.orbit_size == 32);

  CanonicalForm twelve = canonical_form(4, VertexSet::of(16, {5, 6, 9, 10}));
  CHECK(twelve.orbit_size == 12);

  CanonicalForm empty = canonical_form(3, VertexSet(8));
  CHECK(empty.canonical == VertexSet(8));
  CHECK(empty.orbit_size == 1);

  CHECK(orbit_of(4, VertexSet::of(16, {5, 6, 9, 10})).size() == 12);
  CHECK_THROWS_AS(canonical_form(9, VertexSet(1 << 9)), resource_limit);
  CHECK_THROWS_AS(canonical_form(3, VertexSet(4)), invalid_input);
}

TEST_CASE("automorphic set pairs") {
  Graph q3 = Graph::hypercube(3);
  CHECK(are_automorphic(3, q3.neighborhood(0), q3.neighborhood(7)));

  Graph q4 = Graph::hypercube(4);
  CHECK(!are_automorphic(4, q4.neighborhood(0), VertexSet::of(16, {0, 15, 6, 9})));

  CHECK(!are_automorphic(3, VertexSet::of(8, {0, 2, 3, 1}), VertexSet::of(8, {0, 2, 5, 1})));
}

TEST_CASE("orbit classification") {
  Graph q4 = Graph::hypercube(4);
  auto minimum_forts = enumerate_forts_of_size(q4, 4);
  auto classes = classify_orbits(4, minimum_forts);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].members.size() + classes[1].members.size() == 28);
  bool sixteen_and_twelve =
      (classes[0].members.size() == 16 && classes[1].members.size() == 12) ||
      (classes[0].members.size() == 12 && classes[1].members.size() == 16);
  CHECK(sixteen_and_twelve);

  Graph q3 = Graph::hypercube(3);
  auto q3_classes = classify_orbits(3, enumerate_forts_of_size(q3, 3));
  REQUIRE(q3_classes.size() == 1);
  CHECK(q3_classes[0].members.size() == 8);
}

TEST_CASE("the 4-cube minimal fort classification matches the committed data file") {
  Graph q4 = Graph::hypercube(4);
  FortCensus census = enumerate_minimal_forts(q4, 4);
  Json regenerated = orbit_classes_to_json(classify_orbits(4, census.minimal_forts));

  std::ifstream in(std::string(FORTLIB_DATA_DIR) + "/q4_minimal_fort_orbits.json");
  REQUIRE(in.good());
  Json committed = Json::parse(in);
  CHECK(regenerated == committed);

  long long total = 0;
  for (const auto& cls : committed) total += cls.at("members").size();
  CHECK(total == 348);
}

TEST_CASE("canonical forms are orbit invariants") {
  std::mt19937_64 rng(20250808);
  for (int d = 3; d <= 4; ++d) {
    auto group = whole_group(d);
    int n = 1 << d;
    std::vector<VertexSet> samples;
    if (d == 3)
      for (const auto& f : enumerate_minimal_forts(Graph::hypercube(3)).minimal_forts)
        samples.push_back(f);
    for (int trial = 0; trial < 10; ++trial)
      samples.push_back(VertexSet::from_mask(n, rng() & ((1u << n) - 1)));
    for (const auto& s : samples) {
      VertexSet canon = canonical_form(d, s).canonical;
      CHECK(canon <= s);
      for (int trial = 0; trial < 100; ++trial) {
        const auto& g = group[rng() % group.size()];
        REQUIRE(canonical_form(d, g.apply(s)).canonical == canon);
      }
    }
  }
}

TEST_CASE("fort-ness is preserved by the group") {
  Graph q3 = Graph::hypercube(3);
  FortCensus census = enumerate_minimal_forts(q3);
  auto group = whole_group(3);
  std::mt19937_64 rng(99);
  for (const auto& f : census.minimal_forts)
    for (int trial = 0; trial < 20; ++trial) {
      const auto& g = group[rng() % group.size()];
      VertexSet image = g.apply(f);
      REQUIRE(is_fort(q3, image));
      REQUIRE(is_minimal_fort(q3, image));
    }
}
