#include <doctest.h>

#include "fortlib/errors.hpp"
#include "fortlib/lp.hpp"
#include "fortlib/search.hpp"

using namespace fortlib;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(1), BigInt(-2)).den() == 2);
  CHECK(Rational(BigInt(1), BigInt(-2)).num() == -1);
  CHECK(Rational::parse("8/3").str() == "8/3");
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("4").str() == "4");
  CHECK(Rational::parse("0/7").str() == "0");

  Rational a = Rational::parse("1/3"), b = Rational::parse("1/6");
  CHECK((a + b).str() == "1/2");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b).str() == "2");
  CHECK(-a == Rational::parse("-1/3"));
  CHECK(a > b);
  CHECK(b < Rational(1));
  CHECK(Rational(2) == Rational(BigInt(4), BigInt(2)));

  CHECK_THROWS_AS(a / Rational(0), invalid_input);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), invalid_input);
}

TEST_CASE("covering LP basics") {
  LpSolution single = solve_covering_lp({3, {VertexSet::of(3, {0, 1, 2})}});
  CHECK(single.status == LpStatus::optimal);
  CHECK(single.value == Rational(1));

  LpSolution empty = solve_covering_lp({3, {}});
  CHECK(empty.value == Rational(0));
  for (const auto& w : empty.weights) CHECK(w.is_zero());

  CHECK_THROWS_AS(solve_covering_lp({3, {VertexSet(3)}}), invalid_input);
}

TEST_CASE("covering LP with two disjoint rows needs weight two") {
  // the two minimal forts of the 4-cycle
  CoveringLp lp{4, {VertexSet::of(4, {1, 2}), VertexSet::of(4, {0, 3})}};
  LpSolution sol = solve_covering_lp(lp);
  CHECK(sol.value == Rational(2));
  Rational dual_total;
  for (const auto& y : sol.dual) dual_total += y;
  CHECK(dual_total == sol.value);
}

TEST_CASE("hypercube fractional zero forcing numbers are 2^d / d") {
  for (int d = 2; d <= 4; ++d) {
    Graph q = Graph::hypercube(d);
    FortCensus census = enumerate_minimal_forts(q);
    Rational expected(BigInt(1 << d), BigInt(d));
    CHECK(fractional_zf(q, census) == expected);

    LpSolution sol = solve_covering_lp({q.order(), census.minimal_forts});
    CHECK(sol.value == expected);

    // the uniform 1/d weighting is feasible and already optimal
    Rational uniform(BigInt(1), BigInt(d));
    for (const auto& row : census.minimal_forts) {
      Rational row_sum;
      row.for_each([&](int) { row_sum += uniform; });
      REQUIRE(row_sum >= Rational(1));
    }
    CHECK(uniform * Rational(q.order()) == sol.value);

    // exact feasibility of the returned weights, with zero tolerance
    for (const auto& row : census.minimal_forts) {
      Rational row_sum;
      row.for_each([&](int v) { row_sum += sol.weights[static_cast<size_t>(v)]; });
      REQUIRE(row_sum >= Rational(1));
    }

    // dual certificate: multipliers >= 0, column sums <= 1, equal objective
    Rational dual_total;
    std::vector<Rational> column(static_cast<size_t>(q.order()));
    for (size_t i = 0; i < sol.dual.size(); ++i) {
      REQUIRE(sol.dual[i] >= Rational(0));
      dual_total += sol.dual[i];
      census.minimal_forts[i].for_each(
          [&](int v) { column[static_cast<size_t>(v)] += sol.dual[i]; });
    }
    CHECK(dual_total == sol.value);
    for (const auto& c : column) REQUIRE(c <= Rational(1));
  }
}

TEST_CASE("fractional zero forcing rejects incomplete censuses") {
  Graph q3 = Graph::hypercube(3);
  FortCensus census = enumerate_minimal_forts(q3);
  census.complete = false;
  CHECK_THROWS_AS(fractional_zf(q3, census), invalid_input);
}

TEST_CASE("fort number, fractional relaxation, and zero forcing sandwich") {
  for (int d = 2; d <= 4; ++d) {
    Graph q = Graph::hypercube(d);
    FortCensus census = enumerate_minimal_forts(q);
    Rational ft(fort_number(q, census).value);
    Rational zstar = fractional_zf(q, census);
    Rational z(min_zero_forcing_number(q, census).z);
    CHECK(ft <= zstar);
    CHECK(zstar <= z);
  }
}
