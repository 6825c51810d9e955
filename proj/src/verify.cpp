#include "fortlib/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fortlib/constructions.hpp"
#include "fortlib/forcing.hpp"
#include "fortlib/forts.hpp"
#include "fortlib/io.hpp"
#include "fortlib/lp.hpp"
#include "fortlib/search.hpp"
#include "fortlib/symmetry.hpp"

namespace fortlib {

namespace {

struct Context {
  VerifyOptions opts;
  std::map<int, Graph> cubes;
  std::map<int, FortCensus> censuses;

  const Graph& cube(int d) {
    auto it = cubes.find(d);
    if (it == cubes.end()) it = cubes.emplace(d, Graph::hypercube(d)).first;
    return it->second;
  }

  const FortCensus& census(int d) {
    auto it = censuses.find(d);
    if (it == censuses.end())
      it = censuses.emplace(d, census_with_cache(cube(d), opts.cache_dir, opts.jobs)).first;
    return it->second;
  }
};

template <class Fn>
void run_claim(std::vector<ClaimResult>& out, const std::string& id, const std::string& name,
               double budget_seconds, Fn&& fn) {
  ClaimResult claim;
  claim.id = id;
  claim.name = name;
  claim.budget_seconds = budget_seconds;
  auto start = std::chrono::steady_clock::now();
  try {
    fn(claim);
  } catch (const std::exception& e) {
    claim.pass = false;
    claim.actual = std::string("error: ") + e.what();
  }
  claim.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && claim.seconds >= budget_seconds) {
    claim.pass = false;
    claim.actual += " (over the " + std::to_string(budget_seconds) + " s budget)";
  }
  out.push_back(std::move(claim));
}

std::string join_counts(const std::vector<std::pair<int, long long>>& items,
                        const std::string& prefix) {
  std::ostringstream os;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) os << " ";
    os << prefix << items[i].first << "=" << items[i].second;
  }
  return os.str();
}

std::string spectrum_string(const std::vector<int>& values) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ",";
    os << values[i];
  }
  os << "}";
  return os.str();
}

uint64_t random_mask(std::mt19937_64& rng, int n) {
  return rng() & ((n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1));
}

void claim_censuses(Context& ctx, ClaimResult& c) {
  std::vector<std::pair<int, long long>> expected{{2, 2}, {3, 14}, {4, 348}};
  std::vector<std::pair<int, long long>> actual;
  for (auto [d, want] : expected)
    actual.emplace_back(d, static_cast<long long>(ctx.census(d).minimal_forts.size()));
  c.expected = join_counts(expected, "Q");
  c.actual = join_counts(actual, "Q");
  c.pass = actual == expected;
}

void claim_minimum_fort_sizes(Context& ctx, ClaimResult& c) {
  std::vector<std::pair<int, long long>> expected, actual;
  for (int d = 2; d <= std::min(6, std::max(4, ctx.opts.max_dim)); ++d) {
    expected.emplace_back(d, d);
    MinimumFort mf = minimum_fort(ctx.cube(d), ctx.opts.budget);
    bool nbhd_is_fort = is_fort(ctx.cube(d), ctx.cube(d).neighborhood(0));
    actual.emplace_back(d, nbhd_is_fort ? mf.size : -1);
  }
  c.expected = join_counts(expected, "Q");
  c.actual = join_counts(actual, "Q");
  c.pass = actual == expected;
}

void claim_minimum_fort_classes(Context& ctx, ClaimResult& c) {
  std::ostringstream want, got;
  bool ok = true;
  std::vector<int> neighborhood_dims{2, 3};
  if (ctx.opts.max_dim >= 5) neighborhood_dims.push_back(5);
  for (int d : neighborhood_dims) {
    const Graph& q = ctx.cube(d);
    auto min_forts = enumerate_forts_of_size(q, d, ctx.opts.budget, ctx.opts.jobs);
    std::set<VertexSet> nbhds;
    for (int v = 0; v < q.order(); ++v) nbhds.insert(q.neighborhood(v));
    std::set<VertexSet> found(min_forts.begin(), min_forts.end());
    want << "Q" << d << "=neighborhoods ";
    bool match = found == nbhds;
    got << "Q" << d << "=" << (match ? "neighborhoods" : "other") << " ";
    ok = ok && match;
  }
  {
    const Graph& q4 = ctx.cube(4);
    auto min_forts = enumerate_forts_of_size(q4, 4, ctx.opts.budget, ctx.opts.jobs);
    auto classes = classify_orbits(4, min_forts);
    want << "Q4=2 classes (16 neighborhoods + 12 antipodal)";
    bool two = classes.size() == 2;
    size_t nbhd_members = 0, antipodal_members = 0;
    if (two) {
      VertexSet antipodal = VertexSet::of(16, {0, 6, 9, 15});
      VertexSet antipodal_canon = canonical_form(4, antipodal).canonical;
      VertexSet nbhd_canon = canonical_form(4, q4.neighborhood(0)).canonical;
      for (const auto& cls : classes) {
        if (cls.canonical == nbhd_canon) nbhd_members = cls.members.size();
        if (cls.canonical == antipodal_canon) antipodal_members = cls.members.size();
      }
    }
    bool match = two && nbhd_members == 16 && antipodal_members == 12;
    got << "Q4=" << classes.size() << " classes (" << nbhd_members << " neighborhoods + "
        << antipodal_members << " antipodal)";
    ok = ok && match;
  }
  c.expected = want.str();
  c.actual = got.str();
  c.pass = ok;
}

void claim_fractional_zf(Context& ctx, ClaimResult& c) {
  std::vector<std::pair<int, std::string>> expected{{2, "2"}, {3, "8/3"}, {4, "4"}};
  std::ostringstream want, got;
  bool ok = true;
  for (auto& [d, value] : expected) {
    want << "Q" << d << "=" << value << " ";
    LpSolution sol = solve_covering_lp({ctx.cube(d).order(), ctx.census(d).minimal_forts});
    Rational dual_sum;
    for (const auto& y : sol.dual) dual_sum += y;
    bool certified = dual_sum == sol.value && sol.status == LpStatus::optimal;
    got << "Q" << d << "=" << sol.value.str() << (certified ? "" : "(uncertified)") << " ";
    ok = ok && certified && sol.value == Rational::parse(value) &&
         fractional_zf(ctx.cube(d), ctx.census(d)) == sol.value;
  }
  c.expected = want.str() + "with matching dual certificates";
  c.actual = got.str() + (ok ? "with matching dual certificates" : "");
  c.pass = ok;
}

void claim_fort_number(Context& ctx, ClaimResult& c) {
  std::vector<std::pair<int, long long>> expected{{2, 2}, {3, 2}, {4, 4}}, actual;
  std::ostringstream want, got;
  for (auto [d, value] : expected) {
    actual.emplace_back(d, fort_number(ctx.cube(d), ctx.census(d)).value);
    want << "ft(Q" << d << ")=" << value << " ";
    got << "ft(Q" << d << ")=" << actual.back().second << " ";
  }
  c.expected = want.str();
  c.actual = got.str();
  c.pass = actual == expected;
}

void claim_zero_forcing(Context& ctx, ClaimResult& c) {
  std::ostringstream want, got;
  bool ok = true;
  for (int d = 1; d <= 4; ++d) {
    int z_expected = 1 << (d - 1);
    want << "Z(Q" << d << ")=" << z_expected << " ";
    ZfsResult z = min_zero_forcing_number(ctx.cube(d), ctx.census(d));
    long long smaller = count_zfs_of_size(ctx.cube(d), z.z - 1, ctx.opts.budget, ctx.opts.jobs);
    got << "Z(Q" << d << ")=" << z.z << (smaller == 0 ? "" : "!") << " ";
    ok = ok && z.z == z_expected && smaller == 0;
  }
  c.expected = want.str() + "with no smaller forcing set";
  c.actual = got.str() + (ok ? "with no smaller forcing set" : "");
  c.pass = ok;
}

void claim_pt_spectrum(Context& ctx, ClaimResult& c) {
  std::map<int, std::vector<int>> expected{{2, {1}}, {3, {1, 2}}, {4, {1, 2, 3, 4}}};
  std::ostringstream want, got;
  bool ok = true;
  for (auto& [d, spectrum] : expected) {
    want << "Q" << d << "=" << spectrum_string(spectrum) << " ";
    PtSpectrum pt = pt_spectrum(ctx.cube(d), ctx.opts.budget, ctx.opts.jobs);
    got << "Q" << d << "=" << spectrum_string(pt.spectrum) << " ";
    bool full_interval = pt.pt_min == 1 && pt.pt_max == (d >= 2 ? (1 << (d - 2)) : 1) &&
                         static_cast<int>(pt.spectrum.size()) == pt.pt_max;
    ok = ok && pt.spectrum == spectrum && full_interval;
  }
  c.expected = want.str() + "(full intervals up to 2^(d-2))";
  c.actual = got.str();
  c.pass = ok;
}

void claim_five_parameters(Context& ctx, ClaimResult& c) {
  std::ostringstream want, got;
  bool ok = true;
  for (int k = 1; k <= 2; ++k) {
    int d = 1 << k;
    long long value = 1ll << (d - k);
    want << "Q" << d << ": ft=Z*=rho=gamma=gamma_t=" << value << " ";
    const Graph& q = ctx.cube(d);
    long long ft = fort_number(q, ctx.census(d)).value;
    Rational zstar = fractional_zf(q, ctx.census(d));
    long long rho = open_packing_number(q).value;
    long long gamma = domination_number(q).value;
    long long gamma_t = total_domination_number(q).value;
    got << "Q" << d << ": ft=" << ft << " Z*=" << zstar.str() << " rho=" << rho
        << " gamma=" << gamma << " gamma_t=" << gamma_t << " ";
    ok = ok && ft == value && zstar == Rational(value) && rho == value && gamma == value &&
         gamma_t == value;
  }
  c.expected = want.str();
  c.actual = got.str();
  c.pass = ok;
}

void claim_failed_zf(Context& ctx, ClaimResult& c) {
  std::ostringstream want, got;
  bool ok = true;
  for (int d = 2; d <= 3; ++d) {
    int expected = (1 << d) - d;
    want << "F(Q" << d << ")=" << expected << " ";
    // direct brute force: largest subset whose closure is not everything
    const Graph& q = ctx.cube(d);
    int n = q.order();
    int direct = -1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      if (!is_zero_forcing_set(q, s)) direct = std::max(direct, s.count());
    }
    got << "F(Q" << d << ")=" << direct << " ";
    ok = ok && direct == expected;
  }
  {
    want << "F(Q4)=12";
    const Graph& q4 = ctx.cube(4);
    int via_fort = failed_zf_number(q4, ctx.opts.budget);
    bool failed_at_12 = false, forced_above = true;
    for (int size = 12; size <= 16; ++size)
      for (KSubsetScanner sc(16, size); !sc.done(); sc.advance()) {
        bool zfs = is_zero_forcing_set(q4, sc.current());
        if (size == 12 && !zfs) failed_at_12 = true;
        if (size > 12 && !zfs) forced_above = false;
      }
    bool match = via_fort == 12 && failed_at_12 && forced_above;
    got << "F(Q4)=" << via_fort << (match ? "" : " (direct scan disagrees)");
    ok = ok && match;
  }
  c.expected = want.str() + " (direct scans agree)";
  c.actual = got.str();
  c.pass = ok;
}

void claim_constructions(Context& ctx, ClaimResult& c) {
  const Graph& q3 = ctx.cube(3);
  const Graph& q1 = ctx.cube(1);
  const Graph& q4 = ctx.cube(4);
  VertexSet q1_fort = VertexSet::of(2, {0, 1});
  bool ok = true;
  std::ostringstream got;

  // worked example: N(000) x V(Q1) is a size-6 minimal fort of Q4
  ConstructionResult a = product_fort(q3, q3.neighborhood(0), q1, q1_fort);
  VertexSet a_expected = VertexSet::of(16, {2, 3, 4, 5, 8, 9});
  bool a_ok = a.result == a_expected && a.guarantee == FortGuarantee::minimal_fort;
  ok = ok && a_ok;
  got << "product" << (a_ok ? "=exact" : "=WRONG") << " ";

  // worked example: parity construction hits the antipodal minimum fort of Q4
  ConstructionResult b = bipartite_parity_fort(q3, VertexSet::of(8, {0, 3, 4, 7}), q1, q1_fort,
                                               /*require_minimal=*/false);
  VertexSet b_expected = VertexSet::of(16, {0, 6, 9, 15});
  bool b_ok = b.result == b_expected && b.guarantee == FortGuarantee::minimal_fort;
  ok = ok && b_ok;
  got << "parity" << (b_ok ? "=exact" : "=WRONG") << " ";

  // worked example: a factor with adjacent members only yields a fort
  ConstructionResult f = product_fort(q3, VertexSet::of(8, {0, 3, 4, 7}), q1, q1_fort);
  VertexSet f_expected = VertexSet::of(16, {0, 1, 6, 7, 8, 9, 14, 15});
  bool f_ok = f.result == f_expected && f.guarantee == FortGuarantee::fort &&
              !is_minimal_fort(q4, f.result);
  ok = ok && f_ok;
  got << "non-minimal" << (f_ok ? "=flagged" : "=WRONG") << " ";

  // sweep every construction over the Q3 census and close under automorphisms
  std::vector<VertexSet> direct;
  std::set<VertexSet> sweep;
  for (int v = 0; v < q4.order(); ++v) sweep.insert(q4.neighborhood(v));
  for (const auto& fort : ctx.census(3).minimal_forts) {
    ConstructionResult p = product_fort(q3, fort, q1, q1_fort);
    direct.push_back(p.result);
    if (p.guarantee == FortGuarantee::minimal_fort)
      for (const auto& image : orbit_of(4, p.result)) sweep.insert(image);
    for (bool swap_parts : {false, true}) {
      try {
        ConstructionResult r =
            bipartite_parity_fort(q3, fort, q1, q1_fort, /*require_minimal=*/true, swap_parts);
        direct.push_back(r.result);
        if (r.guarantee == FortGuarantee::minimal_fort)
          for (const auto& image : orbit_of(4, r.result)) sweep.insert(image);
      } catch (const precondition_error&) {
        // neighborhood forts have no internal neighbors; the theorem does not apply
      }
    }
  }
  std::set<VertexSet> census4(ctx.census(4).minimal_forts.begin(),
                              ctx.census(4).minimal_forts.end());
  bool sweep_ok = sweep.size() >= 60 && sweep.size() < 348;
  for (const auto& s : sweep) sweep_ok = sweep_ok && census4.count(s) > 0;
  ok = ok && sweep_ok;
  got << "sweep=" << sweep.size() << " ";

  long long orbit6 = canonical_form(3, VertexSet::of(8, {2, 3, 4, 5})).orbit_size;
  long long orbit32 = canonical_form(4, a_expected).orbit_size;
  long long orbit12 = canonical_form(4, b_expected).orbit_size;
  bool orbits_ok = orbit6 == 6 && orbit32 == 32 && orbit12 == 12;
  ok = ok && orbits_ok;
  got << "orbits=" << orbit6 << "/" << orbit32 << "/" << orbit12 << " ";

  VertexSet unreachable = VertexSet::of(16, {0, 1, 5, 6, 8, 11, 14, 15});
  bool unreachable_ok = sweep.count(unreachable) == 0 &&
                        std::find(direct.begin(), direct.end(), unreachable) == direct.end() &&
                        census4.count(unreachable) > 0;
  ok = ok && unreachable_ok;
  got << "uncovered-minimal-fort=" << (unreachable_ok ? "outside sweep" : "IN SWEEP");

  c.expected =
      "product=exact parity=exact non-minimal=flagged sweep in [60,348) orbits=6/32/12 "
      "uncovered-minimal-fort=outside sweep";
  c.actual = got.str();
  c.pass = ok;
}

void claim_zfs_lifting(Context& ctx, ClaimResult& c) {
  std::ostringstream got;
  bool ok = true;
  for (int d = 2; d <= 3; ++d) {
    const Graph& q = ctx.cube(d);
    const Graph& up = ctx.cube(d + 1);
    int z = 1 << (d - 1);
    auto sets = enumerate_minimum_zfs(q, z, ctx.opts.budget, ctx.opts.jobs);
    long long lifted_ok = 0;
    for (const auto& s : sets) {
      LiftResult lift = lift_zfs(q, s);
      if (lift.lifted.count() == 2 * z && is_zero_forcing_set(up, lift.lifted) &&
          propagation_time(up, lift.lifted) == propagation_time(q, s))
        ++lifted_ok;
    }
    ok = ok && lifted_ok == static_cast<long long>(sets.size()) && !sets.empty();
    got << "Q" << d << ": " << lifted_ok << "/" << sets.size() << " lifts preserve pt ";
  }
  c.expected = "every lift is a minimum zero forcing set with unchanged propagation time";
  c.actual = got.str();
  c.pass = ok;
}

void claim_property_suites(Context& ctx, ClaimResult& c) {
  std::mt19937_64 rng(ctx.opts.seed);
  long long failures = 0, checks = 0;

  // closure monotonicity and idempotence on random subset pairs
  for (int d = 2; d <= 5; ++d) {
    const Graph& q = ctx.cube(d);
    int n = q.order();
    for (int trial = 0; trial < 100; ++trial) {
      uint64_t t_mask = random_mask(rng, n);
      uint64_t s_mask = t_mask & random_mask(rng, n);
      VertexSet s = VertexSet::from_mask(n, s_mask), t = VertexSet::from_mask(n, t_mask);
      ForcingTrace ts = closure(q, s), tt = closure(q, t);
      ++checks;
      if (!ts.final.is_subset_of(tt.final)) ++failures;
      ++checks;
      if (!closure(q, ts.final).steps.empty()) ++failures;
    }
  }

  // duality and cover equivalence over every subset of Q2 and Q3
  for (int d = 2; d <= 3; ++d) {
    const Graph& q = ctx.cube(d);
    int n = q.order();
    const auto& forts = ctx.census(d).minimal_forts;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      VertexSet s = VertexSet::from_mask(n, mask);
      ++checks;
      if (is_fort(q, s) != is_stalled(q, s.complement())) ++failures;
      bool hits_all = true;
      for (const auto& fort : forts) hits_all = hits_all && s.intersects(fort);
      ++checks;
      if (is_zero_forcing_set(q, s) != hits_all) ++failures;
    }
  }
  {  // random-subset duality spot check one dimension up
    const Graph& q4 = ctx.cube(4);
    for (int trial = 0; trial < 2000; ++trial) {
      VertexSet s = VertexSet::from_mask(16, random_mask(rng, 16));
      ++checks;
      if (is_fort(q4, s) != is_stalled(q4, s.complement())) ++failures;
    }
  }

  // minimality oracle against the brute-force subset scan, every fort of Q2 and Q3
  for (int d = 2; d <= 3; ++d) {
    const Graph& q = ctx.cube(d);
    int n = q.order();
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
      VertexSet f = VertexSet::from_mask(n, mask);
      if (!is_fort(q, f)) continue;
      bool brute_minimal = true;
      for (uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
        if (is_fort(q, VertexSet::from_mask(n, sub))) {
          brute_minimal = false;
          break;
        }
      ++checks;
      if (is_minimal_fort(q, f) != brute_minimal) ++failures;
    }
  }

  // canonical forms are invariant under random group elements
  for (int d = 3; d <= 4; ++d) {
    std::vector<VertexSet> samples;
    if (d == 3) samples = ctx.census(3).minimal_forts;
    for (int trial = 0; trial < 20; ++trial)
      samples.push_back(VertexSet::from_mask(1 << d, random_mask(rng, 1 << d)));
    std::vector<SignedPermutation> group;
    for_each_signed_permutation(d, [&](const SignedPermutation& g) { group.push_back(g); });
    for (const auto& s : samples) {
      VertexSet canon = canonical_form(d, s).canonical;
      for (int trial = 0; trial < 100; ++trial) {
        const SignedPermutation& g = group[rng() % group.size()];
        ++checks;
        if (canonical_form(d, g.apply(s)).canonical != canon) ++failures;
      }
    }
  }

  c.expected = "0 failures";
  c.actual = std::to_string(failures) + " failures in " + std::to_string(checks) + " checks";
  c.pass = failures == 0;
}

}  // namespace

std::vector<ClaimResult> run_verification_suite(const VerifyOptions& opts) {
  Context ctx{opts, {}, {}};
  std::vector<ClaimResult> results;
  run_claim(results, "1", "minimal-fort censuses", 10,
            [&](ClaimResult& c) { claim_censuses(ctx, c); });
  run_claim(results, "2", "minimum fort size equals the dimension", 300,
            [&](ClaimResult& c) { claim_minimum_fort_sizes(ctx, c); });
  run_claim(results, "3", "minimum-fort classification", 120,
            [&](ClaimResult& c) { claim_minimum_fort_classes(ctx, c); });
  run_claim(results, "4", "fractional zero forcing numbers", 5,
            [&](ClaimResult& c) { claim_fractional_zf(ctx, c); });
  run_claim(results, "5", "fort numbers", 30,
            [&](ClaimResult& c) { claim_fort_number(ctx, c); });
  run_claim(results, "6", "zero forcing numbers with exhaustive confirmation", 120,
            [&](ClaimResult& c) { claim_zero_forcing(ctx, c); });
  run_claim(results, "7", "propagation time spectra over all minimum sets", 180,
            [&](ClaimResult& c) { claim_pt_spectrum(ctx, c); });
  run_claim(results, "8", "five-parameter equality at power-of-two dimensions", 60,
            [&](ClaimResult& c) { claim_five_parameters(ctx, c); });
  run_claim(results, "9", "failed zero forcing numbers", 60,
            [&](ClaimResult& c) { claim_failed_zf(ctx, c); });
  run_claim(results, "10", "product and parity fort constructions", 60,
            [&](ClaimResult& c) { claim_constructions(ctx, c); });
  run_claim(results, "11", "zero-forcing-set lifting preserves propagation time", 60,
            [&](ClaimResult& c) { claim_zfs_lifting(ctx, c); });
  run_claim(results, "12", "property suites under a fixed seed", 0,
            [&](ClaimResult& c) { claim_property_suites(ctx, c); });
  return results;
}

bool all_pass(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace fortlib
