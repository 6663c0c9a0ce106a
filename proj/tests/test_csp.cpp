#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "twsep/bounds.hpp"
#include "twsep/csp.hpp"
#include "twsep/error.hpp"

using namespace twsep;
using namespace twsep::testing;

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void check_stats(const CspInstance& inst, const SolveStats& st) {
  CHECK(st.witness.has_value() == st.satisfiable);
  if (st.witness) CHECK(satisfies(inst, *st.witness));
}

}  // namespace

TEST_CASE("constraint tables") {
  const auto ne = ConstraintTable::not_equal(3);
  CHECK_FALSE(ne.allows(1, 1));
  CHECK(ne.allows(0, 2));
  const ConstraintTable lt(2, {0, 1, 0, 0});  // row < col
  CHECK(lt.allows(0, 1));
  CHECK_FALSE(lt.transposed().allows(0, 1));
  CHECK(lt.transposed().allows(1, 0));
  CHECK(lt.transposed().transposed() == lt);
}

TEST_CASE("constraint file parsing") {
  const Graph g = Graph::with_vertices(3, {{1, 2}, {2, 3}});
  const auto alldiff = parse_constraints(g, "c x\nd 3\nalldiff\n");
  CHECK(alldiff.domain_size == 3);
  CHECK(alldiff.constraints.size() == 2);
  CHECK_FALSE(alldiff.allows(1, 2, 2, 2));

  const auto tables = parse_constraints(g, "d 2\nt 1 2 0100\nt 3 2 0 1 0 0\n");
  // v1 < v2
  CHECK(tables.allows(1, 0, 2, 1));
  CHECK_FALSE(tables.allows(1, 1, 2, 0));
  // given as (3,2): v3 < v2
  CHECK(tables.allows(3, 0, 2, 1));
  CHECK(tables.allows(2, 1, 3, 0));
  CHECK_FALSE(tables.allows(2, 0, 3, 1));

  std::ostringstream out;
  write_constraints(out, tables);
  const auto back = parse_constraints(g, out.str());
  CHECK(back.constraints == tables.constraints);

  CHECK_THROWS_AS(parse_constraints(g, "alldiff\n"), FormatError);
  CHECK_THROWS_AS(parse_constraints(g, "d 2\nt 1 2 0100\n"), FormatError);          // missing table
  CHECK_THROWS_AS(parse_constraints(g, "d 2\nt 1 2 010\nt 2 3 0100\n"), FormatError);  // size
  CHECK_THROWS_AS(parse_constraints(g, "d 2\nt 1 3 0100\nt 1 2 0100\nt 2 3 0100\n"),
                  FormatError);  // non-edge
  CHECK_THROWS_AS(parse_constraints(g, "d 2\nalldiff\nt 1 2 0100\n"), FormatError);
  CHECK_THROWS_AS(parse_constraints(g, "d 0\nalldiff\n"), FormatError);
}

TEST_CASE("plain backtracking on fig1") {
  const CspInstance d2 = make_alldiff(fig1(), 2);
  const CspInstance d3 = make_alldiff(fig1(), 3);
  CHECK_FALSE(brute_force_satisfiable(d2));
  CHECK(brute_force_satisfiable(d3));
  const auto s2 = solve_backtrack(d2);
  CHECK_FALSE(s2.satisfiable);
  CHECK(s2.cache_entries == 0);
  const auto s3 = solve_backtrack(d3);
  CHECK(s3.satisfiable);
  check_stats(d3, s3);

  std::ifstream in(data_path("alldiff_d3.csp"));
  REQUIRE(in);
  CHECK(parse_constraints(fig1(), in).constraints == d3.constraints);
}

TEST_CASE("single variable") {
  const CspInstance one = make_alldiff(Graph::with_vertices(1, {}), 1);
  const auto st = solve_backtrack(one);
  CHECK(st.satisfiable);
  CHECK(st.node_expansions == 1);
  CHECK(st.witness == Assignment{0});
}

TEST_CASE("order validation") {
  const CspInstance inst = make_alldiff(fig1(), 3);
  const std::vector<Vertex> bad{1, 2, 3};
  CHECK_THROWS_AS(solve_backtrack(inst, bad), PermutationError);
  CHECK_THROWS_AS(solve_with_separator(inst, VertexSet{11}, false), MembershipError);
}

TEST_CASE("exhaustive mode visits more but agrees") {
  const CspInstance inst = make_alldiff(fig1(), 3);
  const auto first = solve_backtrack(inst, SearchMode::kFirstSolution);
  const auto all = solve_backtrack(inst, SearchMode::kExhaustive);
  CHECK(first.satisfiable == all.satisfiable);
  CHECK(all.node_expansions > first.node_expansions);
  CHECK(first.witness == all.witness);
}

TEST_CASE("separator solver on fig1") {
  for (int d : {2, 3, 4}) {
    CAPTURE(d);
    const CspInstance inst = make_alldiff(fig1(), d);
    for (bool recurse : {false, true}) {
      for (auto mode : {SearchMode::kFirstSolution, SearchMode::kExhaustive}) {
        for (const VertexSet& s : {kFig1S, kFig1SPrime}) {
          const auto st = solve_with_separator(inst, s, recurse, mode);
          CHECK(st.satisfiable == (d >= 3));
          check_stats(inst, st);
        }
      }
    }
  }
}

TEST_CASE("cache keys on the three-vertex separator") {
  const int d = 3;
  const auto st = solve_with_separator(make_alldiff(fig1(), d), kFig1SPrime, false,
                                       SearchMode::kExhaustive);
  CHECK(st.satisfiable);
  std::vector<VertexSet> keys;
  for (const auto& c : st.caches) {
    CHECK(c.level == 0);
    keys.push_back(c.key);
    CHECK(c.peak_entries <= ipow(d, c.key.size()));
  }
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<VertexSet>{VertexSet{3}, VertexSet{3, 5, 8}, VertexSet{5},
                                       VertexSet{8}});
}

TEST_CASE("recursive caching on the four-vertex separator stays linear") {
  for (int d = 3; d <= 6; ++d) {
    CAPTURE(d);
    const auto st = solve_with_separator(make_alldiff(fig1(), d), kFig1S, true,
                                         SearchMode::kExhaustive);
    CHECK(st.satisfiable);
    CHECK(st.cache_entries <= static_cast<std::uint64_t>(4 * d));
    for (const auto& c : st.caches) {
      if (c.level == 0) CHECK(c.key.size() == 1);
      // what is left after fixing the conditioned prefix
      CHECK(c.key.minus(c.conditioned_on).size() <= 1);
    }
  }
}

TEST_CASE("agreement with backtracking on random instances") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 9;
    const int d = 2 + trial % 3;
    const Graph g = random_graph(n, 0.35, rng);
    const CspInstance inst = random_csp(g, d, 0.6, rng);
    const VertexSet s = random_subset(g, rng, 0.4);
    const bool truth = brute_force_satisfiable(inst);
    const auto plain = solve_backtrack(inst);
    CHECK(plain.satisfiable == truth);
    check_stats(inst, plain);
    for (bool recurse : {false, true}) {
      const auto st = solve_with_separator(inst, s, recurse);
      CHECK(st.satisfiable == truth);
      check_stats(inst, st);
      const auto fill = fill_in(g, s);
      for (const auto& c : st.caches) {
        if (c.level == 0) {
          CHECK(std::find(fill.attachment_sets.begin(), fill.attachment_sets.end(), c.key) !=
                fill.attachment_sets.end());
        }
        CHECK(c.peak_entries <= ipow(d, c.key.size()));
      }
    }
  }
}

TEST_CASE("separator choices at the extremes") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(7, 0.4, rng);
    const CspInstance inst = random_csp(g, 3, 0.6, rng);
    const bool truth = brute_force_satisfiable(inst);
    for (bool recurse : {false, true}) {
      CHECK(solve_with_separator(inst, VertexSet{}, recurse).satisfiable == truth);
      CHECK(solve_with_separator(inst, g.vertices(), recurse).satisfiable == truth);
    }
  }
}

TEST_CASE("recursive solver beats backtracking on fig1 for d >= 3") {
  for (int d = 3; d <= 5; ++d) {
    const CspInstance inst = make_alldiff(fig1(), d);
    const auto plain = solve_backtrack(inst, SearchMode::kExhaustive);
    const auto rec = solve_with_separator(inst, kFig1S, true, SearchMode::kExhaustive);
    CHECK(rec.operations() < plain.operations());
  }
}

TEST_CASE("growth exponent fitting") {
  const std::vector<double> xs{1, 2, 4, 8};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(5 * x * x * x);
  CHECK(fit_loglog_slope(xs, ys) == doctest::Approx(3.0));

  const std::vector<int> two{2, 3};
  const auto family = [](int d) { return make_alldiff(fig1(), d); };
  const auto solver = [](const CspInstance& i) { return solve_backtrack(i); };
  CHECK_THROWS_AS(fit_growth_exponent(family, solver, two), DegenerateDataError);
  const std::vector<int> repeated{2, 2, 3};
  CHECK_THROWS_AS(fit_growth_exponent(family, solver, repeated), DegenerateDataError);
  const std::vector<int> ds{2, 3, 4};
  const auto peak = [](const CspInstance& i) { return solve_backtrack(i); };
  CHECK_THROWS_AS(fit_growth_exponent(family, peak, ds, GrowthMetric::kPeakCache),
                  DegenerateDataError);
  const double slope = fit_growth_exponent(family, [](const CspInstance& i) {
    return solve_with_separator(i, kFig1SPrime, false, SearchMode::kExhaustive);
  }, ds);
  CHECK(std::isfinite(slope));
  CHECK(slope > 0);
}
