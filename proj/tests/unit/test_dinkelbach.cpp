#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "nlcut/dinkelbach.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/generators.hpp"

using namespace nlcut;

namespace {

void expect_monotone(const DinkelbachTrace& t) {
  bool maximize = is_maximization(t.problem);
  for (std::size_t i = 1; i < t.iterations.size(); ++i) {
    const Rational& prev = t.iterations[i - 1].r;
    const Rational& cur = t.iterations[i].r;
    if (maximize) EXPECT_GE(cur, prev);
    else EXPECT_LE(cur, prev);
  }
}

std::size_t distinct_ternary_values(ProblemId id, const Graph& g) {
  std::set<Rational> seen;
  bf::for_each_pair(g.n(), [&](std::uint64_t a, std::uint64_t b) {
    RatioParts p = ratio_parts(id, g, bf::pm_vector(g.n(), a, b));
    if (p.denominator != 0) seen.insert(p.numerator / p.denominator);
  });
  return seen.size();
}

}  // namespace

TEST(Dinkelbach, Examples) {
  RVector x0{1, 0, 0, 0};
  DinkelbachTrace p4 = solve(ratio_problem(ProblemId::cheeger_tv), path_graph(4), x0);
  EXPECT_TRUE(p4.converged);
  EXPECT_EQ(p4.final.value, Rational(1, 3));
  expect_monotone(p4);
  EXPECT_EQ(solve(ratio_problem(ProblemId::maxcut_ratio), star_triangle_graph(2)).final.value, Rational(2, 3));
  EXPECT_EQ(solve(ratio_problem(ProblemId::dual), complete_graph(3)).final.value, Rational(1, 3));
  EXPECT_EQ(solve(ratio_problem(ProblemId::anti), complete_graph(3)).final.value, Rational(1, 2));
}

TEST(Dinkelbach, MatchesBruteForceOptimum) {
  std::vector<Graph> graphs{path_graph(5), cycle_graph(5), complete_graph(4), star_triangle_graph(2)};
  for (int seed = 1; seed <= 3; ++seed) graphs.push_back(random_connected_graph(6, 0.45, seed));
  for (const Graph& g : graphs) {
    const std::pair<ProblemId, Rational> expected[] = {
        {ProblemId::cheeger_tv, bf::cheeger(g)},        {ProblemId::cheeger_new, bf::cheeger(g)},
        {ProblemId::dual, 1 - bf::dual_cheeger(g)},     {ProblemId::mdual, 1 - bf::modified_dual_cheeger(g)},
        {ProblemId::maxcut_ratio, bf::maxcut_ratio(g)}, {ProblemId::anti, bf::anti_cheeger(g)}};
    for (const auto& [id, value] : expected) {
      DinkelbachTrace t = solve(ratio_problem(id), g);
      EXPECT_TRUE(t.converged);
      EXPECT_TRUE(t.exact);
      EXPECT_EQ(t.final.value, value) << to_string(id);
      expect_monotone(t);
      EXPECT_LE(t.iterations.size(), distinct_ternary_values(id, g) + 1);
      for (const auto& step : t.iterations) EXPECT_TRUE(in_omega(ratio_problem(id).domain, step.x));
      EXPECT_TRUE(stationary_check(id, g, t.final.value, t.iterations.back().x)) << to_string(id);
    }
  }
}

TEST(Dinkelbach, LocalFlipIsSound) {
  for (int seed = 1; seed <= 3; ++seed) {
    Graph g = random_connected_graph(8, 0.4, seed);
    for (ProblemId id : all_problems()) {
      DinkelbachOptions opts;
      opts.inner = InnerSolver::local_flip;
      opts.seed = seed;
      DinkelbachTrace t = solve(ratio_problem(id), g, std::nullopt, opts);
      EXPECT_FALSE(t.exact);
      expect_monotone(t);
      const RVector& x = t.iterations.back().x;
      EXPECT_EQ(t.final.value, ratio_objective(id, g, x));
      DinkelbachTrace again = solve(ratio_problem(id), g, std::nullopt, opts);
      EXPECT_EQ(again.final.value, t.final.value);
    }
  }
}

TEST(Dinkelbach, OmegaProjection) {
  RVector x = project_to_omega(DomainKind::nonconstant_2cut, RVector{3, 1, 1});
  EXPECT_TRUE(in_omega(DomainKind::nonconstant_2cut, x));
  EXPECT_EQ(x[0] + x[1], 0);
  EXPECT_TRUE(in_omega(DomainKind::nonzero, project_to_omega(DomainKind::nonzero, RVector{2, -2, 0})));
  EXPECT_FALSE(in_omega(DomainKind::nonzero, RVector{1, 1}));
  EXPECT_TRUE(in_omega(DomainKind::nonconstant_3cut, RVector{Rational(1, 2), Rational(1, 2), 0}));
  try {
    (void)project_to_omega(DomainKind::nonconstant_2cut, RVector{2, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_in_omega);
  }
}

TEST(Dinkelbach, StationaryCheck) {
  Graph p4 = path_graph(4);
  RVector x{Rational(1, 4), Rational(1, 4), Rational(-1, 4), Rational(-1, 4)};
  EXPECT_TRUE(stationary_check(ProblemId::cheeger_tv, p4, Rational(1, 3), x));
  EXPECT_FALSE(stationary_check(ProblemId::cheeger_tv, p4, Rational(1, 2), x));
  try {
    (void)stationary_check(ProblemId::cheeger_tv, p4, 0, RVector{1, 1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::nonconstant_required);
  }
}

TEST(Dinkelbach, Errors) {
  Graph split(4, {{0, 1, 1}, {2, 3, 1}});
  try {
    (void)solve(ratio_problem(ProblemId::cheeger_tv), split);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::disconnected);
  }
  DinkelbachOptions opts;
  opts.cap = 5;
  try {
    (void)solve(ratio_problem(ProblemId::maxcut_ratio), path_graph(6), std::nullopt, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_large);
  }
  EXPECT_EQ(parse_inner("exact"), InnerSolver::exact_enum);
  EXPECT_EQ(parse_inner("flip"), InnerSolver::local_flip);
}

TEST(Dinkelbach, DeterministicAcrossWorkers) {
  Graph g = random_connected_graph(8, 0.4, 2);
  DinkelbachOptions a, b;
  b.workers = 3;
  for (ProblemId id : all_problems()) {
    DinkelbachTrace ta = solve(ratio_problem(id), g, std::nullopt, a);
    DinkelbachTrace tb = solve(ratio_problem(id), g, std::nullopt, b);
    ASSERT_EQ(ta.iterations.size(), tb.iterations.size());
    for (std::size_t i = 0; i < ta.iterations.size(); ++i) EXPECT_EQ(ta.iterations[i].x, tb.iterations[i].x);
  }
}
