#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/functionals.hpp"
#include "nlcut/generators.hpp"

using namespace nlcut;

namespace {

RVector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  RVector x(n);
  for (auto& v : x) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return x;
}

RVector scaled(const RVector& x, const Rational& t) {
  RVector y = x;
  for (auto& v : y) v *= t;
  return y;
}

// Minimum of sum mu_i |x_i - t|, attained at some coordinate.
Rational brute_median_deviation(const Graph& g, const RVector& x) {
  Rational best = -1;
  for (const auto& t : x) {
    Rational s = 0;
    for (int i = 0; i < g.n(); ++i) s += g.mu(i) * abs_value(x[i] - t);
    if (best < 0 || s < best) best = s;
  }
  return best;
}

}  // namespace

TEST(Functionals, VariationExamples) {
  EXPECT_EQ(total_variation(star_triangle_graph(2), RVector{1, 1, -1, -1, 0}), 8);
  EXPECT_EQ(signless_variation(complete_graph(3), RVector{1, -1, 0}), 2);
  EXPECT_EQ(total_variation(path_graph(4), RVector{1, 1, 0, 0}), 1);
}

TEST(Functionals, MedianExamples) {
  Interval k2 = median_interval(path_graph(2), RVector{1, -1});
  EXPECT_EQ(k2.lo, -1);
  EXPECT_EQ(k2.hi, 1);
  Interval p3 = median_interval(path_graph(3), RVector{0, 1, 1});
  EXPECT_EQ(p3.lo, 1);
  EXPECT_EQ(p3.hi, 1);
  EXPECT_EQ(median_deviation(path_graph(3), RVector{1, 0, 0}), 1);
  EXPECT_EQ(median_deviation(path_graph(4), RVector{1, 1, 0, 0}), 3);
}

TEST(Functionals, MedianIntervalMinimizesDeviation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected_graph(6, 0.5, trial + 1);
    RVector x = random_vector(rng, 6);
    Interval m = median_interval(g, x);
    Rational dev = brute_median_deviation(g, x);
    EXPECT_EQ(median_deviation(g, x), dev);
    for (const Rational& t : {m.lo, m.hi, Rational((m.lo + m.hi) / 2)}) {
      Rational s = 0;
      for (int i = 0; i < 6; ++i) s += g.mu(i) * abs_value(x[i] - t);
      EXPECT_EQ(s, dev);
    }
    if (m.lo <= 0 && m.hi >= 0) EXPECT_EQ(dev, l1_mu_norm(g, x));
  }
}

TEST(Functionals, Norms) {
  RVector x{Rational(-3, 2), 1, 0};
  EXPECT_EQ(sup_norm(x), Rational(3, 2));
  EXPECT_EQ(l1_norm(x), Rational(5, 2));
  EXPECT_EQ(l1_mu_norm(path_graph(3), x), Rational(7, 2));
  SupNormSets s = sup_norm_sets(RVector{2, -2, 1, 2});
  EXPECT_EQ(s.plus.ids(), (std::vector<int>{0, 3}));
  EXPECT_EQ(s.minus.ids(), (std::vector<int>{1}));
  EXPECT_EQ(s.zero.ids(), (std::vector<int>{2}));
}

TEST(Functionals, OneHomogeneity) {
  std::mt19937_64 rng(3);
  Graph g = random_connected_graph(7, 0.4, 5);
  SetPairFunction f = [&](VertexSet a, VertexSet b) -> Rational { return cut_weight(g, a, b) + vol(g, a); };
  for (int trial = 0; trial < 40; ++trial) {
    RVector x = random_vector(rng, 7);
    Rational t(trial % 7 - 3, 1 + trial % 3);
    t.canonicalize();
    Rational at = abs_value(t);
    RVector y = scaled(x, t);
    EXPECT_EQ(total_variation(g, y), at * total_variation(g, x));
    EXPECT_EQ(signless_variation(g, y), at * signless_variation(g, x));
    EXPECT_EQ(median_deviation(g, y), at * median_deviation(g, x));
    EXPECT_EQ(sup_norm(y), at * sup_norm(x));
    EXPECT_EQ(l1_mu_norm(g, y), at * l1_mu_norm(g, x));
    if (t > 0) EXPECT_EQ(lovasz_extension(f, y), t * lovasz_extension(f, x));
  }
}

TEST(Functionals, SupNormDominatesVariations) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_graph(6, 0.5, trial + 2);
    RVector x = random_vector(rng, 6);
    Rational lhs = g.twice_edge_weight() * sup_norm(x);
    Rational rhs = total_variation(g, x) + signless_variation(g, x);
    EXPECT_GE(lhs, rhs);
    SupNormSets s = sup_norm_sets(x);
    VertexSet top = s.plus | s.minus;
    bool cover = true;
    for (const auto& e : g.edges()) cover &= top.contains(e.u) || top.contains(e.v);
    if (cover) EXPECT_EQ(lhs, rhs);
  }
}

TEST(Functionals, LovaszExample) {
  Graph k3 = complete_graph(3);
  SetPairFunction f = [&](VertexSet a, VertexSet b) -> Rational { return cut_weight(k3, a, b); };
  EXPECT_EQ(lovasz_extension(f, RVector{2, 1, -1}), 2);
}

TEST(Functionals, LovaszMatchesSetFunctionOnTernaryVectors) {
  for (int n : {3, 5, 7}) {
    Graph g = random_connected_graph(n, 0.5, n);
    SetPairFunction f = [&](VertexSet a, VertexSet b) -> Rational {
      return 2 * cut_weight(g, a, b) + boundary(g, a | b) - vol(g, b);
    };
    bf::for_each_pair(n, [&](std::uint64_t a, std::uint64_t b) {
      EXPECT_EQ(lovasz_extension(f, bf::pm_vector(n, a, b)), f(VertexSet(a), VertexSet(b)));
    });
  }
}

TEST(Functionals, RatioExamples) {
  EXPECT_EQ(ratio_objective(ProblemId::cheeger_tv, path_graph(4), RVector{1, 1, 0, 0}), Rational(1, 3));
  EXPECT_EQ(ratio_objective(ProblemId::maxcut_ratio, star_triangle_graph(2), RVector{1, 1, -1, -1, 0}),
            Rational(2, 3));
  try {
    (void)ratio_objective(ProblemId::cheeger_tv, path_graph(3), RVector{1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_denominator);
  }
}

TEST(Functionals, ProblemNames) {
  for (ProblemId id : all_problems()) EXPECT_EQ(parse_problem(to_string(id)), id);
  EXPECT_EQ(parse_problem("maxcut"), ProblemId::maxcut_ratio);
  EXPECT_TRUE(is_maximization(ProblemId::anti));
  EXPECT_FALSE(is_maximization(ProblemId::cheeger_tv));
  EXPECT_THROW(parse_problem("nope"), Error);
}
