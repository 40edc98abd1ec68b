#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "nlcut/errors.hpp"
#include "nlcut/generators.hpp"
#include "nlcut/graph_io.hpp"
#include "nlcut/linear_spectrum.hpp"

using namespace nlcut;

namespace {

Eigen::VectorXd reference_spectrum(const Graph& g) {
  const int n = g.n();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : g.edges()) {
    double w = e.w.get_d() / std::sqrt(g.degree(e.u).get_d() * g.degree(e.v).get_d());
    m(e.u, e.v) -= w;
    m(e.v, e.u) -= w;
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
}

void expect_values(const Graph& g, const std::vector<double>& want) {
  Spectrum s = normalized_laplacian_spectrum(g);
  ASSERT_EQ(s.eigenvalues.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(s.eigenvalues[i], want[i], 1e-12);
}

}  // namespace

TEST(LinearSpectrum, SmallExamples) {
  expect_values(path_graph(2), {0, 2});
  expect_values(complete_graph(3), {0, 1.5, 1.5});
  expect_values(cycle_graph(4), {0, 1, 1, 2});
}

TEST(LinearSpectrum, ClosedFormsOnTinyGraphs) {
  // Paths have eigenvalues 1 - cos(pi j / (n - 1)); stars have {0, 1, ..., 1, 2}.
  expect_values(path_graph(3), {0, 1, 2});
  expect_values(path_graph(4), {0, 0.5, 1.5, 2});
  expect_values(star_graph(4), {0, 1, 1, 2});
  expect_values(complete_graph(4), {0, 4.0 / 3, 4.0 / 3, 4.0 / 3});
}

TEST(LinearSpectrum, MatchesReferenceSolver) {
  std::vector<Graph> graphs{petersen_graph(), star_triangle_graph(3), parse_graph("0 1 1/3\n1 2 5\n2 0 2\n2 3 1\n")};
  for (int seed = 1; seed <= 6; ++seed) graphs.push_back(random_connected_graph(10, 0.35, seed));
  for (const Graph& g : graphs) {
    Spectrum s = normalized_laplacian_spectrum(g, true);
    Eigen::VectorXd ref = reference_spectrum(g);
    for (int i = 0; i < g.n(); ++i) EXPECT_NEAR(s.eigenvalues[i], ref(i), 1e-10);
    EXPECT_LT(s.residual_bound, 1e-9);
    ASSERT_TRUE(s.eigenvectors.has_value());
    const auto& v = *s.eigenvectors;
    for (int a = 0; a < g.n(); ++a) {
      for (int b = 0; b < g.n(); ++b) {
        double dot = 0;
        for (int i = 0; i < g.n(); ++i) dot += v[i][a] * v[i][b];
        EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-10);
      }
    }
  }
}

TEST(LinearSpectrum, IsolatedVertexRejected) {
  try {
    (void)normalized_laplacian_spectrum(parse_graph("n 3\n0 1\n"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::isolated_vertex);
  }
}

TEST(Inequalities, ForestModeOnPath) {
  InequalityOptions opts;
  opts.kinds = {InequalityKind::forest};
  auto reports = inequality_suite(path_graph(6), opts);
  int identity = 0, sandwich = 0;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.holds) << r.name << " k=" << r.k.value_or(0);
    if (r.name == "forest_identity") ++identity;
    if (r.name == "forest_dual_cheeger") ++sandwich;
  }
  EXPECT_GE(identity, 3);
  EXPECT_GE(sandwich, 3);
}

TEST(Inequalities, AllHoldOnSamples) {
  std::vector<Graph> graphs{cycle_graph(5), complete_graph(4), petersen_graph(), star_graph(6),
                            star_triangle_graph(2)};
  for (int seed = 1; seed <= 2; ++seed) graphs.push_back(random_connected_graph(8, 0.4, seed));
  for (const Graph& g : graphs) {
    auto reports = inequality_suite(g);
    EXPECT_FALSE(reports.empty());
    for (const auto& r : reports) {
      EXPECT_TRUE(r.holds) << r.name << " lhs=" << r.lhs << " mid=" << r.mid << " rhs=" << r.rhs;
      EXPECT_LE(r.lhs, r.mid + kSpectralTolerance);
      EXPECT_LE(r.mid, r.rhs + kSpectralTolerance);
    }
  }
}

TEST(Inequalities, CheegerSidesFromOracle) {
  InequalityOptions opts;
  opts.kinds = {InequalityKind::cheeger};
  auto reports = inequality_suite(path_graph(4), opts);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].name, "cheeger");
  EXPECT_EQ(reports[0].lhs_exact, "1/18");
  EXPECT_EQ(reports[0].rhs_exact, "2/3");
}

TEST(Inequalities, MultiplicityBounds) {
  InequalityReport p5 = multiplicity_bounds_check(path_graph(5));
  EXPECT_EQ(p5.lhs, 3);
  EXPECT_EQ(p5.mid, 3);
  EXPECT_TRUE(p5.holds);
  InequalityReport c6 = multiplicity_bounds_check(cycle_graph(6));
  EXPECT_EQ(c6.lhs, 3);
  EXPECT_EQ(c6.mid, 3);
  EXPECT_TRUE(c6.holds);
  InequalityReport c5 = multiplicity_bounds_check(cycle_graph(5));
  EXPECT_EQ(c5.lhs, 2);
  EXPECT_EQ(c5.mid, 3);
  EXPECT_TRUE(c5.holds);
}

TEST(Inequalities, KindNames) {
  for (InequalityKind k : all_inequality_kinds()) EXPECT_EQ(parse_inequality_kind(to_string(k)), k);
  EXPECT_THROW((void)parse_inequality_kind("bogus"), std::exception);
}
