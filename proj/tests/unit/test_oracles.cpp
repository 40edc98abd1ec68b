#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/generators.hpp"
#include "nlcut/graph_params.hpp"
#include "nlcut/oracles.hpp"

using namespace nlcut;

namespace {

std::vector<Graph> sample_graphs() {
  std::vector<Graph> gs{path_graph(4), cycle_graph(5), complete_graph(4), star_graph(5),
                        star_triangle_graph(2), cycle_graph(6)};
  for (int seed = 1; seed <= 4; ++seed) gs.push_back(random_connected_graph(6 + seed % 2, 0.4, seed));
  return gs;
}

Rational ternary_opt(ProblemId id, const Graph& g) {
  bool maximize = is_maximization(id);
  Rational best;
  bool found = false;
  bf::for_each_pair(g.n(), [&](std::uint64_t a, std::uint64_t b) {
    RatioParts p = ratio_parts(id, g, bf::pm_vector(g.n(), a, b));
    if (p.denominator == 0) return;
    Rational r = p.numerator / p.denominator;
    if (!found || (maximize ? r > best : r < best)) best = r, found = true;
  });
  return best;
}

}  // namespace

TEST(Oracles, CheegerExamples) {
  CutCertificate p4 = cheeger(path_graph(4));
  EXPECT_EQ(p4.value, Rational(1, 3));
  ASSERT_EQ(p4.sets.size(), 2u);
  EXPECT_EQ(p4.sets[0].ids(), (std::vector<int>{0, 1}));
  EXPECT_EQ(cheeger(cycle_graph(4)).value, Rational(1, 2));
  EXPECT_EQ(cheeger(path_graph(2)).value, 1);
}

TEST(Oracles, MaxcutFamilyExamples) {
  EXPECT_EQ(maxcut(complete_graph(3)).value, Rational(2, 3));
  EXPECT_EQ(maxcut(petersen_graph()).value, Rational(4, 5));
  EXPECT_EQ(dual_cheeger(complete_graph(3)).value, Rational(2, 3));
  EXPECT_EQ(dual_cheeger(cycle_graph(5)).value, Rational(4, 5));
  EXPECT_EQ(anti_cheeger(complete_graph(3)).value, Rational(1, 2));
  EXPECT_EQ(anti_cheeger(path_graph(2)).value, 1);
}

TEST(Oracles, CertificatesReevaluate) {
  for (const Graph& g : sample_graphs()) {
    CutCertificate c = cheeger(g);
    VertexSet s = c.sets[0], t = c.sets[1];
    EXPECT_TRUE(s.contains(0));
    EXPECT_EQ(c.value, cut_weight(g, s, t) / std::min(vol(g, s), vol(g, t)));
    CutCertificate m = maxcut(g);
    EXPECT_EQ(m.value, 2 * cut_weight(g, m.sets[0], m.sets[1]) / g.total_volume());
    CutCertificate d = dual_cheeger(g);
    EXPECT_EQ(d.value, 2 * cut_weight(g, d.sets[0], d.sets[1]) / vol(g, d.sets[0] | d.sets[1]));
  }
}

TEST(Oracles, AgreeWithBruteForce) {
  for (const Graph& g : sample_graphs()) {
    EXPECT_EQ(cheeger(g).value, bf::cheeger(g));
    EXPECT_EQ(maxcut(g).value, bf::maxcut_ratio(g));
    EXPECT_EQ(anti_cheeger(g).value, bf::anti_cheeger(g));
    EXPECT_EQ(dual_cheeger(g).value, bf::dual_cheeger(g));
    EXPECT_EQ(modified_dual_cheeger(g).value, bf::modified_dual_cheeger(g));
  }
}

TEST(Oracles, RatioOracleMatchesTernaryScan) {
  for (const Graph& g : sample_graphs()) {
    for (ProblemId id : all_problems()) {
      EXPECT_EQ(ratio_oracle(id, g).value, ternary_opt(id, g)) << to_string(id);
    }
  }
}

TEST(Oracles, ContinuousConstantsMatchCombinatorial) {
  for (const Graph& g : sample_graphs()) {
    EXPECT_EQ(ratio_oracle(ProblemId::cheeger_tv, g).value, bf::cheeger(g));
    EXPECT_EQ(ratio_oracle(ProblemId::cheeger_new, g).value, bf::cheeger(g));
    EXPECT_EQ(ratio_oracle(ProblemId::dual, g).value, 1 - bf::dual_cheeger(g));
    EXPECT_EQ(ratio_oracle(ProblemId::mdual, g).value, 1 - bf::modified_dual_cheeger(g));
    EXPECT_EQ(ratio_oracle(ProblemId::maxcut_ratio, g).value, bf::maxcut_ratio(g));
    EXPECT_EQ(ratio_oracle(ProblemId::anti, g).value, bf::anti_cheeger(g));
  }
}

TEST(Oracles, KWayDualCheeger) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(k_way_dual_cheeger(p3, 2).value, bf::k_way_dual_cheeger(p3, 2));
  for (const Graph& g : {cycle_graph(5), star_triangle_graph(2), random_connected_graph(6, 0.4, 2)}) {
    EXPECT_EQ(k_way_dual_cheeger(g, 1).value, dual_cheeger(g).value);
    Rational prev = 2;
    for (int k = 1; k <= 3; ++k) {
      Rational v = k_way_dual_cheeger(g, k).value;
      EXPECT_EQ(v, bf::k_way_dual_cheeger(g, k)) << "k=" << k;
      EXPECT_LE(v, prev);
      prev = v;
    }
  }
  EXPECT_THROW((void)k_way_dual_cheeger(p3, 0), Error);
  EXPECT_THROW((void)k_way_dual_cheeger(p3, 4), Error);
}

TEST(Oracles, MinmaxKCut) {
  Graph k3 = complete_graph(3);
  EXPECT_EQ(minmax_k_cut(k3, 1, false).value, 0);
  EXPECT_EQ(minmax_k_cut(k3, 1, true).value, 0);
  EXPECT_EQ(minmax_k_cut(k3, 2, false).value, 4);
  EXPECT_EQ(minmax_k_cut(k3, 2, false).value, mincut(k3).value * k3.total_volume());
  for (const Graph& g : {path_graph(4), cycle_graph(5), star_triangle_graph(2), random_connected_graph(6, 0.5, 4)}) {
    const int n = g.n();
    Rational prev = 0;
    for (int k = 1; k <= n; ++k) {
      Rational mk = minmax_k_cut(g, k, false).value;
      Rational mk_part = minmax_k_cut(g, k, true).value;
      if (k <= 3) {
        EXPECT_EQ(mk, bf::minmax_k_cut(g, k, false)) << "k=" << k;
        EXPECT_EQ(mk_part, bf::minmax_k_cut(g, k, true)) << "k=" << k;
      }
      EXPECT_GE(mk, prev);
      EXPECT_LE(mk, mk_part);
      prev = mk;
    }
    Rational mn = minmax_k_cut(g, n, false).value;
    EXPECT_EQ(mn, minmax_k_cut(g, n, true).value);
    EXPECT_EQ(mn, maxcut(g).value * g.total_volume());
  }
}

TEST(Oracles, DualCheegerIsOneExactlyOnBipartite) {
  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(6), cycle_graph(5), complete_graph(4),
                         petersen_graph(), random_connected_graph(7, 0.4, 9)}) {
    EXPECT_EQ(dual_cheeger(g).value == 1, is_bipartite(g));
  }
}

TEST(Oracles, DeterministicAcrossWorkers) {
  Graph g = random_connected_graph(9, 0.4, 6);
  EnumerationConfig one{std::nullopt, 1}, three{std::nullopt, 3};
  auto same = [](const CutCertificate& a, const CutCertificate& b) {
    EXPECT_EQ(a.value, b.value);
    ASSERT_EQ(a.sets.size(), b.sets.size());
    for (std::size_t i = 0; i < a.sets.size(); ++i) EXPECT_EQ(a.sets[i].bits(), b.sets[i].bits());
  };
  same(cheeger(g, one), cheeger(g, three));
  same(maxcut(g, one), maxcut(g, three));
  same(dual_cheeger(g, one), dual_cheeger(g, three));
  same(anti_cheeger(g, one), anti_cheeger(g, three));
  same(k_way_dual_cheeger(g, 2, one), k_way_dual_cheeger(g, 2, three));
  same(minmax_k_cut(g, 3, false, one), minmax_k_cut(g, 3, false, three));
}

TEST(Oracles, Errors) {
  EnumerationConfig tiny{4, 1};
  try {
    (void)maxcut(path_graph(6), tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::too_large);
  }
  Graph split(4, {{0, 1, 1}, {2, 3, 1}});
  try {
    (void)cheeger(split);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::disconnected);
  }
}
