#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "nlcut/errors.hpp"
#include "nlcut/generators.hpp"
#include "nlcut/graph.hpp"
#include "nlcut/graph_io.hpp"
#include "nlcut/graph_params.hpp"

using namespace nlcut;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no nlcut::Error thrown";
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("2/6"), Rational(1, 3));
  EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(VertexSet, BasicOperations) {
  VertexSet s = VertexSet::from_ids({0, 2});
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.complement(4).ids(), (std::vector<int>{1, 3}));
  EXPECT_EQ(to_string(s), "{0,2}");
}

TEST(Graph, VolumeAndCutExamples) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(vol(p3, VertexSet::from_ids({1})), 2);
  EXPECT_EQ(vol(cycle_graph(4), cycle_graph(4).vertices()), 8);
  EXPECT_EQ(cut_weight(p3, VertexSet::from_ids({1}), VertexSet::from_ids({0, 2})), 2);
  Graph pet = petersen_graph();
  VertexSet outer = VertexSet::from_ids({0, 1, 2, 3, 4});
  EXPECT_EQ(cut_weight(pet, outer, outer.complement(10)), 5);
}

TEST(Graph, OverlappingSetsRejected) {
  Graph p3 = path_graph(3);
  EXPECT_EQ(code_of([&] { (void)cut_weight(p3, VertexSet::from_ids({0, 1}), VertexSet::from_ids({1})); }),
            ErrorCode::overlapping_sets);
}

TEST(Graph, HandshakeAndAdditivityOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + trial % 6;
    Graph g = random_connected_graph(n, 0.4, trial + 1);
    std::uint64_t full = bf::full(n);
    for (int rep = 0; rep < 10; ++rep) {
      std::uint64_t a = rng() & full;
      std::uint64_t b = rng() & full & ~a;
      VertexSet sa(a), sb(b);
      EXPECT_EQ(cut_weight(g, sa, sb), cut_weight(g, sb, sa));
      EXPECT_EQ(cut_weight(g, sa, sb), bf::cut(g, a, b));
      EXPECT_EQ(boundary(g, sa) + 2 * inner_weight(g, sa), vol(g, sa));
      EXPECT_EQ(vol(g, VertexSet(a | b)), vol(g, sa) + vol(g, sb));
      EXPECT_EQ(vol(g, sa), bf::degree_vol(g, a));
    }
  }
}

TEST(Graph, ComponentsPartitionTheSet) {
  Graph g = parse_graph("n 6\n0 1\n2 3\n3 4\n");
  VertexSet s = VertexSet::from_ids({0, 1, 2, 4, 5});
  auto parts = connected_components(g, s);
  std::uint64_t seen = 0;
  for (auto p : parts) {
    EXPECT_EQ(seen & p.bits(), 0u);
    seen |= p.bits();
  }
  EXPECT_EQ(seen, s.bits());
  EXPECT_EQ(parts.size(), 4u);
  EXPECT_FALSE(is_connected(g));
}

TEST(Generators, Shapes) {
  Graph st = star_triangle_graph(2);
  EXPECT_EQ(st.n(), 5);
  EXPECT_EQ(st.m(), 6);
  Graph p2 = path_graph(2);
  EXPECT_EQ(p2.n(), 2);
  EXPECT_EQ(p2.m(), 1);
  Graph pet = petersen_graph();
  EXPECT_EQ(pet.n(), 10);
  EXPECT_EQ(pet.m(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(pet.degree(v), 3);
  EXPECT_EQ(complete_graph(5).m(), 10);
  EXPECT_EQ(cycle_graph(6).m(), 6);
  EXPECT_EQ(star_graph(5).degree(0), 4);
}

TEST(Generators, RandomIsConnectedAndSeeded) {
  for (int seed = 1; seed <= 5; ++seed) {
    Graph a = random_connected_graph(9, 0.2, seed);
    Graph b = random_connected_graph(9, 0.2, seed);
    EXPECT_TRUE(is_connected(a));
    EXPECT_TRUE(same_graph(a, b));
  }
}

TEST(GraphIo, ParseExamples) {
  Graph p3 = parse_graph("0 1 1\n1 2 1\n");
  EXPECT_TRUE(same_graph(p3, path_graph(3)));
  Graph frac = parse_graph("0 1 1/3");
  ASSERT_EQ(frac.m(), 1);
  EXPECT_EQ(frac.edges()[0].w, Rational(1, 3));
  EXPECT_EQ(code_of([] { (void)parse_graph("0 0 1"); }), ErrorCode::self_loop);
  EXPECT_EQ(code_of([] { (void)parse_graph("0 1 -1"); }), ErrorCode::negative_weight);
}

TEST(GraphIo, ParseErrorCarriesLine) {
  try {
    (void)parse_graph("# header\n0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(GraphIo, CommentsDefaultsAndHeader) {
  Graph g = parse_graph("# c\nn 4\n\n0 1\n1 2 0.5\n");
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 2);
  EXPECT_EQ(g.edges()[1].w, Rational(1, 2));
}

TEST(GraphIo, ParallelEdgesMerge) {
  EXPECT_TRUE(same_graph(parse_graph("0 1 1\n1 0 1/2\n1 2\n"), parse_graph("0 1 3/2\n1 2\n")));
}

TEST(GraphIo, RoundTrip) {
  for (const Graph& g : {petersen_graph(), star_triangle_graph(3), parse_graph("n 5\n0 1 1/3\n2 3 7/2\n"),
                         random_connected_graph(8, 0.4, 3)}) {
    std::string text = emit_graph(g);
    EXPECT_EQ(emit_graph(parse_graph(text)), text);
    EXPECT_TRUE(same_graph(parse_graph(text), g));
  }
}

TEST(GraphIo, MeasureAndVectorFiles) {
  Graph p3 = path_graph(3);
  auto mu = parse_measure("0 2\n1 1/2\n2 1\n", 3);
  Graph h = p3.with_measure(mu);
  EXPECT_EQ(h.total_volume(), Rational(7, 2));
  EXPECT_FALSE(h.measure_is_degree());
  RVector x = parse_vector("2 -1/2\n", 3);
  EXPECT_EQ(x, (RVector{0, 0, Rational(-1, 2)}));
}

TEST(GraphParams, Examples) {
  GraphParams c5 = graph_params(cycle_graph(5));
  EXPECT_EQ(c5.alpha, 2);
  EXPECT_EQ(c5.matching, 2);
  EXPECT_EQ(c5.edge_cover, 3);
  EXPECT_FALSE(c5.is_bipartite);
  GraphParams k2 = graph_params(path_graph(2));
  EXPECT_EQ(k2.alpha, 1);
  EXPECT_EQ(k2.matching, 1);
  EXPECT_EQ(k2.edge_cover, 1);
  EXPECT_EQ(independence_number(petersen_graph()), 4);
  EXPECT_EQ(matching_number(petersen_graph()), 5);
}

TEST(GraphParams, ForestsAndBipartite) {
  for (int k = 1; k <= 12; ++k) EXPECT_TRUE(is_forest(path_graph(k)));
  EXPECT_FALSE(is_forest(cycle_graph(4)));
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(petersen_graph()));
  EXPECT_EQ(code_of([] { (void)edge_cover_number(parse_graph("n 3\n0 1\n")); }), ErrorCode::isolated_vertex);
  EXPECT_EQ(code_of([] { (void)independence_number(path_graph(30), 24); }), ErrorCode::too_large);
}

TEST(GraphParams, AgreesWithBruteForce) {
  for (int seed = 1; seed <= 8; ++seed) {
    Graph g = random_connected_graph(8, 0.35, seed);
    int alpha = 0;
    for (std::uint64_t s = 0; s <= bf::full(8); ++s) {
      bool independent = true;
      for (const auto& e : g.edges()) independent &= !(bf::has(s, e.u) && bf::has(s, e.v));
      if (independent) alpha = std::max(alpha, __builtin_popcountll(s));
    }
    EXPECT_EQ(independence_number(g), alpha);
    int best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << g.m()); ++pick) {
      std::uint64_t used = 0;
      bool ok = true;
      for (int i = 0; i < g.m() && ok; ++i) {
        if (!bf::has(pick, i)) continue;
        std::uint64_t ends = (std::uint64_t{1} << g.edges()[i].u) | (std::uint64_t{1} << g.edges()[i].v);
        ok = (used & ends) == 0;
        used |= ends;
      }
      if (ok) best = std::max(best, __builtin_popcountll(pick));
    }
    EXPECT_EQ(matching_number(g), best);
    EXPECT_EQ(edge_cover_number(g), 8 - best);
  }
}
