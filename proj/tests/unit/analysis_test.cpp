#include <gtest/gtest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "permgraph/analysis.hpp"
#include "permgraph/error.hpp"

using namespace permgraph;

TEST(NamedGraphs, Shapes) {
  EXPECT_EQ(make_named("P1").vertex_count(), 2u);
  EXPECT_EQ(make_named("P1").edge_count(), 1u);
  const Graph u = make_named("K3+4K1");
  EXPECT_EQ(u.vertex_count(), 7u);
  EXPECT_EQ(u.edge_count(), 3u);
  EXPECT_EQ(make_named("K2,3").edge_count(), 6u);
  EXPECT_EQ(make_named("C5").edge_count(), 5u);
  EXPECT_EQ(make_named("Kbar4").edge_count(), 0u);
  EXPECT_THROW(make_named("Q7"), Error);
  EXPECT_THROW(make_named("C2"), Error);
}

TEST(Analyze, CompleteGraph) {
  const AnalysisReport r = analyze(make_named("K4"));
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.diameter, Length::finite(1));
  EXPECT_EQ(r.girth, Length::finite(3));
  EXPECT_TRUE(r.claw_free);
  EXPECT_TRUE(r.planar);
  EXPECT_EQ(r.regular, std::optional<std::size_t>(3));
  EXPECT_EQ(r.recognized_name, std::optional<std::string>("K4"));
  EXPECT_FALSE(analyze(make_named("K5")).planar);
  EXPECT_FALSE(analyze(make_named("K3,3")).planar);
}

TEST(Analyze, TriangleUnionIsolated) {
  const AnalysisReport r = analyze(make_named("K3+4K1"));
  EXPECT_FALSE(r.connected);
  EXPECT_TRUE(r.diameter.is_infinite());
  EXPECT_EQ(r.girth, Length::finite(3));
  EXPECT_TRUE(r.unicyclic);
  EXPECT_EQ(r.recognized_name, std::optional<std::string>("K3+4K1"));
}

TEST(Analyze, StarsPathsCycles) {
  const AnalysisReport star = analyze(make_named("K1,5"));
  EXPECT_TRUE(star.star);
  EXPECT_TRUE(star.tree);
  EXPECT_TRUE(star.complete_bipartite);
  EXPECT_TRUE(star.girth.is_infinite());
  EXPECT_FALSE(star.claw_free);
  EXPECT_EQ(star.recognized_name, std::optional<std::string>("K1,5"));

  const AnalysisReport p3 = analyze(make_named("P3"));
  EXPECT_EQ(p3.path, std::optional<std::size_t>(3));
  EXPECT_FALSE(p3.star);
  EXPECT_TRUE(analyze(make_named("P1")).star);

  const AnalysisReport c5 = analyze(make_named("C5"));
  EXPECT_EQ(c5.cycle, std::optional<std::size_t>(5));
  EXPECT_TRUE(c5.unicyclic);
  EXPECT_FALSE(c5.bipartite);
  EXPECT_EQ(c5.diameter, Length::finite(2));

  const AnalysisReport k1 = analyze(make_named("K1"));
  EXPECT_EQ(k1.path, std::optional<std::size_t>(0));
  EXPECT_TRUE(k1.totally_disconnected);
  EXPECT_TRUE(k1.connected);
}

TEST(Analyze, C4IsK22) {
  const AnalysisReport r = analyze(make_named("C4"));
  EXPECT_TRUE(r.complete_bipartite);
  EXPECT_EQ(r.cycle, std::optional<std::size_t>(4));
  EXPECT_EQ(r.girth, Length::finite(4));
  EXPECT_EQ(r.recognized_name, std::optional<std::string>("C4"));
}

TEST(Analyze, ClawVariants) {
  EXPECT_TRUE(has_claw_subgraph(make_named("K4")));
  EXPECT_FALSE(has_induced_claw(make_named("K4")));
  EXPECT_TRUE(has_induced_claw(make_named("K1,3")));
  EXPECT_TRUE(has_path2_subgraph(make_named("K3")));
  EXPECT_FALSE(has_induced_path2(make_named("K3")));
  EXPECT_TRUE(has_induced_path2(make_named("P2")));
}

TEST(Analyze, JsonAndTextShareFields) {
  const AnalysisReport r = analyze(make_named("K1,3"));
  const auto j = nlohmann::ordered_json::parse(to_json(r));
  const std::string text = to_text(r);
  std::size_t lines = 0;
  for (const auto& [key, value] : j.items()) {
    EXPECT_NE(text.find(key + ": "), std::string::npos) << key;
    ++lines;
  }
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), lines);
  EXPECT_EQ(j["girth"], "inf");
  EXPECT_EQ(j["recognized_name"], "K1,3");
}

TEST(Isomorphism, MatchesBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph a = oracle::random_graph(rng, n, 0.5);
    Graph b = oracle::random_graph(rng, n, 0.5);
    if (trial % 2 == 0) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = Graph(n);
      for (const auto& [u, v] : a.edges()) b.add_edge(perm[u], perm[v]);
    }
    const auto map = find_isomorphism(a, b);
    EXPECT_EQ(map.has_value(), oracle::isomorphic_graphs(oracle::matrix(a), oracle::matrix(b)));
    if (map)
      for (const auto& [u, v] : a.edges()) EXPECT_TRUE(b.has_edge((*map)[u], (*map)[v]));
  }
}

TEST(Isomorphism, RegularGraphsNeedBacktracking) {
  // Two 3-regular graphs on 6 vertices: prism and K3,3.
  Graph prism(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}})
    prism.add_edge(u, v);
  EXPECT_FALSE(is_isomorphic(prism, make_named("K3,3")));
  EXPECT_TRUE(is_isomorphic(make_named("C6"), make_named("C6")));
  EXPECT_FALSE(is_isomorphic(make_named("C6"), make_named("C3+C3")));
}

TEST(Recognize, UnknownShapes) {
  Graph paw(4);
  paw.add_edge(0, 1);
  paw.add_edge(1, 2);
  paw.add_edge(2, 0);
  paw.add_edge(2, 3);
  EXPECT_FALSE(recognize(paw).has_value());
}
