#include "lsg/graph.hpp"

#include <random>

#include "gtest/gtest.h"
#include "lsg/families.hpp"
#include "lsg/isomorphism.hpp"
#include "oracles.hpp"

namespace lsg {
namespace {

TEST(BuildGraph, Triangle) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(g.edges(), (EdgeList{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(BuildGraph, SingleVertex) {
  Graph g = build_graph(1, {});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, AdjacencyIsSortedAndSymmetric) {
  Graph g = build_graph(4, {{3, 0}, {2, 0}, {1, 0}});
  auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(BuildGraph, Errors) {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::BadInput;
  };
  EXPECT_EQ(kind_of([] { build_graph(2, {{0, 2}}); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { build_graph(2, {{1, 1}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1}, {1, 0}}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1}, {0, 1}}); }), ErrorKind::DuplicateEdge);
}

TEST(Distances, CycleC4) {
  auto d = all_pairs_distances(oracle::cycle(4));
  EXPECT_EQ(d(0, 2), 2);
  EXPECT_EQ(d(1, 3), 2);
  EXPECT_EQ(d(0, 1), 1);
}

TEST(Distances, TriangleAndPath) {
  auto tri = all_pairs_distances(oracle::complete(3));
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(tri(u, v), u == v ? 0 : 1);
  EXPECT_EQ(all_pairs_distances(oracle::path(3))(0, 2), 2);
}

TEST(Distances, LayerSunCycleToLeaf) {
  auto g = build_layer_sun({3, 2, 3});
  auto d = all_pairs_distances(g.graph());
  Vertex one = g.id_of({1, 1, 1, 1});
  for (int t = 1; t <= 2; ++t) EXPECT_EQ(d(one, g.id_of({3, 1, 1, t})), 2);
}

TEST(Distances, DisconnectedThrows) {
  Graph g = build_graph(3, {{0, 1}});
  EXPECT_THROW(all_pairs_distances(g), Error);
  EXPECT_FALSE(is_connected(g));
}

// Symmetry, zero diagonal, triangle inequality, adjacency <=> distance 1,
// and agreement with Floyd-Warshall.
void expect_metric(const Graph& g) {
  auto d = all_pairs_distances(g);
  auto fw = oracle::distances(g);
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    ASSERT_EQ(d(u, u), 0);
    for (Vertex v = 0; v < n; ++v) {
      ASSERT_EQ(d(u, v), fw[u][v]);
      ASSERT_EQ(d(u, v), d(v, u));
      ASSERT_EQ(d(u, v) == 1, g.adjacent(u, v));
      for (Vertex w = 0; w < n; ++w) ASSERT_LE(d(u, v), d(u, w) + d(w, v));
    }
  }
}

TEST(Distances, MetricInvariantsOnFamilies) {
  for (LayerSunParams p : {LayerSunParams{3, 2, 3}, {4, 2, 4}, {3, 3, 4}, {5, 2, 4}}) {
    expect_metric(build_layer_sun(p).graph());
    expect_metric(build_line_layer_sun(p).graph());
  }
}

TEST(Distances, MetricInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 15;
    expect_metric(oracle::random_connected(rng, n, 0.2));
  }
}

TEST(Graph, HandshakeIdentity) {
  for (LayerSunParams p : {LayerSunParams{3, 2, 3}, {5, 3, 4}, {4, 2, 5}}) {
    for (const auto& g : {build_layer_sun(p), build_line_layer_sun(p)}) {
      std::size_t sum = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.graph().degree(v);
      EXPECT_EQ(sum, 2 * g.graph().edge_count());
    }
  }
}

TEST(LineGraph, TriangleIsSelfDual) {
  auto lg = line_graph(oracle::complete(3));
  EXPECT_TRUE(is_isomorphic(lg.graph, oracle::complete(3)));
  EXPECT_EQ(lg.edges, (EdgeList{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(LineGraph, PathP3IsAnEdge) {
  auto lg = line_graph(oracle::path(3));
  EXPECT_EQ(lg.graph.vertex_count(), 2u);
  EXPECT_EQ(lg.graph.edges(), (EdgeList{{0, 1}}));
}

TEST(LineGraph, NoEdgesThrows) {
  try {
    line_graph(build_graph(2, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoEdges);
  }
}

TEST(LineGraph, LayerSunVertexCountEqualsEdgeCount) {
  auto g = build_layer_sun({3, 2, 3});
  EXPECT_EQ(g.graph().edge_count(), 12u);
  EXPECT_EQ(line_graph(g.graph()).graph.vertex_count(), 12u);
}

TEST(LineGraph, DegreeRule) {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs = {build_layer_sun({4, 3, 4}).graph(), oracle::complete(5)};
  for (int i = 0; i < 20; ++i) graphs.push_back(oracle::random_connected(rng, 3 + i % 10, 0.3));
  for (const auto& g : graphs) {
    auto lg = line_graph(g);
    for (Vertex e = 0; e < lg.edges.size(); ++e) {
      auto [u, v] = lg.edges[e];
      EXPECT_EQ(lg.graph.degree(e), g.degree(u) + g.degree(v) - 2);
    }
  }
}

TEST(LineGraph, IndexingIsLexicographicRank) {
  Graph g = build_graph(4, {{2, 3}, {0, 1}, {1, 2}});
  auto lg = line_graph(g);
  EXPECT_EQ(lg.edges, (EdgeList{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(lg.graph.edges(), (EdgeList{{0, 1}, {1, 2}}));
}

TEST(Isomorphism, PermutedCycle) {
  Graph c4 = oracle::cycle(4);
  std::vector<Vertex> perm = {2, 0, 3, 1};
  Graph shuffled = permuted(c4, perm);
  auto f = find_isomorphism(c4, shuffled);
  ASSERT_TRUE(f.has_value());
  for (auto [u, v] : c4.edges()) EXPECT_TRUE(shuffled.adjacent((*f)[u], (*f)[v]));
}

TEST(Isomorphism, CycleVersusPath) {
  EXPECT_FALSE(is_isomorphic(oracle::cycle(4), oracle::path(4)));
}

TEST(Isomorphism, SameDegreesDifferentStructure) {
  // C6 and two disjoint triangles are both 2-regular on six vertices.
  Graph c6 = oracle::cycle(6);
  Graph two_triangles = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(is_isomorphic(c6, two_triangles));
}

TEST(Isomorphism, SizeLimit) {
  IsomorphismLimits limits;
  limits.max_vertices = 10;
  EXPECT_THROW(is_isomorphic(oracle::cycle(11), oracle::cycle(11), limits), Error);
}

TEST(Isomorphism, LineLayerSunMatchesLineGraph) {
  auto g = build_layer_sun({3, 2, 3});
  auto h = build_line_layer_sun({3, 2, 3});
  EXPECT_TRUE(is_isomorphic(h.graph(), line_graph(g.graph()).graph));
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + trial % 7;
    Graph a = oracle::random_connected(rng, n, 0.3);
    Graph b = oracle::random_connected(rng, n, 0.3);
    ASSERT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b)) << "trial " << trial;
  }
}

TEST(Isomorphism, ReflexiveAndSymmetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 25;
    Graph a = oracle::random_connected(rng, n, 0.15);
    Graph b = permuted(a, oracle::random_permutation(rng, n));
    Graph c = oracle::random_connected(rng, n, 0.15);
    EXPECT_TRUE(is_isomorphic(a, a));
    EXPECT_TRUE(is_isomorphic(a, b));
    EXPECT_TRUE(is_isomorphic(b, a));
    EXPECT_EQ(is_isomorphic(a, c), is_isomorphic(c, a));
  }
}

}  // namespace
}  // namespace lsg
