#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsg/error.hpp"

namespace lsg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Edges as (min, max) pairs in lexicographic order.
using EdgeList = std::vector<Edge>;

/// Undirected simple graph on vertices 0..vertex_count()-1 with sorted
/// adjacency lists. Immutable once built; use build_graph() to construct.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  EdgeList edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.adj_.resize(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                             ") has an endpoint >= " +
                                             std::to_string(vertex_count));
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex u = 0; u < vertex_count; ++u) {
    auto& a = g.adj_[u];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end()) {
      throw Error(ErrorKind::DuplicateEdge,
                  "edge {" + std::to_string(u) + "," + std::to_string(*dup) + "} given twice");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

inline Graph build_graph(std::size_t vertex_count, std::initializer_list<Edge> edges) {
  return build_graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Copy of g where vertex v becomes perm[v].
inline Graph permuted(const Graph& g, std::span<const Vertex> perm) {
  EdgeList edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return build_graph(g.vertex_count(), edges);
}

/// All-pairs hop distances of a connected graph, stored row-major.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;

  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }

  value_type operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  value_type& at(Vertex u, Vertex v) { return d_[u * n_ + v]; }

  std::span<const value_type> row(Vertex u) const {
    return std::span<const value_type>(d_.data() + u * n_, n_);
  }

  value_type diameter() const {
    return d_.empty() ? value_type{0} : *std::max_element(d_.begin(), d_.end());
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> d_;
};

/// One BFS per source. Throws Disconnected if any pair is unreachable.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  constexpr auto kUnseen = std::numeric_limits<DistanceMatrix::value_type>::max();
  const std::size_t n = g.vertex_count();
  DistanceMatrix d(n);
  std::vector<DistanceMatrix::value_type> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = static_cast<DistanceMatrix::value_type>(dist[u] + 1);
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      throw Error(ErrorKind::Disconnected,
                  "vertex " + std::to_string(s) + " reaches only " + std::to_string(tail) +
                      " of " + std::to_string(n) + " vertices");
    }
    for (Vertex v = 0; v < n; ++v) d.at(s, v) = dist[v];
  }
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

struct LineGraph {
  Graph graph;
  /// edges[i] is the edge of the source graph represented by line-vertex i.
  EdgeList edges;
};

/// Line-vertex i is the i-th edge of g in lexicographic order.
inline LineGraph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw Error(ErrorKind::NoEdges, "line graph of an edgeless graph");
  LineGraph out;
  out.edges = g.edges();

  // incident[v] lists the line-vertices whose edge touches v
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  for (Vertex e = 0; e < out.edges.size(); ++e) {
    incident[out.edges[e].first].push_back(e);
    incident[out.edges[e].second].push_back(e);
  }
  EdgeList line_edges;
  for (const auto& group : incident) {
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        line_edges.emplace_back(std::min(group[a], group[b]), std::max(group[a], group[b]));
      }
    }
  }
  // A simple graph has no two edges sharing both endpoints, so no duplicates arise.
  out.graph = build_graph(out.edges.size(), line_edges);
  return out;
}

}  // namespace lsg
