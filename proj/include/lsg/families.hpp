#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsg/error.hpp"
#include "lsg/graph.hpp"

namespace lsg {

/// Parameters of the layer Sun family: cycle length n, branching factor m,
/// number of layers k. Valid when n >= 3, m >= 2, k >= 3.
struct LayerSunParams {
  int n = 3;
  int m = 2;
  int k = 3;

  friend auto operator<=>(const LayerSunParams&, const LayerSunParams&) = default;

  bool valid() const { return n >= 3 && m >= 2 && k >= 3; }

  void validate() const {
    if (!valid()) {
      throw Error(ErrorKind::InvalidParams, "need n >= 3, m >= 2, k >= 3; got n=" +
                                                std::to_string(n) + " m=" + std::to_string(m) +
                                                " k=" + std::to_string(k));
    }
  }

  /// m^e for e >= 0.
  std::size_t power(int e) const {
    std::size_t p = 1;
    for (int i = 0; i < e; ++i) p *= static_cast<std::size_t>(m);
    return p;
  }

  /// Components per branch in layer l >= 3.
  std::size_t components_per_branch(int layer) const { return power(layer - 3); }

  std::size_t layer_size(int layer) const {
    if (layer <= 2) return static_cast<std::size_t>(n);
    return static_cast<std::size_t>(n) * power(layer - 2);
  }

  /// 2n + sum_{r=1}^{k-2} n m^r
  std::size_t order() const {
    std::size_t total = 2 * static_cast<std::size_t>(n);
    for (int r = 1; r <= k - 2; ++r) total += static_cast<std::size_t>(n) * power(r);
    return total;
  }
};

/// Closed forms for the three invariants of LSG(n,m,k) and of its line graph.
struct Formulas {
  std::size_t beta;
  std::size_t psi;
  std::size_t sdim;
};

enum class Variant { base, line };

inline const char* to_string(Variant v) { return v == Variant::base ? "base" : "line"; }

inline Formulas formulas(const LayerSunParams& p, Variant variant) {
  const std::size_t leaves = static_cast<std::size_t>(p.n) * p.power(p.k - 2);
  const std::size_t parents = static_cast<std::size_t>(p.n) * p.power(p.k - 3);
  if (variant == Variant::base) return {leaves - parents, leaves, leaves - 1};
  return {leaves - parents, leaves - parents, leaves - 1};
}

/// Position of a vertex in the layered structure. For layers 1 and 2 only
/// the branch index i is meaningful and j = t = 1.
struct LayerLabel {
  int layer = 1;
  int i = 1;
  int j = 1;
  int t = 1;

  friend auto operator<=>(const LayerLabel&, const LayerLabel&) = default;
};

/// Which layer-l vertex parents which layer-(l+1) component. Any bijection
/// gives an isomorphic graph; the alternative exists to test that.
enum class Ownership {
  /// (component j, slot t) owns component (j-1)*m + t
  consecutive,
  /// (component j, slot t) owns component (t-1)*m^(l-3) + j
  strided,
};

class LabeledGraph {
 public:
  LabeledGraph(Graph graph, LayerSunParams params, Variant variant, std::vector<LayerLabel> labels)
      : graph_(std::move(graph)),
        params_(params),
        variant_(variant),
        labels_(std::move(labels)) {}

  const Graph& graph() const noexcept { return graph_; }
  const LayerSunParams& params() const noexcept { return params_; }
  Variant variant() const noexcept { return variant_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

  const LayerLabel& label_of(Vertex v) const { return labels_.at(v); }

  /// First vertex id of a layer; layers occupy contiguous id ranges.
  Vertex layer_offset(int layer) const {
    std::size_t off = 0;
    for (int l = 1; l < layer; ++l) off += params_.layer_size(l);
    return static_cast<Vertex>(off);
  }

  std::vector<Vertex> layer_vertices(int layer) const {
    std::vector<Vertex> out(params_.layer_size(layer));
    Vertex first = layer_offset(layer);
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = first + static_cast<Vertex>(x);
    return out;
  }

  Vertex id_of(const LayerLabel& label) const {
    const auto& p = params_;
    auto bad = [&] {
      return Error(ErrorKind::OutOfRange, "label out of range for this instance: " +
                                              render(label));
    };
    if (label.layer < 1 || label.layer > p.k || label.i < 1 || label.i > p.n) throw bad();
    if (label.layer <= 2) {
      if (label.j != 1 || label.t != 1) throw bad();
      return layer_offset(label.layer) + static_cast<Vertex>(label.i - 1);
    }
    const std::size_t comps = p.components_per_branch(label.layer);
    if (label.j < 1 || static_cast<std::size_t>(label.j) > comps || label.t < 1 || label.t > p.m) {
      throw bad();
    }
    const std::size_t comp = static_cast<std::size_t>(label.i - 1) * comps +
                             static_cast<std::size_t>(label.j - 1);
    return layer_offset(label.layer) +
           static_cast<Vertex>(comp * static_cast<std::size_t>(p.m) +
                               static_cast<std::size_t>(label.t - 1));
  }

  /// "i", "v_i", "(v_{i,j}, t)^l" for the base graph; u in place of v for
  /// the line variant.
  std::string render(const LayerLabel& l) const {
    const char* letter = variant_ == Variant::base ? "v" : "u";
    if (l.layer == 1) return std::to_string(l.i);
    if (l.layer == 2) return std::string(letter) + "_" + std::to_string(l.i);
    return "(" + std::string(letter) + "_{" + std::to_string(l.i) + "," + std::to_string(l.j) +
           "}, " + std::to_string(l.t) + ")^" + std::to_string(l.layer);
  }

  std::string label_string(Vertex v) const { return render(label_of(v)); }

  std::vector<std::string> label_strings() const {
    std::vector<std::string> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_) out.push_back(render(l));
    return out;
  }

 private:
  Graph graph_;
  LayerSunParams params_;
  Variant variant_;
  std::vector<LayerLabel> labels_;
};

namespace detail {

inline std::vector<LayerLabel> layered_labels(const LayerSunParams& p) {
  std::vector<LayerLabel> labels;
  labels.reserve(p.order());
  for (int layer = 1; layer <= p.k; ++layer) {
    for (int i = 1; i <= p.n; ++i) {
      if (layer <= 2) {
        labels.push_back({layer, i, 1, 1});
        continue;
      }
      const int comps = static_cast<int>(p.components_per_branch(layer));
      for (int j = 1; j <= comps; ++j) {
        for (int t = 1; t <= p.m; ++t) labels.push_back({layer, i, j, t});
      }
    }
  }
  return labels;
}

inline int owned_component(const LayerSunParams& p, Ownership rule, int layer, int j, int t) {
  if (rule == Ownership::consecutive) return (j - 1) * p.m + t;
  return (t - 1) * static_cast<int>(p.components_per_branch(layer)) + j;
}

// Wiring shared by both variants: parent -> child component edges from layer
// 2 downward, plus cliques inside components when `clique_components`.
inline void tree_edges(const LabeledGraph& shell, Ownership rule, bool clique_components,
                       EdgeList& edges) {
  const auto& p = shell.params();
  for (int i = 1; i <= p.n; ++i) {
    Vertex parent = shell.id_of({2, i, 1, 1});
    for (int t = 1; t <= p.m; ++t) edges.emplace_back(parent, shell.id_of({3, i, 1, t}));
  }
  for (int layer = 3; layer <= p.k; ++layer) {
    const int comps = static_cast<int>(p.components_per_branch(layer));
    for (int i = 1; i <= p.n; ++i) {
      for (int j = 1; j <= comps; ++j) {
        for (int t = 1; t <= p.m; ++t) {
          Vertex v = shell.id_of({layer, i, j, t});
          if (clique_components) {
            for (int s = t + 1; s <= p.m; ++s) edges.emplace_back(v, shell.id_of({layer, i, j, s}));
          }
          if (layer == p.k) continue;
          const int child = owned_component(p, rule, layer, j, t);
          for (int s = 1; s <= p.m; ++s) edges.emplace_back(v, shell.id_of({layer + 1, i, child, s}));
        }
      }
    }
  }
}

}  // namespace detail

/// LSG(n,m,k). Vertex ids are layer-major, then branch i, component j, slot t.
inline LabeledGraph build_layer_sun(const LayerSunParams& p,
                                    Ownership rule = Ownership::consecutive) {
  p.validate();
  LabeledGraph shell(Graph{}, p, Variant::base, detail::layered_labels(p));
  EdgeList edges;
  edges.reserve(p.order());
  for (int i = 1; i <= p.n; ++i) {
    int next = i % p.n + 1;
    edges.emplace_back(shell.id_of({1, i, 1, 1}), shell.id_of({1, next, 1, 1}));
    edges.emplace_back(shell.id_of({1, i, 1, 1}), shell.id_of({2, i, 1, 1}));
  }
  detail::tree_edges(shell, rule, /*clique_components=*/false, edges);
  return LabeledGraph(build_graph(p.order(), edges), p, Variant::base, detail::layered_labels(p));
}

/// The relabelled line graph H of LSG(n,m,k), built from its own description:
/// U1 is a cycle, vertex i is adjacent to u_i and u_{i-1} (vertex 1 to u_1 and
/// u_n), components are cliques, and the parent wiring matches build_layer_sun.
inline LabeledGraph build_line_layer_sun(const LayerSunParams& p,
                                         Ownership rule = Ownership::consecutive) {
  p.validate();
  LabeledGraph shell(Graph{}, p, Variant::line, detail::layered_labels(p));
  EdgeList edges;
  for (int i = 1; i <= p.n; ++i) {
    int next = i % p.n + 1;
    int prev = i == 1 ? p.n : i - 1;
    Vertex cyc = shell.id_of({1, i, 1, 1});
    edges.emplace_back(cyc, shell.id_of({1, next, 1, 1}));
    edges.emplace_back(cyc, shell.id_of({2, i, 1, 1}));
    edges.emplace_back(cyc, shell.id_of({2, prev, 1, 1}));
  }
  detail::tree_edges(shell, rule, /*clique_components=*/true, edges);
  return LabeledGraph(build_graph(p.order(), edges), p, Variant::line, detail::layered_labels(p));
}

inline LabeledGraph build_family(const LayerSunParams& p, Variant variant) {
  return variant == Variant::base ? build_layer_sun(p) : build_line_layer_sun(p);
}

/// (branch, component) for vertices in layers >= 3.
inline std::optional<std::pair<int, int>> component_of(const LabeledGraph& g, Vertex v) {
  const auto& l = g.label_of(v);
  if (l.layer < 3) return std::nullopt;
  return std::make_pair(l.i, l.j);
}

/// Same-layer components are fundamental when they share a branch but not a
/// component index.
inline bool are_fundamental(const LabeledGraph& g, Vertex u, Vertex v) {
  const auto& a = g.label_of(u);
  const auto& b = g.label_of(v);
  if (a.layer != b.layer || a.layer < 3) {
    throw Error(ErrorKind::LayerMismatch, "fundamental pairs need two vertices of one layer >= 3");
  }
  return a.i == b.i && a.j != b.j;
}

inline int cycle_distance(int n, int p, int q) {
  int diff = p > q ? p - q : q - p;
  return std::min(diff, n - diff);
}

enum class DistanceFact {
  cycle_to_layer,       // d(i, x) = l - 1 for x in B^(l)_{i,j}
  same_component,       // d(u, v) = 2
  fundamental,          // d(u, v) = 2l - 4
  non_fundamental,      // d(u, v) = 2l - 2 + d_Cn(p, q)
};

inline const char* to_string(DistanceFact f) {
  switch (f) {
    case DistanceFact::cycle_to_layer: return "cycle_to_layer";
    case DistanceFact::same_component: return "same_component";
    case DistanceFact::fundamental: return "fundamental";
    case DistanceFact::non_fundamental: return "non_fundamental";
  }
  return "?";
}

struct DistanceViolation {
  DistanceFact fact;
  Vertex u;
  Vertex v;
  int expected;
  int actual;
};

/// Checks the layer distance identities on the base graph against BFS
/// distances. Each identity is checked on every pair it quantifies over.
inline std::vector<DistanceViolation> distance_facts_check(const LabeledGraph& g,
                                                           const DistanceMatrix& d) {
  if (g.variant() != Variant::base) {
    throw Error(ErrorKind::VariantMismatch, "distance facts are stated for the base graph");
  }
  const auto& p = g.params();
  std::vector<DistanceViolation> out;
  auto expect = [&](DistanceFact fact, Vertex u, Vertex v, int want) {
    int got = d(u, v);
    if (got != want) out.push_back({fact, u, v, want, got});
  };

  for (int layer = 3; layer <= p.k; ++layer) {
    const auto members = g.layer_vertices(layer);
    for (Vertex x : members) {
      const auto& lx = g.label_of(x);
      expect(DistanceFact::cycle_to_layer, g.id_of({1, lx.i, 1, 1}), x, layer - 1);
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const auto& la = g.label_of(members[a]);
        const auto& lb = g.label_of(members[b]);
        if (la.i == lb.i && la.j == lb.j) {
          expect(DistanceFact::same_component, members[a], members[b], 2);
        } else if (la.i == lb.i) {
          expect(DistanceFact::fundamental, members[a], members[b], 2 * layer - 4);
        } else {
          expect(DistanceFact::non_fundamental, members[a], members[b],
                 2 * layer - 2 + cycle_distance(p.n, la.i, lb.i));
        }
      }
    }
  }
  return out;
}

inline std::vector<DistanceViolation> distance_facts_check(const LabeledGraph& g) {
  return distance_facts_check(g, all_pairs_distances(g.graph()));
}

}  // namespace lsg
