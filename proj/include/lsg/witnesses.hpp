#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsg/error.hpp"
#include "lsg/families.hpp"
#include "lsg/resolving.hpp"

namespace lsg {

namespace detail {

inline void require_variant(const LabeledGraph& g, Variant want, const char* what) {
  if (g.variant() != want) {
    throw Error(ErrorKind::VariantMismatch,
                std::string(what) + " is defined on the " + to_string(want) + " variant");
  }
}

// Last layer, with `skip` deciding which labels to leave out.
template <typename Skip>
VertexSet last_layer_except(const LabeledGraph& g, Skip skip) {
  std::vector<Vertex> members;
  for (Vertex v : g.layer_vertices(g.params().k)) {
    if (!skip(g.label_of(v))) members.push_back(v);
  }
  return VertexSet(std::move(members), g.vertex_count());
}

}  // namespace detail

/// Last layer minus one slot of every component: the metric basis.
inline VertexSet beta_witness(const LabeledGraph& g, int dropped_slot = 1) {
  detail::require_variant(g, Variant::base, "beta_witness");
  return detail::last_layer_except(g, [&](const LayerLabel& l) { return l.t == dropped_slot; });
}

/// Last layer minus the whole component B^(k)_{1,1}; not resolving.
inline VertexSet beta_counterexample_missing_component(const LabeledGraph& g) {
  detail::require_variant(g, Variant::base, "beta_counterexample_missing_component");
  return detail::last_layer_except(g, [](const LayerLabel& l) { return l.i == 1 && l.j == 1; });
}

/// Last layer minus two slots of B^(k)_{1,1}; not resolving.
inline VertexSet beta_counterexample_two_missing(const LabeledGraph& g) {
  detail::require_variant(g, Variant::base, "beta_counterexample_two_missing");
  return detail::last_layer_except(
      g, [](const LayerLabel& l) { return l.i == 1 && l.j == 1 && l.t <= 2; });
}

/// The whole last layer: a minimum doubly resolving set.
inline VertexSet psi_witness(const LabeledGraph& g) {
  detail::require_variant(g, Variant::base, "psi_witness");
  return detail::last_layer_except(g, [](const LayerLabel&) { return false; });
}

namespace detail {
inline bool is_first_leaf(const LayerLabel& l) { return l.i == 1 && l.j == 1 && l.t == 1; }
}  // namespace detail

/// Last layer minus (v_{1,1}, 1)^k; resolving but not doubly resolving.
inline VertexSet psi_counterexample(const LabeledGraph& g) {
  detail::require_variant(g, Variant::base, "psi_counterexample");
  return detail::last_layer_except(g, detail::is_first_leaf);
}

/// Last layer minus (v_{1,1}, 1)^k: a minimum strong resolving set.
inline VertexSet sdim_witness(const LabeledGraph& g) {
  detail::require_variant(g, Variant::base, "sdim_witness");
  return detail::last_layer_except(g, detail::is_first_leaf);
}

/// Last layer of H minus slot 1 of every clique component.
inline VertexSet line_psi_witness(const LabeledGraph& h) {
  detail::require_variant(h, Variant::line, "line_psi_witness");
  return detail::last_layer_except(h, [](const LayerLabel& l) { return l.t == 1; });
}

/// Last layer of H minus (u_{1,1}, 1)^k.
inline VertexSet line_sdim_witness(const LabeledGraph& h) {
  detail::require_variant(h, Variant::line, "line_sdim_witness");
  return detail::last_layer_except(h, detail::is_first_leaf);
}

struct Expectation {
  ResolvingKind kind;
  bool should_pass;
};

struct WitnessInfo {
  std::string_view name;
  Variant variant;
  VertexSet (*build)(const LabeledGraph&);
  /// Size implied by the closed forms at the instance parameters.
  std::size_t (*expected_size)(const LayerSunParams&);
  std::vector<Expectation> expectations;
};

namespace detail {
inline std::size_t leaves(const LayerSunParams& p) {
  return static_cast<std::size_t>(p.n) * p.power(p.k - 2);
}
inline std::size_t leaf_parents(const LayerSunParams& p) {
  return static_cast<std::size_t>(p.n) * p.power(p.k - 3);
}
}  // namespace detail

/// The closed list of named witnesses with the outcome each must produce.
inline const std::vector<WitnessInfo>& witness_catalog() {
  using detail::leaf_parents;
  using detail::leaves;
  using K = ResolvingKind;
  static const std::vector<WitnessInfo> catalog = {
      {"beta", Variant::base, [](const LabeledGraph& g) { return beta_witness(g); },
       [](const LayerSunParams& p) { return leaves(p) - leaf_parents(p); },
       {{K::resolving, true}}},
      {"beta-missing-component", Variant::base, beta_counterexample_missing_component,
       [](const LayerSunParams& p) { return leaves(p) - static_cast<std::size_t>(p.m); },
       {{K::resolving, false}}},
      {"beta-two-missing", Variant::base, beta_counterexample_two_missing,
       [](const LayerSunParams& p) { return leaves(p) - 2; },
       {{K::resolving, false}}},
      {"psi", Variant::base, psi_witness, [](const LayerSunParams& p) { return leaves(p); },
       {{K::doubly, true}}},
      {"psi-counterexample", Variant::base, psi_counterexample,
       [](const LayerSunParams& p) { return leaves(p) - 1; },
       {{K::resolving, true}, {K::doubly, false}}},
      {"sdim", Variant::base, sdim_witness, [](const LayerSunParams& p) { return leaves(p) - 1; },
       {{K::strong, true}}},
      {"line-psi", Variant::line, line_psi_witness,
       [](const LayerSunParams& p) { return leaves(p) - leaf_parents(p); },
       {{K::resolving, true}, {K::doubly, true}}},
      {"line-sdim", Variant::line, line_sdim_witness,
       [](const LayerSunParams& p) { return leaves(p) - 1; },
       {{K::strong, true}}},
  };
  return catalog;
}

inline const WitnessInfo& find_witness(std::string_view name) {
  for (const auto& w : witness_catalog()) {
    if (w.name == name) return w;
  }
  throw Error(ErrorKind::UnknownWitness, "no witness named '" + std::string(name) + "'");
}

struct WitnessOutcome {
  std::string name;
  ResolvingKind kind;
  bool should_pass;
  bool passed;
  std::size_t size;
  std::size_t expected_size;
  std::optional<std::pair<Vertex, Vertex>> violation;

  bool ok() const { return passed == should_pass && size == expected_size; }
};

/// Runs every catalogued witness of the graph's variant against its predicates.
inline std::vector<WitnessOutcome> check_witnesses(const LabeledGraph& g, const DistanceMatrix& d) {
  std::vector<WitnessOutcome> out;
  for (const auto& info : witness_catalog()) {
    if (info.variant != g.variant()) continue;
    VertexSet w = info.build(g);
    for (const auto& e : info.expectations) {
      SetCheck r = check_set(e.kind, d, w);
      out.push_back({std::string(info.name), e.kind, e.should_pass, r.passed, w.size(),
                     info.expected_size(g.params()), r.violation});
    }
  }
  return out;
}

}  // namespace lsg
