#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lsg/families.hpp"
#include "lsg/resolving.hpp"
#include "lsg/solvers.hpp"
#include "lsg/witnesses.hpp"

namespace lsg {

/// One exactly-computed invariant, or the reason it was not computed.
struct ComputedValue {
  std::optional<std::size_t> value;
  /// Optimal set found by the search; passes the predicate.
  std::optional<VertexSet> certificate;
  std::vector<std::pair<std::size_t, std::uint64_t>> refutations;
  std::uint64_t evaluations = 0;
  /// Bounds reported when the search was skipped for budget reasons.
  std::optional<std::pair<std::size_t, std::size_t>> bounds;
  bool requested = false;
  double ms = 0.0;
  std::string note;
};

struct ParameterReport {
  LayerSunParams params;
  Variant variant = Variant::base;
  std::size_t order = 0;
  Formulas formula{};
  ComputedValue beta, psi, sdim;
  std::optional<std::size_t> sdim_vertex_cover;
  std::size_t twin_bound = 0;
  std::vector<WitnessOutcome> witnesses;
  double ms = 0.0;

  bool witnesses_ok() const {
    for (const auto& w : witnesses) {
      if (!w.ok()) return false;
    }
    return true;
  }

  std::uint64_t predicate_evals() const {
    return beta.evaluations + psi.evaluations + sdim.evaluations;
  }

  bool budget_exceeded() const {
    return (beta.requested && !beta.value) || (psi.requested && !psi.value) ||
           (sdim.requested && !sdim.value);
  }

  /// Human-readable list of every disagreement with the closed forms.
  std::vector<std::string> mismatches() const {
    std::vector<std::string> out;
    auto cmp = [&](const char* name, const ComputedValue& c, std::size_t formula) {
      if (c.value && *c.value != formula) {
        out.push_back(std::string(name) + " computed " + std::to_string(*c.value) +
                      " != formula " + std::to_string(formula));
      }
    };
    cmp("beta", beta, formula.beta);
    cmp("psi", psi, formula.psi);
    cmp("sdim", sdim, formula.sdim);
    if (sdim_vertex_cover) {
      if (*sdim_vertex_cover != formula.sdim) {
        out.push_back("sdim by vertex cover " + std::to_string(*sdim_vertex_cover) +
                      " != formula " + std::to_string(formula.sdim));
      }
      if (sdim.value && *sdim.value != *sdim_vertex_cover) {
        out.push_back("sdim direct " + std::to_string(*sdim.value) + " != vertex cover " +
                      std::to_string(*sdim_vertex_cover));
      }
    }
    for (const auto& w : witnesses) {
      if (!w.ok()) {
        out.push_back("witness " + w.name + " (" + to_string(w.kind) + ") expected " +
                      (w.should_pass ? "pass" : "fail") + " size " +
                      std::to_string(w.expected_size) + ", got " +
                      (w.passed ? "pass" : "fail") + " size " + std::to_string(w.size));
      }
    }
    return out;
  }
};

struct Which {
  bool beta = true;
  bool psi = true;
  bool sdim = true;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

template <typename Solver>
ComputedValue run_solver(Solver&& solver, const DistanceMatrix& d, SolveOptions opts) {
  ComputedValue out;
  out.requested = true;
  auto start = std::chrono::steady_clock::now();
  try {
    SolveResult r = solver(d, opts);
    out.value = r.value;
    out.certificate = r.set;
    out.refutations = r.refutations;
    out.evaluations = r.evaluations;
  } catch (const BudgetExceeded& e) {
    out.bounds = std::make_pair(e.lower_bound(), e.upper_bound());
    out.evaluations = e.evaluations();
    out.note = "witness-only";
  }
  out.ms = elapsed_ms(start);
  return out;
}

}  // namespace detail

/// Closed forms, witness checks, and whichever exact minima fit the budget.
inline ParameterReport full_report(const LayerSunParams& p, Variant variant,
                                   std::uint64_t budget = SolveOptions{}.budget,
                                   Which which = {}) {
  p.validate();
  const auto start = std::chrono::steady_clock::now();
  ParameterReport rep;
  rep.params = p;
  rep.variant = variant;
  rep.formula = formulas(p, variant);

  const LabeledGraph g = build_family(p, variant);
  rep.order = g.vertex_count();
  const DistanceMatrix d = all_pairs_distances(g.graph());
  rep.witnesses = check_witnesses(g, d);
  rep.twin_bound = twin_lower_bound(twin_partition(d));

  const bool base = variant == Variant::base;
  const VertexSet beta_hint = base ? beta_witness(g) : line_psi_witness(g);
  const VertexSet psi_hint = base ? psi_witness(g) : line_psi_witness(g);
  const VertexSet sdim_hint = base ? sdim_witness(g) : line_sdim_witness(g);

  if (which.beta) {
    rep.beta = detail::run_solver(
        [](const DistanceMatrix& dm, const SolveOptions& o) { return min_resolving_set(dm, o); }, d,
        {budget, beta_hint});
  }
  if (which.psi) {
    rep.psi = detail::run_solver(
        [](const DistanceMatrix& dm, const SolveOptions& o) {
          return min_doubly_resolving_set(dm, o);
        },
        d, {budget, psi_hint});
  }
  if (which.sdim) {
    rep.sdim = detail::run_solver(
        [](const DistanceMatrix& dm, const SolveOptions& o) {
          return min_strong_resolving_set_direct(dm, o);
        },
        d, {budget, sdim_hint});
    try {
      rep.sdim_vertex_cover =
          sdim_via_vertex_cover(strong_resolving_graph(d, g.graph()), budget).size;
    } catch (const BudgetExceeded&) {
    }
  }
  rep.ms = detail::elapsed_ms(start);
  return rep;
}

inline std::string csv_header() {
  return "n,m,k,variant,order,beta_formula,beta_computed,psi_formula,psi_computed,"
         "sdim_formula,sdim_computed,witnesses_ok,predicate_evals,ms";
}

/// Wall time goes in the last column only when `timings` is set, so that
/// default output is reproducible byte for byte.
inline std::string csv_row(const ParameterReport& r, bool timings = false) {
  auto opt = [](const ComputedValue& c) { return c.value ? std::to_string(*c.value) : ""; };
  std::ostringstream os;
  os << r.params.n << ',' << r.params.m << ',' << r.params.k << ',' << to_string(r.variant) << ','
     << r.order << ',' << r.formula.beta << ',' << opt(r.beta) << ',' << r.formula.psi << ','
     << opt(r.psi) << ',' << r.formula.sdim << ',' << opt(r.sdim) << ','
     << (r.witnesses_ok() ? "true" : "false") << ',' << r.predicate_evals() << ',';
  if (timings) os << static_cast<long long>(r.ms + 0.5);
  return os.str();
}

}  // namespace lsg
