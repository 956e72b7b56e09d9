#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lsg/error.hpp"
#include "lsg/graph.hpp"
#include "lsg/resolving.hpp"

namespace lsg {

// ---------------------------------------------------------------------------
// Twins

/// open: N(u) = N(v). closed: N[u] = N[v]. any: N(u)\{v} = N(v)\{u}, the
/// union of both (a vertex cannot have an open and a closed twin at once).
enum class TwinKind { open, closed, any };

struct TwinPartition {
  /// Every vertex appears in exactly one class; classes ordered by their
  /// smallest member, members ascending.
  std::vector<std::vector<Vertex>> classes;
};

namespace detail {

inline std::vector<std::vector<Vertex>> group_by_key(
    std::size_t n, const std::vector<std::vector<Vertex>>& keys) {
  std::map<std::vector<Vertex>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) groups[keys[v]].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [key, members] : groups) out.push_back(std::move(members));
  return out;
}

inline TwinPartition normalized(std::vector<std::vector<Vertex>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return {std::move(classes)};
}

}  // namespace detail

inline TwinPartition twin_partition(const Graph& g, TwinKind kind = TwinKind::any) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> open_keys(n), closed_keys(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    open_keys[v].assign(nb.begin(), nb.end());
    closed_keys[v] = open_keys[v];
    closed_keys[v].insert(std::upper_bound(closed_keys[v].begin(), closed_keys[v].end(), v), v);
  }
  if (kind == TwinKind::open) return detail::normalized(detail::group_by_key(n, open_keys));
  if (kind == TwinKind::closed) return detail::normalized(detail::group_by_key(n, closed_keys));

  std::vector<int> owner(n, -1);
  std::vector<std::vector<Vertex>> classes;
  for (const auto* keys : {&open_keys, &closed_keys}) {
    for (auto& c : detail::group_by_key(n, *keys)) {
      if (c.size() < 2) continue;
      for (Vertex v : c) owner[v] = static_cast<int>(classes.size());
      classes.push_back(std::move(c));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] < 0) classes.push_back({v});
  }
  return detail::normalized(std::move(classes));
}

/// Twins from distances alone: u ~ v iff d(u,x) = d(v,x) for every other x.
/// Coincides with TwinKind::any on connected graphs.
inline TwinPartition twin_partition(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  std::vector<int> owner(n, -1);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex u = 0; u < n; ++u) {
    if (owner[u] >= 0) continue;
    owner[u] = static_cast<int>(classes.size());
    classes.push_back({u});
    for (Vertex v = u + 1; v < n; ++v) {
      if (owner[v] >= 0) continue;
      bool twins = true;
      for (Vertex x = 0; x < n && twins; ++x) {
        if (x != u && x != v && d(u, x) != d(v, x)) twins = false;
      }
      if (twins) {
        owner[v] = owner[u];
        classes.back().push_back(v);
      }
    }
  }
  return {std::move(classes)};
}

/// Sum of (|class| - 1): a set missing two twins cannot tell them apart by
/// distances, so every resolving set contains all but one of each class.
inline std::size_t twin_lower_bound(const TwinPartition& tp) {
  std::size_t total = 0;
  for (const auto& c : tp.classes) total += c.size() - 1;
  return total;
}

// ---------------------------------------------------------------------------
// Exact minimum search

struct SolveOptions {
  /// Maximum number of predicate evaluations.
  std::uint64_t budget = 100'000'000;
  /// Known solution; caps the cardinalities that must be searched.
  std::optional<VertexSet> upper_bound;
};

struct SolveResult {
  std::size_t value = 0;
  /// First optimal set in lexicographic enumeration order.
  VertexSet set;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::uint64_t evaluations = 0;
  /// (cardinality, candidates examined) for every cardinality scanned without
  /// success before `value`.
  std::vector<std::pair<std::size_t, std::uint64_t>> refutations;
};

namespace detail {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

/// Subsets of 0..n-1 that keep all but at most one member of each
/// constrained class, enumerated by cardinality in lexicographic order.
class ConstrainedSubsets {
 public:
  /// `classes` lists the constrained groups (size >= 2); other vertices are free.
  ConstrainedSubsets(std::size_t n, const std::vector<std::vector<Vertex>>& classes)
      : n_(n), class_of_(n, -1) {
    for (const auto& c : classes) {
      if (c.size() < 2) continue;
      for (Vertex v : c) class_of_[v] = static_cast<int>(class_size_.size());
      class_size_.push_back(c.size());
    }
  }

  std::size_t minimum_size() const {
    std::size_t s = 0;
    for (auto c : class_size_) s += c - 1;
    return s;
  }

  /// Number of admissible subsets of each cardinality 0..n (saturating).
  std::vector<std::uint64_t> counts() const {
    std::vector<std::uint64_t> poly(n_ + 1, 0);
    poly[0] = 1;
    std::size_t degree = 0;
    auto multiply = [&](auto&& factor, std::size_t factor_degree) {
      std::vector<std::uint64_t> next(n_ + 1, 0);
      for (std::size_t a = 0; a <= degree; ++a) {
        if (poly[a] == 0) continue;
        for (std::size_t b = 0; b <= factor_degree; ++b) {
          std::uint64_t f = factor(b);
          if (f) next[a + b] = sat_add(next[a + b], sat_mul(poly[a], f));
        }
      }
      poly.swap(next);
      degree += factor_degree;
    };
    std::size_t free = 0;
    for (auto c : class_of_) free += c < 0 ? 1 : 0;
    for (std::size_t i = 0; i < free; ++i) {
      multiply([](std::size_t) -> std::uint64_t { return 1; }, 1);  // (1 + x)
    }
    for (auto s : class_size_) {
      // s x^(s-1) + x^s
      multiply([s](std::size_t b) -> std::uint64_t {
        return b == s - 1 ? s : (b == s ? 1 : 0);
      }, s);
    }
    return poly;
  }

  /// Calls visit(span) for each admissible subset of size c in lexicographic
  /// order until visit returns true. Returns whether it did.
  template <typename Visit>
  bool for_each(std::size_t c, Visit&& visit) {
    target_ = c;
    chosen_.clear();
    excluded_.assign(class_size_.size(), 0);
    remaining_.assign(class_size_.begin(), class_size_.end());
    forced_ = 0;
    for (auto s : class_size_) forced_ += s - 1;
    return recurse(0, visit);
  }

 private:
  std::size_t forced_of(std::size_t cls) const {
    std::size_t slack = excluded_[cls] ? 0 : 1;
    return remaining_[cls] > slack ? remaining_[cls] - slack : 0;
  }

  template <typename Visit>
  bool recurse(std::size_t pos, Visit& visit) {
    const std::size_t need = target_ - chosen_.size();
    if (forced_ > need) return false;
    if (need == 0) return visit(std::span<const Vertex>(chosen_));
    if (need > n_ - pos) return false;

    const int cls = class_of_[pos];
    std::size_t before = 0;
    if (cls >= 0) {
      before = forced_of(static_cast<std::size_t>(cls));
      --remaining_[static_cast<std::size_t>(cls)];
      forced_ = forced_ - before + forced_of(static_cast<std::size_t>(cls));
    }

    chosen_.push_back(static_cast<Vertex>(pos));
    bool found = recurse(pos + 1, visit);
    chosen_.pop_back();

    if (!found) {
      if (cls < 0) {
        found = recurse(pos + 1, visit);
      } else if (!excluded_[static_cast<std::size_t>(cls)]) {
        std::size_t mid = forced_of(static_cast<std::size_t>(cls));
        excluded_[static_cast<std::size_t>(cls)] = 1;
        forced_ = forced_ - mid + forced_of(static_cast<std::size_t>(cls));
        found = recurse(pos + 1, visit);
        std::size_t after = forced_of(static_cast<std::size_t>(cls));
        excluded_[static_cast<std::size_t>(cls)] = 0;
        forced_ = forced_ - after + mid;
      }
    }

    if (cls >= 0) {
      std::size_t now = forced_of(static_cast<std::size_t>(cls));
      ++remaining_[static_cast<std::size_t>(cls)];
      forced_ = forced_ - now + before;
    }
    return found;
  }

  std::size_t n_;
  std::vector<int> class_of_;
  std::vector<std::size_t> class_size_;
  std::size_t target_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<char> excluded_;
  std::vector<std::size_t> remaining_;
  std::size_t forced_ = 0;
};

/// Ascends cardinality from `lower` to `upper`, evaluating admissible subsets
/// in lexicographic order; the first passing subset is optimal.
template <typename Pred>
SolveResult ascending_search(std::size_t n, const std::vector<std::vector<Vertex>>& classes,
                             std::size_t lower, std::size_t upper, std::uint64_t budget,
                             Pred&& pred, const char* what) {
  ConstrainedSubsets subsets(n, classes);
  lower = std::max(lower, subsets.minimum_size());
  const auto counts = subsets.counts();
  std::uint64_t worst = 0;
  for (std::size_t c = lower; c <= upper && c <= n; ++c) worst = sat_add(worst, counts[c]);
  if (worst > budget) {
    throw BudgetExceeded(lower, upper, 0,
                         std::string(what) + ": search space of " +
                             (worst == kSaturated ? std::string("> 2^64") : std::to_string(worst)) +
                             " candidates exceeds budget " + std::to_string(budget));
  }

  SolveResult result;
  result.lower_bound = lower;
  result.upper_bound = upper;
  for (std::size_t c = lower; c <= upper; ++c) {
    std::uint64_t examined = 0;
    std::vector<Vertex> found;
    bool hit = subsets.for_each(c, [&](std::span<const Vertex> w) {
      ++examined;
      if (++result.evaluations > budget) {
        throw BudgetExceeded(c, upper, result.evaluations,
                             std::string(what) + ": evaluation budget exhausted");
      }
      if (!pred(w)) return false;
      found.assign(w.begin(), w.end());
      return true;
    });
    if (hit) {
      result.value = c;
      result.set = VertexSet(std::move(found), n);
      return result;
    }
    result.refutations.emplace_back(c, examined);
  }
  throw Error(ErrorKind::BadInput, std::string(what) + ": no solution up to the upper bound");
}

inline void require_search_input(const DistanceMatrix& d) {
  if (d.size() < 2) throw Error(ErrorKind::BadInput, "exact solvers need at least 2 vertices");
}

inline std::size_t checked_upper(const std::optional<VertexSet>& hint, std::size_t fallback,
                                 const DistanceMatrix& d, ResolvingKind kind) {
  if (hint && hint->vertex_count() == d.size() && hint->size() < fallback &&
      (kind != ResolvingKind::doubly || hint->size() >= 2) && !hint->empty() &&
      check_set(kind, d, *hint).passed) {
    return hint->size();
  }
  return fallback;
}

}  // namespace detail

/// Metric dimension. Candidates keep all but one vertex of every twin class.
inline SolveResult min_resolving_set(const DistanceMatrix& d, const SolveOptions& opts = {}) {
  detail::require_search_input(d);
  const auto tp = twin_partition(d);
  const std::size_t lower = std::max<std::size_t>(1, twin_lower_bound(tp));
  const std::size_t upper =
      detail::checked_upper(opts.upper_bound, d.size() - 1, d, ResolvingKind::resolving);
  RowCollisionChecker check(d, ResolvingKind::resolving);
  return detail::ascending_search(d.size(), tp.classes, lower, upper, opts.budget, check,
                                  "min_resolving_set");
}

/// psi. Same twin pruning: twins u, v outside W give equal differences for
/// every x, y in W.
inline SolveResult min_doubly_resolving_set(const DistanceMatrix& d,
                                            const SolveOptions& opts = {}) {
  detail::require_search_input(d);
  const auto tp = twin_partition(d);
  const std::size_t lower = std::max<std::size_t>(2, twin_lower_bound(tp));
  const std::size_t upper = detail::checked_upper(opts.upper_bound, d.size(), d,
                                                  ResolvingKind::doubly);
  RowCollisionChecker check(d, ResolvingKind::doubly);
  return detail::ascending_search(d.size(), tp.classes, lower, upper, opts.budget, check,
                                  "min_doubly_resolving_set");
}

namespace detail {

// Per vertex pair, the bitmask of vertices that strongly resolve it; pairs
// with the fewest resolvers come first so failing candidates exit early.
class StrongMaskChecker {
 public:
  explicit StrongMaskChecker(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        std::uint64_t m = 0;
        for (Vertex w = 0; w < n; ++w) {
          if (strongly_resolves(d, w, u, v)) m |= std::uint64_t{1} << w;
        }
        masks_.push_back(m);
      }
    }
    std::stable_sort(masks_.begin(), masks_.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) < std::popcount(b);
    });
  }

  bool operator()(std::span<const Vertex> w) const {
    std::uint64_t set = 0;
    for (Vertex x : w) set |= std::uint64_t{1} << x;
    for (auto m : masks_) {
      if ((m & set) == 0) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> masks_;
};

}  // namespace detail

/// sdim by a plain cardinality-ascending scan over all subsets.
inline SolveResult min_strong_resolving_set_direct(const DistanceMatrix& d,
                                                   const SolveOptions& opts = {}) {
  detail::require_search_input(d);
  const std::size_t upper =
      detail::checked_upper(opts.upper_bound, d.size() - 1, d, ResolvingKind::strong);
  const std::vector<std::vector<Vertex>> no_classes;
  if (d.size() <= 64) {
    detail::StrongMaskChecker check(d);
    return detail::ascending_search(d.size(), no_classes, 1, upper, opts.budget, check,
                                    "min_strong_resolving_set_direct");
  }
  auto check = [&](std::span<const Vertex> w) {
    return is_strong_resolving_set(d, VertexSet({w.begin(), w.end()}, d.size())).passed;
  };
  return detail::ascending_search(d.size(), no_classes, 1, upper, opts.budget, check,
                                  "min_strong_resolving_set_direct");
}

// ---------------------------------------------------------------------------
// Strong resolving graph and vertex cover

/// u is maximally distant from v when no neighbour of u is farther from v.
inline bool maximally_distant(const DistanceMatrix& d, const Graph& g, Vertex u, Vertex v) {
  for (Vertex w : g.neighbors(u)) {
    if (d(v, w) > d(v, u)) return false;
  }
  return true;
}

struct StrongResolvingGraph {
  /// Same vertex set as the source; edges join mutually maximally distant pairs.
  Graph graph;
};

inline StrongResolvingGraph strong_resolving_graph(const DistanceMatrix& d, const Graph& g) {
  EdgeList edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (maximally_distant(d, g, u, v) && maximally_distant(d, g, v, u)) edges.emplace_back(u, v);
    }
  }
  return {build_graph(g.vertex_count(), edges)};
}

struct VertexCoverResult {
  std::size_t size = 0;
  VertexSet cover;
  std::uint64_t nodes = 0;
};

namespace detail {

class VertexCoverSearch {
 public:
  VertexCoverSearch(const Graph& g, std::uint64_t budget)
      : g_(g), alive_(g.vertex_count(), 1), budget_(budget) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) best_.push_back(v);
  }

  VertexCoverResult run() {
    recurse();
    return {best_.size(), VertexSet(best_, g_.vertex_count()), nodes_};
  }

 private:
  std::size_t live_degree(Vertex v) const {
    std::size_t deg = 0;
    for (Vertex w : g_.neighbors(v)) deg += alive_[w];
    return deg;
  }

  // Greedy maximal matching on the live graph.
  std::size_t matching_bound() const {
    std::vector<char> used(g_.vertex_count(), 0);
    std::size_t size = 0;
    for (Vertex u = 0; u < g_.vertex_count(); ++u) {
      if (!alive_[u] || used[u]) continue;
      for (Vertex w : g_.neighbors(u)) {
        if (alive_[w] && !used[w]) {
          used[u] = used[w] = 1;
          ++size;
          break;
        }
      }
    }
    return size;
  }

  void take(Vertex v, std::vector<Vertex>& undo) {
    alive_[v] = 0;
    cover_.push_back(v);
    undo.push_back(v);
  }

  void restore(std::vector<Vertex>& undo, std::size_t mark) {
    while (undo.size() > mark) {
      alive_[undo.back()] = 1;
      cover_.pop_back();
      undo.pop_back();
    }
  }

  void recurse() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded(matching_bound() + cover_.size(), best_.size(), nodes_,
                           "vertex cover search exhausted its budget");
    }
    std::vector<Vertex> undo;
    // Degree-1 rule: some optimal cover takes the neighbour of a pendant vertex.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        if (!alive_[v] || live_degree(v) != 1) continue;
        for (Vertex w : g_.neighbors(v)) {
          if (alive_[w]) {
            take(w, undo);
            break;
          }
        }
        changed = true;
      }
    }

    Vertex pick = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (!alive_[v]) continue;
      std::size_t deg = live_degree(v);
      if (deg > best_deg) {
        best_deg = deg;
        pick = v;
      }
    }
    if (best_deg == 0) {
      if (cover_.size() < best_.size()) {
        best_ = cover_;
        std::sort(best_.begin(), best_.end());
      }
      restore(undo, 0);
      return;
    }
    if (cover_.size() + matching_bound() >= best_.size()) {
      restore(undo, 0);
      return;
    }

    const std::size_t mark = undo.size();
    take(pick, undo);
    recurse();
    restore(undo, mark);

    if (cover_.size() + best_deg < best_.size()) {
      for (Vertex w : g_.neighbors(pick)) {
        if (alive_[w]) take(w, undo);
      }
      alive_[pick] = 0;
      recurse();
      alive_[pick] = 1;
      restore(undo, mark);
    }
    restore(undo, 0);
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<Vertex> cover_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

}  // namespace detail

/// Exact minimum vertex cover: branch on a maximum-degree vertex (take it, or
/// take all its neighbours), pruned by a maximal-matching lower bound.
inline VertexCoverResult min_vertex_cover(const Graph& g, std::uint64_t budget = 100'000'000) {
  return detail::VertexCoverSearch(g, budget).run();
}

/// sdim as the vertex cover number of the strong resolving graph.
inline VertexCoverResult sdim_via_vertex_cover(const StrongResolvingGraph& srg,
                                               std::uint64_t budget = 100'000'000) {
  return min_vertex_cover(srg.graph, budget);
}

}  // namespace lsg
