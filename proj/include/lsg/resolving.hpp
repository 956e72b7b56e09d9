#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lsg/error.hpp"
#include "lsg/graph.hpp"

namespace lsg {

/// Sorted set of vertex ids of a graph with a known vertex count.
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(std::vector<Vertex> members, std::size_t vertex_count)
      : members_(std::move(members)), vertex_count_(vertex_count) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw Error(ErrorKind::BadInput, "vertex set lists a vertex twice");
    }
    if (!members_.empty() && members_.back() >= vertex_count_) {
      throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(members_.back()) +
                                             " not in a graph of " +
                                             std::to_string(vertex_count_) + " vertices");
    }
  }

  static VertexSet all(std::size_t vertex_count) {
    std::vector<Vertex> members(vertex_count);
    std::iota(members.begin(), members.end(), Vertex{0});
    return VertexSet(std::move(members), vertex_count);
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::span<const Vertex> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members_ == b.members_;
  }

 private:
  std::vector<Vertex> members_;
  std::size_t vertex_count_ = 0;
};

using Representation = std::vector<DistanceMatrix::value_type>;

/// Outcome of a set predicate. On failure `violation` names a pair of
/// distinct vertices that the set does not separate.
struct SetCheck {
  bool passed = true;
  std::optional<std::pair<Vertex, Vertex>> violation;

  explicit operator bool() const noexcept { return passed; }
};

inline Representation metric_representation(const DistanceMatrix& d, Vertex v,
                                            const VertexSet& w) {
  if (w.empty()) throw Error(ErrorKind::EmptySet, "metric representation needs a non-empty set");
  Representation r;
  r.reserve(w.size());
  for (Vertex x : w) r.push_back(d(v, x));
  return r;
}

namespace detail {

// Rows of a |V| x width integer table; returns the first pair (in sorted row
// order) of vertices with identical rows.
inline SetCheck first_duplicate_row(const std::vector<int>& rows, std::size_t n,
                                    std::size_t width) {
  std::vector<Vertex> idx(n);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  auto row = [&](Vertex v) { return rows.begin() + static_cast<std::ptrdiff_t>(v * width); };
  std::stable_sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) {
    return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(width),
                                        row(b), row(b) + static_cast<std::ptrdiff_t>(width));
  });
  for (std::size_t x = 1; x < n; ++x) {
    if (std::equal(row(idx[x - 1]), row(idx[x - 1]) + static_cast<std::ptrdiff_t>(width),
                   row(idx[x]))) {
      return {false, std::make_pair(std::min(idx[x - 1], idx[x]), std::max(idx[x - 1], idx[x]))};
    }
  }
  return {};
}

}  // namespace detail

/// W resolves G iff all metric representations r(v|W) are pairwise distinct.
inline SetCheck is_resolving_set(const DistanceMatrix& d, const VertexSet& w) {
  if (w.empty()) throw Error(ErrorKind::EmptySet, "resolving check needs a non-empty set");
  const std::size_t n = d.size();
  std::vector<int> rows(n * w.size());
  for (Vertex v = 0; v < n; ++v) {
    std::size_t c = 0;
    for (Vertex x : w) rows[v * w.size() + c++] = d(v, x);
  }
  return detail::first_duplicate_row(rows, n, w.size());
}

/// x, y doubly resolve u, v iff d(u,x) - d(u,y) != d(v,x) - d(v,y).
inline bool doubly_resolves(const DistanceMatrix& d, Vertex x, Vertex y, Vertex u, Vertex v) {
  return int{d(u, x)} - int{d(u, y)} != int{d(v, x)} - int{d(v, y)};
}

/// Fixing y = w_0, a pair u, v is doubly resolved by W iff the vectors
/// (d(u,x) - d(u,w_0))_{x in W} and (d(v,x) - d(v,w_0))_{x in W} differ.
inline SetCheck is_doubly_resolving_set(const DistanceMatrix& d, const VertexSet& w) {
  if (w.size() < 2) throw Error(ErrorKind::SetTooSmall, "doubly resolving check needs |W| >= 2");
  const std::size_t n = d.size();
  const std::size_t width = w.size() - 1;
  const Vertex anchor = w.members().front();
  std::vector<int> rows(n * width);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t c = 0;
    for (Vertex x : w.members().subspan(1)) rows[v * width + c++] = int{d(v, x)} - int{d(v, anchor)};
  }
  return detail::first_duplicate_row(rows, n, width);
}

/// w strongly resolves u, v iff u lies on a shortest w-v path or v on a
/// shortest w-u path.
inline bool strongly_resolves(const DistanceMatrix& d, Vertex w, Vertex u, Vertex v) {
  return d(w, u) + d(u, v) == d(w, v) || d(w, v) + d(v, u) == d(w, u);
}

inline SetCheck is_strong_resolving_set(const DistanceMatrix& d, const VertexSet& w) {
  if (w.empty()) throw Error(ErrorKind::EmptySet, "strong resolving check needs a non-empty set");
  const std::size_t n = d.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool resolved = false;
      for (Vertex x : w) {
        if (strongly_resolves(d, x, u, v)) {
          resolved = true;
          break;
        }
      }
      if (!resolved) return {false, std::make_pair(u, v)};
    }
  }
  return {};
}

enum class ResolvingKind { resolving, doubly, strong };

inline const char* to_string(ResolvingKind kind) {
  switch (kind) {
    case ResolvingKind::resolving: return "resolving";
    case ResolvingKind::doubly: return "doubly";
    case ResolvingKind::strong: return "strong";
  }
  return "?";
}

inline SetCheck check_set(ResolvingKind kind, const DistanceMatrix& d, const VertexSet& w) {
  switch (kind) {
    case ResolvingKind::resolving: return is_resolving_set(d, w);
    case ResolvingKind::doubly: return is_doubly_resolving_set(d, w);
    case ResolvingKind::strong: return is_strong_resolving_set(d, w);
  }
  return {};
}

/// Boolean resolving / doubly-resolving test with reusable buffers and early
/// exit on the first colliding pair. Used in solver inner loops; agrees with
/// the SetCheck predicates above.
class RowCollisionChecker {
 public:
  RowCollisionChecker(const DistanceMatrix& d, ResolvingKind kind) : d_(d), kind_(kind) {
    std::size_t cap = 4;
    while (cap < 2 * d.size()) cap <<= 1;
    slots_.assign(cap, 0);
    hashes_.assign(cap, 0);
  }

  bool operator()(std::span<const Vertex> w) {
    const std::size_t n = d_.size();
    const bool doubly = kind_ == ResolvingKind::doubly;
    if (w.empty() || (doubly && w.size() < 2)) return n <= 1;
    const auto cols = doubly ? w.subspan(1) : w;
    const std::size_t width = cols.size();
    rows_.resize(n * width);
    std::fill(slots_.begin(), slots_.end(), 0u);
    const std::size_t mask = slots_.size() - 1;

    for (Vertex v = 0; v < n; ++v) {
      int* row = rows_.data() + v * width;
      const auto dv = d_.row(v);
      const int base = doubly ? int{dv[w[0]]} : 0;
      std::uint64_t h = 1469598103934665603ull;
      for (std::size_t c = 0; c < width; ++c) {
        row[c] = int{dv[cols[c]]} - base;
        h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(row[c]))) * 1099511628211ull;
      }
      std::size_t slot = (h ^ (h >> 29)) & mask;
      while (slots_[slot] != 0) {
        const Vertex other = slots_[slot] - 1;
        if (hashes_[slot] == h &&
            std::equal(row, row + width, rows_.data() + other * width)) {
          return false;
        }
        slot = (slot + 1) & mask;
      }
      slots_[slot] = v + 1;
      hashes_[slot] = h;
    }
    return true;
  }

 private:
  const DistanceMatrix& d_;
  ResolvingKind kind_;
  std::vector<int> rows_;
  std::vector<Vertex> slots_;
  std::vector<std::uint64_t> hashes_;
};

}  // namespace lsg
