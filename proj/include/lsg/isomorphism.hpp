#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lsg/error.hpp"
#include "lsg/graph.hpp"

namespace lsg {

struct IsomorphismLimits {
  std::size_t max_vertices = 256;
  std::uint64_t max_steps = 50'000'000;
};

namespace detail {

// Colour refinement run on both graphs at once so that colour ids are
// comparable across them. Returns stable colours for g1 followed by g2.
inline std::vector<std::uint32_t> joint_refinement(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n = n1 + g2.vertex_count();
  auto nbrs = [&](std::size_t v) {
    return v < n1 ? g1.neighbors(static_cast<Vertex>(v))
                  : g2.neighbors(static_cast<Vertex>(v - n1));
  };
  auto offset = [&](std::size_t v) { return v < n1 ? std::size_t{0} : n1; };

  std::vector<std::uint32_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = static_cast<std::uint32_t>(nbrs(v).size());

  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> sigs(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& sig = sigs[v];
      sig.push_back(colour[v]);
      for (Vertex w : nbrs(v)) sig.push_back(colour[w + offset(v)]);
      std::sort(sig.begin() + 1, sig.end());
      ids.emplace(sig, 0);
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids[sigs[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g1, const Graph& g2, std::vector<std::uint32_t> c1,
            std::vector<std::uint32_t> c2, std::uint64_t max_steps)
      : g1_(g1), g2_(g2), c1_(std::move(c1)), c2_(std::move(c2)), max_steps_(max_steps) {
    const std::size_t n = g1.vertex_count();
    map_.assign(n, kNone);
    inv_.assign(n, kNone);
    build_order();
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  // Start each component at a vertex of the rarest colour, then BFS so that
  // every later vertex has a mapped neighbour constraining its candidates.
  void build_order() {
    const std::size_t n = g1_.vertex_count();
    std::map<std::uint32_t, std::size_t> freq;
    for (auto c : c1_) ++freq[c];
    std::vector<Vertex> by_rarity(n);
    for (Vertex v = 0; v < n; ++v) by_rarity[v] = v;
    std::stable_sort(by_rarity.begin(), by_rarity.end(),
                     [&](Vertex a, Vertex b) { return freq[c1_[a]] < freq[c1_[b]]; });
    std::vector<char> seen(n, 0);
    for (Vertex root : by_rarity) {
      if (seen[root]) continue;
      seen[root] = 1;
      std::size_t head = order_.size();
      order_.push_back(root);
      while (head < order_.size()) {
        Vertex u = order_[head++];
        for (Vertex w : g1_.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool consistent(Vertex v, Vertex image) const {
    if (c1_[v] != c2_[image] || inv_[image] != kNone) return false;
    std::size_t mapped_nbrs = 0;
    for (Vertex w : g1_.neighbors(v)) {
      if (map_[w] == kNone) continue;
      if (!g2_.adjacent(image, map_[w])) return false;
      ++mapped_nbrs;
    }
    std::size_t mapped_image_nbrs = 0;
    for (Vertex w : g2_.neighbors(image)) {
      if (inv_[w] != kNone) ++mapped_image_nbrs;
    }
    return mapped_nbrs == mapped_image_nbrs;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++steps_ > max_steps_) {
      throw Error(ErrorKind::SizeLimitExceeded, "isomorphism search exceeded step limit");
    }
    const Vertex v = order_[depth];
    Vertex anchor = kNone;
    for (Vertex w : g1_.neighbors(v)) {
      if (map_[w] != kNone) {
        anchor = map_[w];
        break;
      }
    }
    auto attempt = [&](Vertex image) {
      if (!consistent(v, image)) return false;
      map_[v] = image;
      inv_[image] = v;
      if (extend(depth + 1)) return true;
      map_[v] = kNone;
      inv_[image] = kNone;
      return false;
    };
    if (anchor != kNone) {
      for (Vertex image : g2_.neighbors(anchor)) {
        if (attempt(image)) return true;
      }
    } else {
      for (Vertex image = 0; image < g2_.vertex_count(); ++image) {
        if (attempt(image)) return true;
      }
    }
    return false;
  }

  const Graph& g1_;
  const Graph& g2_;
  std::vector<std::uint32_t> c1_, c2_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_, inv_;
  std::uint64_t steps_ = 0;
  std::uint64_t max_steps_;
};

}  // namespace detail

/// Returns a bijection f with u~v in g1 iff f[u]~f[v] in g2, or nullopt.
/// Degree-sequence prefilter, then colour refinement, then backtracking.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                           IsomorphismLimits limits = {}) {
  const std::size_t n = g1.vertex_count();
  if (std::max(n, g2.vertex_count()) > limits.max_vertices) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "isomorphism check limited to " + std::to_string(limits.max_vertices) + " vertices");
  }
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;

  std::vector<std::size_t> deg1(n), deg2(n);
  for (Vertex v = 0; v < n; ++v) {
    deg1[v] = g1.degree(v);
    deg2[v] = g2.degree(v);
  }
  std::sort(deg1.begin(), deg1.end());
  std::sort(deg2.begin(), deg2.end());
  if (deg1 != deg2) return std::nullopt;

  auto colours = detail::joint_refinement(g1, g2);
  std::vector<std::uint32_t> c1(colours.begin(), colours.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::uint32_t> c2(colours.begin() + static_cast<std::ptrdiff_t>(n), colours.end());
  auto h1 = c1, h2 = c2;
  std::sort(h1.begin(), h1.end());
  std::sort(h2.begin(), h2.end());
  if (h1 != h2) return std::nullopt;

  return detail::IsoSearch(g1, g2, std::move(c1), std::move(c2), limits.max_steps).run();
}

inline bool is_isomorphic(const Graph& g1, const Graph& g2, IsomorphismLimits limits = {}) {
  return find_isomorphism(g1, g2, limits).has_value();
}

}  // namespace lsg
