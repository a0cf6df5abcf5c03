#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "hudg/graph.hpp"
#include "hudg/random.hpp"

namespace hudg::oracle {

using EdgeVec = std::vector<std::pair<Vertex, Vertex>>;

// Plain adjacency-set BFS.
inline std::map<Vertex, std::uint32_t> bfs(const std::vector<std::set<Vertex>>& adj, Vertex s,
                                           const std::set<Vertex>& alive) {
  std::map<Vertex, std::uint32_t> dist;
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u]) {
      if (alive.count(w) && !dist.count(w)) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

inline std::vector<std::set<Vertex>> adjacency(std::size_t n, const EdgeVec& edges) {
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

struct ReferenceTree {
  Vertex root;
  std::uint32_t phase;
  std::map<Vertex, std::uint32_t> depth;  // residual-graph BFS distance
  std::set<Vertex> deleted;
};

// Step-by-step PROTON simulation on adjacency sets with integer cutoffs.
// `priority` orders candidate roots (smaller first).
template <class Priority>
std::vector<ReferenceTree> reference_proton(std::size_t n, const EdgeVec& edges, double a, double b,
                                            Priority priority) {
  const auto adj = adjacency(n, edges);
  std::set<Vertex> everyone;
  for (Vertex v = 0; v < n; ++v) everyone.insert(v);

  // Components in order of smallest member.
  std::vector<std::set<Vertex>> components;
  std::set<Vertex> seen;
  for (Vertex v = 0; v < n; ++v) {
    if (seen.count(v)) continue;
    std::set<Vertex> comp;
    for (auto [w, d] : bfs(adj, v, everyone)) comp.insert(w);
    seen.insert(comp.begin(), comp.end());
    components.push_back(comp);
  }

  std::vector<ReferenceTree> trees;
  for (const auto& comp : components) {
    for (std::uint32_t phase = 0;; ++phase) {
      const double r = std::pow(b, phase);
      std::uint32_t depth_cut = 0, delete_cut = 0;
      while (depth_cut + 1 <= (1 + a) * r + 1e-9) ++depth_cut;
      while (delete_cut + 1 <= r + 1e-9) ++delete_cut;
      std::set<Vertex> alive = comp;
      bool first = true, done = false;
      while (!alive.empty()) {
        const Vertex root = *std::min_element(alive.begin(), alive.end(), [&](Vertex x, Vertex y) {
          return priority(x) < priority(y);
        });
        ReferenceTree t{root, phase, {}, {}};
        for (auto [w, d] : bfs(adj, root, alive)) {
          if (d <= depth_cut) t.depth[w] = d;
          if (d <= delete_cut) t.deleted.insert(w);
        }
        for (Vertex w : t.deleted) alive.erase(w);
        if (first && alive.empty()) done = true;
        first = false;
        trees.push_back(std::move(t));
      }
      if (done) break;
    }
  }
  return trees;
}

// Random tree on n vertices: vertex i attaches to a uniform vertex among the
// `window` previous ones (window >= i gives a random recursive tree).
inline EdgeVec random_tree(std::size_t n, std::size_t window, std::uint64_t seed) {
  Rng rng(seed);
  EdgeVec edges;
  for (Vertex i = 1; i < n; ++i) {
    const std::size_t w = std::min<std::size_t>(window, i);
    const auto p = static_cast<Vertex>(i - 1 - rng.below(w));
    edges.emplace_back(p, i);
  }
  return edges;
}

inline EdgeVec path_edges(std::size_t n) {
  EdgeVec e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(i - 1, i);
  return e;
}

inline EdgeVec grid_edges(std::size_t w, std::size_t h) {
  EdgeVec e;
  for (Vertex y = 0; y < h; ++y) {
    for (Vertex x = 0; x < w; ++x) {
      const Vertex v = static_cast<Vertex>(y * w + x);
      if (x + 1 < w) e.emplace_back(v, v + 1);
      if (y + 1 < h) e.emplace_back(v, static_cast<Vertex>(v + w));
    }
  }
  return e;
}

// Random spanning tree plus extra uniform edges, hence connected.
inline EdgeVec random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
  EdgeVec e = random_tree(n, n, seed);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < extra && n > 1; ++i) {
    e.emplace_back(static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n)));
  }
  return e;
}

inline EdgeVec complete_edges(std::size_t n) {
  EdgeVec e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

}  // namespace hudg::oracle
