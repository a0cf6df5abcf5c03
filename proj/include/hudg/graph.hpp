#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hudg {

using Vertex = std::uint32_t;
// Ports are numbered 1..deg(v); 0 means "no port".
using Port = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);
inline constexpr std::uint32_t kUnreachable = static_cast<std::uint32_t>(-1);

// Undirected simple graph in CSR form. Neighbor lists are sorted by id and the
// port of a neighbor is its 1-based position in that list.
class Graph {
 public:
  Graph() = default;

  // Self-loops and duplicate edges are dropped.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;

  // Port of neighbor u at v, or 0 when u is not adjacent to v.
  Port port(Vertex v, Vertex u) const;

  // Neighbor of v behind the given port; throws std::out_of_range if invalid.
  Vertex neighbor_at(Vertex v, Port p) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

// BFS hop distances from source (kUnreachable where not reachable).
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);

// Hop distance between s and t with early exit; kUnreachable when disconnected.
std::uint32_t bfs_distance(const Graph& g, Vertex s, Vertex t);

// Component index per vertex, numbered in order of smallest member id.
std::vector<std::uint32_t> connected_components(const Graph& g, std::uint32_t* count = nullptr);

// Largest eccentricity over all vertices, taken within each component.
std::uint32_t diameter(const Graph& g);

}  // namespace hudg
