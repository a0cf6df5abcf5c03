#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hudg/graph.hpp"
#include "hudg/proton.hpp"

namespace hudg {

// One heavy path on the root-to-vertex path: the path id (local to the
// tree), the depth of its head and how far down the path the walk went
// before leaving it (or reaching the vertex itself, for the last record).
struct PathRecord {
  std::uint32_t path_id = 0;
  std::uint32_t head_depth = 0;
  std::uint32_t offset = 0;

  std::uint32_t exit_depth() const { return head_depth + offset; }

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

// Distance and port label of a vertex within one tree. Ports are host-graph
// ports, so a next hop computed inside the tree is directly usable in G.
struct TreeLabel {
  std::uint32_t depth = 0;
  Port parent_port = 0;  // 0 at the root
  Port heavy_port = 0;   // 0 at leaves
  std::vector<PathRecord> paths;  // empty only in a single-vertex tree
  // light_ports[j]: port at the exit vertex of paths[j] leading to the head
  // of paths[j + 1].
  std::vector<Port> light_ports;

  friend bool operator==(const TreeLabel&, const TreeLabel&) = default;
};

class LabelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Heavy-path labels for every vertex of `tree`, indexed by local tree index.
// The heavy child is the child with the largest subtree (smaller id on ties).
// Throws LabelError when a tree edge is not an edge of g.
std::vector<TreeLabel> build_tree_labels(const RootedTree& tree, const Graph& g);

std::uint32_t tree_distance(const TreeLabel& u, const TreeLabel& v);

// Port at s of the neighbor on the tree path towards t (requires s != t).
Port tree_next_hop_port(const TreeLabel& s, const TreeLabel& t);

struct LabelEntry {
  std::uint32_t graph_id = 0;
  TreeLabel label;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

// Routing state of one vertex: its tree labels sorted by graph-ID.
struct RoutingLabel {
  Vertex vertex = 0;
  std::vector<LabelEntry> entries;

  const LabelEntry* find(std::uint32_t graph_id) const;

  friend bool operator==(const RoutingLabel&, const RoutingLabel&) = default;
};

std::vector<RoutingLabel> build_cover_labels(const Graph& g, const TreeCover& cover);

struct CoverDistance {
  std::uint32_t hops = 0;
  std::uint32_t graph_id = 0;
};

// Minimum tree distance over shared trees, smallest graph-ID among the
// minimizers; nullopt when the vertices share no tree.
std::optional<CoverDistance> cover_distance(const RoutingLabel& a, const RoutingLabel& b);

// Varint encoding. Graph-IDs are stored as fixed 32-bit fields.
std::vector<std::uint8_t> encode_tree_label(const TreeLabel& label);
std::vector<std::uint8_t> encode_routing_label(const RoutingLabel& label);
RoutingLabel decode_routing_label(std::span<const std::uint8_t> bytes);

std::size_t encoded_bits(const TreeLabel& label);
std::size_t encoded_bits(const RoutingLabel& label);

struct LabelSizeStats {
  std::size_t max_bits = 0;
  double mean_bits = 0.0;
  std::size_t max_entries = 0;
  std::size_t total_bits = 0;
};

LabelSizeStats label_size_stats(std::span<const RoutingLabel> labels);

// Binary label store: magic "HUDGLBL1", uint64 LE vertex count, then per
// vertex a uint32 LE byte length followed by encode_routing_label bytes.
void write_label_store(std::ostream& out, std::span<const RoutingLabel> labels);
std::vector<RoutingLabel> read_label_store(std::istream& in);

}  // namespace hudg
