#include "hudg/labels.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "hudg/io.hpp"

namespace hudg {

std::vector<TreeLabel> build_tree_labels(const RootedTree& tree, const Graph& g) {
  const std::size_t size = tree.size();
  std::vector<TreeLabel> labels(size);
  if (size == 0) return labels;
  for (Vertex v : tree.vertices) {
    if (v >= g.num_vertices()) throw LabelError("tree vertex outside the host graph");
  }
  if (size == 1) return labels;

  // Vertices are in BFS order, so parents precede children.
  std::vector<std::uint32_t> subtree(size, 1);
  for (std::size_t i = size; i-- > 1;) subtree[tree.parent[i]] += subtree[i];
  std::vector<std::uint32_t> heavy(size, RootedTree::kNoParent);
  for (std::uint32_t i = 1; i < size; ++i) {
    const std::uint32_t p = tree.parent[i];
    const std::uint32_t h = heavy[p];
    if (h == RootedTree::kNoParent || subtree[i] > subtree[h] ||
        (subtree[i] == subtree[h] && tree.vertices[i] < tree.vertices[h])) {
      heavy[p] = i;
    }
  }

  auto host_port = [&](std::uint32_t from, std::uint32_t to) {
    const Port p = g.port(tree.vertices[from], tree.vertices[to]);
    if (p == 0) {
      throw LabelError("tree edge {" + std::to_string(tree.vertices[from]) + ", " +
                       std::to_string(tree.vertices[to]) + "} is not an edge of the graph");
    }
    return p;
  };

  std::uint32_t next_path = 1;
  labels[0].paths.push_back({0, 0, 0});
  for (std::uint32_t i = 1; i < size; ++i) {
    const std::uint32_t p = tree.parent[i];
    TreeLabel& label = labels[i];
    const TreeLabel& up = labels[p];
    label.depth = up.depth + 1;
    label.parent_port = host_port(i, p);
    label.paths = up.paths;
    label.light_ports = up.light_ports;
    if (heavy[p] == i) {
      ++label.paths.back().offset;
    } else {
      label.paths.push_back({next_path++, label.depth, 0});
      label.light_ports.push_back(host_port(p, i));
    }
  }
  for (std::uint32_t i = 0; i < size; ++i) {
    if (heavy[i] != RootedTree::kNoParent) labels[i].heavy_port = host_port(i, heavy[i]);
  }
  return labels;
}

namespace {

// Index of the deepest heavy path shared by both root paths.
std::size_t last_shared_path(const TreeLabel& u, const TreeLabel& v) {
  const std::size_t m = std::min(u.paths.size(), v.paths.size());
  std::size_t j = 0;
  while (j + 1 < m && u.paths[j + 1].path_id == v.paths[j + 1].path_id) ++j;
  return j;
}

}  // namespace

std::uint32_t tree_distance(const TreeLabel& u, const TreeLabel& v) {
  if (u.paths.empty() || v.paths.empty()) return u.depth + v.depth;
  const std::size_t j = last_shared_path(u, v);
  const std::uint32_t lca = std::min(u.paths[j].exit_depth(), v.paths[j].exit_depth());
  return u.depth + v.depth - 2 * lca;
}

Port tree_next_hop_port(const TreeLabel& s, const TreeLabel& t) {
  if (s.paths.empty() || t.paths.empty()) throw LabelError("next hop in a single-vertex tree");
  const std::size_t j = last_shared_path(s, t);
  const std::uint32_t lca = std::min(s.paths[j].exit_depth(), t.paths[j].exit_depth());
  if (lca < s.depth) return s.parent_port;
  // s is an ancestor of t and lies on path j.
  if (t.paths[j].exit_depth() > s.depth) return s.heavy_port;
  if (j + 1 >= t.paths.size()) throw LabelError("next hop requested for s == t");
  return t.light_ports[j];
}

const LabelEntry* RoutingLabel::find(std::uint32_t graph_id) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), graph_id,
      [](const LabelEntry& e, std::uint32_t id) { return e.graph_id < id; });
  if (it == entries.end() || it->graph_id != graph_id) return nullptr;
  return &*it;
}

std::vector<RoutingLabel> build_cover_labels(const Graph& g, const TreeCover& cover) {
  if (cover.num_vertices != g.num_vertices()) {
    throw LabelError("cover and graph have different vertex counts");
  }
  std::vector<RoutingLabel> labels(g.num_vertices());
  for (Vertex v = 0; v < labels.size(); ++v) {
    labels[v].vertex = v;
    labels[v].entries.reserve(cover.membership[v].size());
  }
  // Trees are visited in graph-ID order, so entries come out sorted.
  for (const auto& tree : cover.trees) {
    auto tree_labels = build_tree_labels(tree, g);
    for (std::size_t i = 0; i < tree.size(); ++i) {
      labels[tree.vertices[i]].entries.push_back({tree.graph_id, std::move(tree_labels[i])});
    }
  }
  return labels;
}

std::optional<CoverDistance> cover_distance(const RoutingLabel& a, const RoutingLabel& b) {
  std::optional<CoverDistance> best;
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() && j < b.entries.size()) {
    const auto ia = a.entries[i].graph_id;
    const auto jb = b.entries[j].graph_id;
    if (ia < jb) {
      ++i;
    } else if (jb < ia) {
      ++j;
    } else {
      const std::uint32_t d = tree_distance(a.entries[i].label, b.entries[j].label);
      if (!best || d < best->hops) best = CoverDistance{d, ia};
      ++i, ++j;
    }
  }
  return best;
}

namespace {

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(x | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(x));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t varint() {
    std::uint64_t x = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      const std::uint8_t b = byte();
      x |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if ((b & 0x80) == 0) return x;
    }
    throw FormatError("varint too long in label blob");
  }

  std::uint32_t varint32() {
    const std::uint64_t x = varint();
    if (x > UINT32_MAX) throw FormatError("label field exceeds 32 bits");
    return static_cast<std::uint32_t>(x);
  }

  std::uint32_t u32() {
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(byte()) << (8 * i);
    return x;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::uint8_t byte() {
    if (pos_ >= bytes_.size()) throw FormatError("truncated label blob");
    return bytes_[pos_++];
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void append_tree_label(std::vector<std::uint8_t>& out, const TreeLabel& label) {
  put_varint(out, label.depth);
  put_varint(out, label.parent_port);
  put_varint(out, label.heavy_port);
  put_varint(out, label.paths.size());
  for (std::size_t j = 0; j < label.paths.size(); ++j) {
    put_varint(out, label.paths[j].path_id);
    put_varint(out, label.paths[j].head_depth);
    put_varint(out, label.paths[j].offset);
    if (j + 1 < label.paths.size()) put_varint(out, label.light_ports[j]);
  }
}

TreeLabel read_tree_label(Reader& in) {
  TreeLabel label;
  label.depth = in.varint32();
  label.parent_port = in.varint32();
  label.heavy_port = in.varint32();
  const std::uint64_t count = in.varint();
  if (count > UINT32_MAX) throw FormatError("implausible path count in label blob");
  for (std::uint64_t j = 0; j < count; ++j) {
    PathRecord r;
    r.path_id = in.varint32();
    r.head_depth = in.varint32();
    r.offset = in.varint32();
    label.paths.push_back(r);
    if (j + 1 < count) label.light_ports.push_back(in.varint32());
  }
  return label;
}

}  // namespace

std::vector<std::uint8_t> encode_tree_label(const TreeLabel& label) {
  std::vector<std::uint8_t> out;
  append_tree_label(out, label);
  return out;
}

std::vector<std::uint8_t> encode_routing_label(const RoutingLabel& label) {
  std::vector<std::uint8_t> out;
  put_varint(out, label.vertex);
  put_varint(out, label.entries.size());
  for (const auto& e : label.entries) {
    put_u32(out, e.graph_id);
    append_tree_label(out, e.label);
  }
  return out;
}

RoutingLabel decode_routing_label(std::span<const std::uint8_t> bytes) {
  Reader in(bytes);
  RoutingLabel label;
  label.vertex = in.varint32();
  const std::uint64_t count = in.varint();
  if (count > bytes.size()) throw FormatError("implausible entry count in label blob");
  label.entries.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    LabelEntry e;
    e.graph_id = in.u32();
    e.label = read_tree_label(in);
    if (!label.entries.empty() && label.entries.back().graph_id >= e.graph_id) {
      throw FormatError("label entries are not sorted by graph-ID");
    }
    label.entries.push_back(std::move(e));
  }
  if (!in.done()) throw FormatError("trailing bytes in label blob");
  return label;
}

std::size_t encoded_bits(const TreeLabel& label) { return 8 * encode_tree_label(label).size(); }

std::size_t encoded_bits(const RoutingLabel& label) {
  return 8 * encode_routing_label(label).size();
}

LabelSizeStats label_size_stats(std::span<const RoutingLabel> labels) {
  LabelSizeStats stats;
  for (const auto& l : labels) {
    const std::size_t bits = encoded_bits(l);
    stats.max_bits = std::max(stats.max_bits, bits);
    stats.total_bits += bits;
    stats.max_entries = std::max(stats.max_entries, l.entries.size());
  }
  if (!labels.empty()) {
    stats.mean_bits = static_cast<double>(stats.total_bits) / static_cast<double>(labels.size());
  }
  return stats;
}

namespace {
constexpr char kLabelMagic[8] = {'H', 'U', 'D', 'G', 'L', 'B', 'L', '1'};
}

void write_label_store(std::ostream& out, std::span<const RoutingLabel> labels) {
  out.write(kLabelMagic, sizeof kLabelMagic);
  std::vector<std::uint8_t> header;
  const std::uint64_t n = labels.size();
  for (int i = 0; i < 8; ++i) header.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
  out.write(reinterpret_cast<const char*>(header.data()), 8);
  for (const auto& l : labels) {
    const auto blob = encode_routing_label(l);
    std::vector<std::uint8_t> len;
    put_u32(len, static_cast<std::uint32_t>(blob.size()));
    out.write(reinterpret_cast<const char*>(len.data()), 4);
    out.write(reinterpret_cast<const char*>(blob.data()), static_cast<std::streamsize>(blob.size()));
  }
}

std::vector<RoutingLabel> read_label_store(std::istream& in) {
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kLabelMagic, 8) != 0) {
    throw FormatError("not a label store (bad magic)");
  }
  unsigned char raw[8];
  if (!in.read(reinterpret_cast<char*>(raw), 8)) throw FormatError("truncated label store header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= static_cast<std::uint64_t>(raw[i]) << (8 * i);
  std::vector<RoutingLabel> labels;
  for (std::uint64_t v = 0; v < n; ++v) {
    unsigned char len_raw[4];
    if (!in.read(reinterpret_cast<char*>(len_raw), 4)) {
      throw FormatError("truncated label store at vertex " + std::to_string(v));
    }
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len |= static_cast<std::uint32_t>(len_raw[i]) << (8 * i);
    std::vector<std::uint8_t> blob(len);
    if (!in.read(reinterpret_cast<char*>(blob.data()), len)) {
      throw FormatError("truncated label blob at vertex " + std::to_string(v));
    }
    labels.push_back(decode_routing_label(blob));
    if (labels.back().vertex != v) throw FormatError("label store vertices out of order");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing data in label store");
  return labels;
}

}  // namespace hudg
