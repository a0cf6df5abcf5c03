#include <doctest.h>

#include <sstream>

#include "hudg/io.hpp"
#include "hudg/labels.hpp"
#include "oracles.hpp"

using namespace hudg;

namespace {

// A graph that is a single tree, covered by one BFS tree rooted at `root`.
RootedTree whole_tree(const Graph& g, Vertex root) {
  RootedTree t;
  t.graph_id = 1;
  const auto dist = bfs_distances(g, root);
  std::vector<Vertex> order;
  std::vector<std::uint32_t> local(g.num_vertices(), RootedTree::kNoParent);
  order.push_back(root);
  local[root] = 0;
  t.parent.push_back(RootedTree::kNoParent);
  t.depth.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbors(order[i])) {
      if (local[w] != RootedTree::kNoParent) continue;
      local[w] = static_cast<std::uint32_t>(order.size());
      order.push_back(w);
      t.parent.push_back(static_cast<std::uint32_t>(i));
      t.depth.push_back(dist[w]);
    }
  }
  t.vertices = order;
  t.deleted = static_cast<std::uint32_t>(order.size());
  t.index();
  return t;
}

// Follows next-hop ports from s until t; returns the hop count.
std::uint32_t walk(const Graph& g, const RootedTree& tree, const std::vector<TreeLabel>& labels,
                   Vertex s, Vertex t) {
  std::uint32_t hops = 0;
  const TreeLabel& goal = labels[*tree.local(t)];
  while (s != t) {
    const Vertex next = g.neighbor_at(s, tree_next_hop_port(labels[*tree.local(s)], goal));
    REQUIRE(tree.contains(next));
    s = next;
    ++hops;
    REQUIRE(hops <= tree.size());
  }
  return hops;
}

}  // namespace

TEST_CASE("singleton and star") {
  const Graph single = Graph::from_edges(1, {});
  const RootedTree one = whole_tree(single, 0);
  const auto l1 = build_tree_labels(one, single);
  REQUIRE(l1.size() == 1);
  CHECK(l1[0].depth == 0);
  CHECK(l1[0].paths.empty());
  CHECK(tree_distance(l1[0], l1[0]) == 0);

  oracle::EdgeVec star;
  for (Vertex i = 1; i <= 6; ++i) star.emplace_back(0, i);
  const Graph g = Graph::from_edges(7, star);
  const RootedTree t = whole_tree(g, 0);
  const auto labels = build_tree_labels(t, g);
  for (Vertex i = 1; i <= 6; ++i) {
    CHECK(labels[*t.local(i)].depth == 1);
    CHECK(labels[*t.local(i)].parent_port == 1);
    CHECK(tree_distance(labels[*t.local(i)], labels[0]) == 1);
    CHECK(tree_next_hop_port(labels[0], labels[*t.local(i)]) == g.port(0, i));
    CHECK(tree_next_hop_port(labels[*t.local(i)], labels[0]) == g.port(i, 0));
    for (Vertex j = 1; j <= 6; ++j) {
      if (i == j) continue;
      CHECK(tree_distance(labels[*t.local(i)], labels[*t.local(j)]) == 2);
    }
  }
  // The heavy child of the center is the smallest id (all subtrees equal).
  CHECK(labels[0].heavy_port == g.port(0, 1));
}

TEST_CASE("tree edges must be graph edges") {
  const Graph g = Graph::from_edges(3, oracle::path_edges(3));
  RootedTree t = whole_tree(g, 0);
  const Graph other = Graph::from_edges(3, oracle::EdgeVec{{0, 2}, {1, 2}});
  CHECK_THROWS_AS(build_tree_labels(t, other), LabelError);
}

TEST_CASE("property: decoded distances equal BFS and walks take that many hops") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const std::size_t n = 300 * seed;
    const std::size_t window = seed % 2 ? n : 3;  // bushy and path-like trees
    const auto edges = oracle::random_tree(n, window, seed);
    const Graph g = Graph::from_edges(n, edges);
    const RootedTree t = whole_tree(g, static_cast<Vertex>(seed * 7 % n));
    const auto labels = build_tree_labels(t, g);
    Rng rng(seed);
    for (int k = 0; k < 300; ++k) {
      const auto s = static_cast<Vertex>(rng.below(n));
      const auto u = static_cast<Vertex>(rng.below(n));
      const std::uint32_t d = bfs_distance(g, s, u);
      CHECK(tree_distance(labels[*t.local(s)], labels[*t.local(u)]) == d);
      CHECK(walk(g, t, labels, s, u) == d);
    }
  }
}

TEST_CASE("property: heavy-path records stay logarithmic") {
  const std::size_t n = 4096;
  const Graph g = Graph::from_edges(n, oracle::random_tree(n, n, 17));
  const RootedTree t = whole_tree(g, 0);
  for (const auto& l : build_tree_labels(t, g)) {
    CHECK(l.paths.size() <= 13);  // at most log2(n) + 1 light edges
    CHECK(l.light_ports.size() + 1 == std::max<std::size_t>(l.paths.size(), 1));
  }
}

TEST_CASE("cover labels on P5") {
  const Graph g = Graph::from_edges(5, oracle::path_edges(5));
  ProtonParams p;
  p.strategy = RootStrategy::kIdOrder;
  const TreeCover cover = compute_tree_cover(g, nullptr, p);
  const auto labels = build_cover_labels(g, cover);
  REQUIRE(labels.size() == 5);
  CHECK(labels[0].entries.size() == 3);
  CHECK(labels[0].find(4) != nullptr);
  CHECK(labels[0].find(2) == nullptr);

  const auto d = cover_distance(labels[0], labels[4]);
  REQUIRE(d.has_value());
  CHECK(d->hops == 4);
  CHECK(d->graph_id == 4);

  const auto self = cover_distance(labels[2], labels[2]);
  REQUIRE(self.has_value());
  CHECK(self->hops == 0);
  CHECK(self->graph_id == cover.membership[2].front());
}

TEST_CASE("cover distance across components") {
  const Graph g = Graph::from_edges(4, oracle::EdgeVec{{0, 1}, {2, 3}});
  const TreeCover cover = compute_tree_cover(g, nullptr, {});
  const auto labels = build_cover_labels(g, cover);
  CHECK_FALSE(cover_distance(labels[0], labels[3]).has_value());
  CHECK(labels[0].entries.size() == 1);
}

TEST_CASE("encoding round trip and strict decoding") {
  const auto rep = sample_hrg(400, std::nullopt, 1.0, 6);
  const Graph g = build_udg(rep);
  const TreeCover cover = compute_tree_cover(g, &rep, {});
  const auto labels = build_cover_labels(g, cover);
  for (const auto& l : labels) {
    const auto bytes = encode_routing_label(l);
    CHECK(decode_routing_label(bytes) == l);
    CHECK(encoded_bits(l) == bytes.size() * 8);
    std::size_t sum = 0;
    for (const auto& e : l.entries) sum += encoded_bits(e.label) + 32;
    CHECK(encoded_bits(l) >= sum);

    auto longer = bytes;
    longer.push_back(0);
    CHECK_THROWS_AS(decode_routing_label(longer), FormatError);
    if (bytes.size() > 1) {
      const std::vector<std::uint8_t> cut(bytes.begin(), bytes.end() - 1);
      CHECK_THROWS_AS(decode_routing_label(cut), FormatError);
    }
  }

  const LabelSizeStats stats = label_size_stats(labels);
  std::size_t total = 0, max_entries = 0, max_bits = 0;
  for (const auto& l : labels) {
    total += encoded_bits(l);
    max_bits = std::max(max_bits, encoded_bits(l));
    max_entries = std::max(max_entries, l.entries.size());
  }
  CHECK(stats.total_bits == total);
  CHECK(stats.max_bits == max_bits);
  CHECK(stats.max_entries == max_entries);

  std::stringstream store;
  write_label_store(store, labels);
  CHECK(store.str().substr(0, 8) == "HUDGLBL1");
  CHECK(read_label_store(store) == labels);

  std::stringstream bad("HUDGLBL0");
  CHECK_THROWS_AS(read_label_store(bad), FormatError);
  std::string truncated;
  {
    std::stringstream s;
    write_label_store(s, labels);
    truncated = s.str().substr(0, s.str().size() - 3);
  }
  std::stringstream t(truncated);
  CHECK_THROWS_AS(read_label_store(t), FormatError);
}
