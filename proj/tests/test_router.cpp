#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hudg/router.hpp"
#include "oracles.hpp"

using namespace hudg;

namespace {

std::vector<RoutingLabel> labels_for(const Graph& g, const DiskRepresentation* rep,
                                     RootStrategy s = RootStrategy::kDegreeDecreasing,
                                     double a = 2, double b = 2) {
  ProtonParams p;
  p.a = a;
  p.b = b;
  p.strategy = s;
  return build_cover_labels(g, compute_tree_cover(g, rep, p));
}

void check_record(const Graph& g, const std::vector<RoutingLabel>& labels, const RouteRecord& r,
                  double c) {
  REQUIRE(r.path.size() == r.routed_length + 1);
  CHECK(r.path.front() == r.source);
  CHECK(r.path.back() == r.target);
  CHECK(r.graph_ids.size() == r.routed_length);
  for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
    CHECK(g.has_edge(r.path[i], r.path[i + 1]));
    // d_C to the target strictly decreases along the path.
    const auto here = cover_distance(labels[r.path[i]], labels[r.target]);
    const auto next = cover_distance(labels[r.path[i + 1]], labels[r.target]);
    REQUIRE(here.has_value());
    REQUIRE(next.has_value());
    CHECK(next->hops < here->hops);
  }
  CHECK(r.routed_length <= r.cover_distance);
  CHECK(r.shortest_length == bfs_distance(g, r.source, r.target));
  CHECK(static_cast<double>(r.routed_length) <=
        std::max(c * r.shortest_length, r.shortest_length + 2.0) + 1e-9);
  CHECK(r.stretch_add == static_cast<std::int64_t>(r.routed_length) - r.shortest_length);
}

}  // namespace

TEST_CASE("trivial routes") {
  const Graph g = Graph::from_edges(5, oracle::path_edges(5));
  const auto labels = labels_for(g, nullptr, RootStrategy::kIdOrder);
  RouteRecord self = route(2, 2, labels, g);
  self.set_shortest(0);
  CHECK(self.path == std::vector<Vertex>{2});
  CHECK(self.routed_length == 0);
  CHECK(self.stretch_mult == 1.0);

  RouteRecord adj = route(0, 1, labels, g);
  adj.set_shortest(1);
  CHECK(adj.routed_length == 1);
  CHECK(adj.stretch_mult == 1.0);

  RouteRecord far = route(0, 4, labels, g);
  far.set_shortest(bfs_distance(g, 0, 4));
  CHECK(far.path == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(far.cover_distance == 4);
  CHECK(far.stretch_mult == 1.0);
  CHECK(far.graph_ids.front() == 4);
}

TEST_CASE("routing errors") {
  const Graph g = Graph::from_edges(4, oracle::EdgeVec{{0, 1}, {2, 3}});
  const auto labels = labels_for(g, nullptr);
  CHECK_THROWS_AS(route(0, 3, labels, g), RoutingError);
  CHECK_THROWS_AS(route(0, 9, labels, g), RoutingError);
  const std::vector<RoutingLabel> few(labels.begin(), labels.begin() + 2);
  CHECK_THROWS_AS(route(0, 1, few, g), RoutingError);
  // Labels from a different graph with the same vertex count.
  const Graph other = Graph::from_edges(4, oracle::EdgeVec{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const auto foreign = labels_for(other, nullptr);
  CHECK_THROWS(route(0, 2, foreign, g));
}

TEST_CASE("trees route along their unique paths") {
  const std::size_t n = 500;
  const Graph g = Graph::from_edges(n, oracle::random_tree(n, 4, 12));
  const auto labels = labels_for(g, nullptr);
  const auto pairs = sample_pairs(n, 400, 3);
  const auto m = measure_stretch(g, labels, pairs, 2);
  CHECK(m.summary.delivered == 400);
  CHECK(m.summary.max == 1.0);
  CHECK(m.summary.min == 1.0);
  for (const auto& r : m.records) check_record(g, labels, r, 3);
}

TEST_CASE("property: stretch guarantee and d_C decrease") {
  for (auto [a, b] : {std::pair{2.0, 2.0}, std::pair{1.0, 1.5}}) {
    const auto rep = sample_hrg(1500, std::nullopt, 0.8, 5);
    const Graph g = build_udg(rep);
    const auto labels = labels_for(g, &rep, RootStrategy::kRadiallyIncreasing, a, b);
    const auto pairs = sample_connected_pairs(g, 500, 8);
    REQUIRE(pairs.size() == 500);
    const auto m = measure_stretch(g, labels, pairs);
    CHECK(m.summary.skipped == 0);
    CHECK(m.summary.delivered == 500);
    for (const auto& r : m.records) check_record(g, labels, r, 1 + 2 * b / a);
  }
  const Graph grid = Graph::from_edges(400, oracle::grid_edges(20, 20));
  const auto labels = labels_for(grid, nullptr);
  const auto m = measure_stretch(grid, labels, sample_pairs(400, 500, 2));
  for (const auto& r : m.records) check_record(grid, labels, r, 3);
}

TEST_CASE("complete graph routes through the star tree") {
  const Graph k5 = Graph::from_edges(5, oracle::complete_edges(5));
  const auto labels = labels_for(k5, nullptr);
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex s = 0; s < 5; ++s)
    for (Vertex t = 0; t < 5; ++t)
      if (s != t) all.emplace_back(s, t);
  const auto m = measure_stretch(k5, labels, all);
  // One tree, a star at vertex 0: leaf-to-leaf routes take 2 hops.
  CHECK(m.summary.delivered == 20);
  CHECK(m.summary.k_max == 1);
  for (const auto& r : m.records) {
    CHECK(r.routed_length == (r.source == 0 || r.target == 0 ? 1u : 2u));
  }
  CHECK(m.summary.max_additive == 1);
}

TEST_CASE("sampling and determinism") {
  CHECK(sample_pairs(100, 50, 4) == sample_pairs(100, 50, 4));
  CHECK(sample_pairs(1, 50, 4).empty());
  for (auto [s, t] : sample_pairs(3, 200, 1)) {
    CHECK(s != t);
    CHECK(s < 3);
    CHECK(t < 3);
  }
  const Graph g = Graph::from_edges(6, oracle::EdgeVec{{0, 1}, {1, 2}, {4, 5}});
  const auto comp = connected_components(g);
  for (auto [s, t] : sample_connected_pairs(g, 100, 2)) CHECK(comp[s] == comp[t]);
  CHECK(sample_connected_pairs(Graph::from_edges(3, {}), 10, 2).empty());

  const auto labels = labels_for(g, nullptr);
  const auto pairs = sample_pairs(6, 300, 9);
  const auto one = measure_stretch(g, labels, pairs, 1);
  const auto many = measure_stretch(g, labels, pairs, 3);
  CHECK(one.summary.skipped > 0);
  CHECK(one.summary.delivered + one.summary.skipped == 300);
  std::ostringstream a, b;
  write_results_csv(a, one.records);
  write_results_csv(b, many.records);
  CHECK(a.str() == b.str());
}

TEST_CASE("percentiles and csv") {
  const std::vector<double> v{1, 2, 3, 4, 5};
  CHECK(percentile(v, 0.0) == 1);
  CHECK(percentile(v, 0.5) == 3);
  CHECK(percentile(v, 0.25) == 2);
  CHECK(percentile(v, 0.999) == doctest::Approx(4.996));
  CHECK(percentile(std::vector<double>{}, 0.5) == 0);

  RouteRecord r;
  r.source = 1;
  r.target = 4;
  r.path = {1, 2, 3, 4};
  r.routed_length = 3;
  r.set_shortest(2);
  std::ostringstream out;
  write_results_csv(out, std::vector<RouteRecord>{r});
  CHECK(out.str() == "source,target,sp_len,routed_len,stretch_mult,stretch_add\n1,4,2,3,1.5,1\n");
  std::ostringstream routes;
  write_routes_csv(routes, std::vector<RouteRecord>{r});
  CHECK(routes.str() == "source,target,routed_len,path\n1,4,3,1 2 3 4\n");
}
