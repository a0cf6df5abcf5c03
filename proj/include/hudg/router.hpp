#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hudg/graph.hpp"
#include "hudg/labels.hpp"

namespace hudg {

// Routing request that cannot be served (e.g. endpoints in different
// components, or labels that do not belong to the graph).
class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A guarantee of the scheme failed at run time: d_C did not decrease, or the
// hop budget ran out.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct RouteRecord {
  Vertex source = 0;
  Vertex target = 0;
  std::vector<Vertex> path;               // source, ..., target
  std::vector<std::uint32_t> graph_ids;   // tree used for each hop
  std::uint32_t routed_length = 0;
  std::uint32_t cover_distance = 0;       // d_C(source, target)
  std::uint32_t shortest_length = kUnreachable;
  double stretch_mult = 1.0;
  std::int64_t stretch_add = 0;

  // Fills shortest_length and the stretch fields.
  void set_shortest(std::uint32_t shortest);
};

// Greedy forwarding with respect to d_C: at every vertex, descend one hop in
// the tree realizing d_C to the target.
RouteRecord route(Vertex source, Vertex target, std::span<const RoutingLabel> labels,
                  const Graph& g);

struct StretchSummary {
  std::size_t requested = 0;
  std::size_t delivered = 0;
  std::size_t skipped = 0;  // endpoints in different components
  double min = 0.0, p0_1 = 0.0, p25 = 0.0, median = 0.0, p75 = 0.0, p99_9 = 0.0, max = 0.0;
  double mean = 0.0;
  double frac_at_most_1_5 = 0.0;
  std::int64_t max_additive = 0;
  std::size_t k_max = 0;
  double k_mean = 0.0;
};

struct StretchMeasurement {
  std::vector<RouteRecord> records;  // in pair order, skipped pairs omitted
  StretchSummary summary;
};

// Uniform ordered pairs (u, v) with u != v.
std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t count,
                                                    std::uint64_t seed);

// Like sample_pairs, but redraws until both ends share a component.
std::vector<std::pair<Vertex, Vertex>> sample_connected_pairs(const Graph& g, std::size_t count,
                                                              std::uint64_t seed);

// Threads used by measure_stretch: hardware concurrency, capped by the
// HUDG_THREADS environment variable when set.
unsigned worker_threads();

// Routes every pair and compares against BFS shortest paths. Pairs across
// components are skipped and counted.
StretchMeasurement measure_stretch(const Graph& g, std::span<const RoutingLabel> labels,
                                   std::span<const std::pair<Vertex, Vertex>> pairs,
                                   unsigned threads = 0);

// Linear-interpolation percentile of sorted values, q in [0, 1].
double percentile(std::span<const double> sorted, double q);

// source,target,sp_len,routed_len,stretch_mult,stretch_add
void write_results_csv(std::ostream& out, std::span<const RouteRecord> records);
void write_summary_csv(std::ostream& out, const StretchSummary& summary);

// source,target,routed_len,path  (path as space-separated vertex ids)
void write_routes_csv(std::ostream& out, std::span<const RouteRecord> records);

}  // namespace hudg
