#include "hudg/router.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "hudg/io.hpp"
#include "hudg/random.hpp"

namespace hudg {

void RouteRecord::set_shortest(std::uint32_t shortest) {
  shortest_length = shortest;
  stretch_add = static_cast<std::int64_t>(routed_length) - static_cast<std::int64_t>(shortest);
  stretch_mult = shortest == 0 ? 1.0 : static_cast<double>(routed_length) / shortest;
}

RouteRecord route(Vertex source, Vertex target, std::span<const RoutingLabel> labels,
                  const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (labels.size() != n) throw RoutingError("label count does not match the graph");
  if (source >= n || target >= n) throw RoutingError("endpoint out of range");

  RouteRecord rec;
  rec.source = source;
  rec.target = target;
  rec.path.push_back(source);
  if (source == target) return rec;

  const RoutingLabel& goal = labels[target];
  auto current_distance = cover_distance(labels[source], goal);
  if (!current_distance) {
    throw RoutingError("vertices " + std::to_string(source) + " and " + std::to_string(target) +
                       " share no tree (different components)");
  }
  rec.cover_distance = current_distance->hops;
  const std::uint32_t budget = rec.cover_distance + 1;

  Vertex at = source;
  while (at != target) {
    if (rec.routed_length >= budget) {
      throw InvariantViolation("hop budget exceeded routing " + std::to_string(source) + " -> " +
                               std::to_string(target));
    }
    const std::uint32_t id = current_distance->graph_id;
    const LabelEntry* here = labels[at].find(id);
    const LabelEntry* there = goal.find(id);
    if (here == nullptr || there == nullptr) throw RoutingError("labels lost the chosen tree");
    Vertex next;
    try {
      next = g.neighbor_at(at, tree_next_hop_port(here->label, there->label));
    } catch (const std::out_of_range& e) {
      throw RoutingError(std::string("label/graph mismatch: ") + e.what());
    }
    auto next_distance = cover_distance(labels[next], goal);
    const std::uint32_t left = next == target ? 0 : (next_distance ? next_distance->hops : kUnreachable);
    if (left >= current_distance->hops) {
      throw InvariantViolation("d_C did not decrease at vertex " + std::to_string(at) +
                               " routing towards " + std::to_string(target));
    }
    rec.path.push_back(next);
    rec.graph_ids.push_back(id);
    ++rec.routed_length;
    at = next;
    if (next_distance) current_distance = next_distance;
  }
  return rec;
}

std::vector<std::pair<Vertex, Vertex>> sample_pairs(std::size_t n, std::size_t count,
                                                    std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (n < 2) return pairs;
  Rng rng(seed);
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = static_cast<Vertex>(rng.below(n));
    auto t = static_cast<Vertex>(rng.below(n - 1));
    if (t >= s) ++t;
    pairs.emplace_back(s, t);
  }
  return pairs;
}

std::vector<std::pair<Vertex, Vertex>> sample_connected_pairs(const Graph& g, std::size_t count,
                                                              std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const std::size_t n = g.num_vertices();
  if (n < 2) return pairs;
  std::uint32_t components = 0;
  const auto comp = connected_components(g, &components);
  std::vector<std::size_t> sizes(components, 0);
  for (auto c : comp) ++sizes[c];
  if (*std::max_element(sizes.begin(), sizes.end()) < 2) return pairs;
  Rng rng(seed);
  pairs.reserve(count);
  while (pairs.size() < count) {
    const auto s = static_cast<Vertex>(rng.below(n));
    auto t = static_cast<Vertex>(rng.below(n - 1));
    if (t >= s) ++t;
    if (comp[s] == comp[t]) pairs.emplace_back(s, t);
  }
  return pairs;
}

unsigned worker_threads() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("HUDG_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) threads = std::min(threads, static_cast<unsigned>(v));
  }
  return threads;
}

double percentile(std::span<const double> sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

StretchMeasurement measure_stretch(const Graph& g, std::span<const RoutingLabel> labels,
                                   std::span<const std::pair<Vertex, Vertex>> pairs,
                                   unsigned threads) {
  const auto comp = connected_components(g);
  std::vector<std::optional<RouteRecord>> slots(pairs.size());
  if (threads == 0) threads = worker_threads();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(pairs.size())));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t i = begin; i < end; ++i) {
        const auto [s, t] = pairs[i];
        if (comp[s] != comp[t]) continue;
        RouteRecord rec = route(s, t, labels, g);
        rec.set_shortest(bfs_distance(g, s, t));
        slots[i] = std::move(rec);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0, pairs.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (pairs.size() + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(pairs.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  StretchMeasurement m;
  auto& s = m.summary;
  s.requested = pairs.size();
  std::vector<double> stretches;
  for (auto& slot : slots) {
    if (!slot) {
      ++s.skipped;
      continue;
    }
    stretches.push_back(slot->stretch_mult);
    s.max_additive = std::max(s.max_additive, slot->stretch_add);
    m.records.push_back(std::move(*slot));
  }
  s.delivered = m.records.size();
  std::sort(stretches.begin(), stretches.end());
  if (!stretches.empty()) {
    s.min = stretches.front();
    s.max = stretches.back();
    s.p0_1 = percentile(stretches, 0.001);
    s.p25 = percentile(stretches, 0.25);
    s.median = percentile(stretches, 0.5);
    s.p75 = percentile(stretches, 0.75);
    s.p99_9 = percentile(stretches, 0.999);
    double total = 0.0;
    std::size_t low = 0;
    for (double x : stretches) {
      total += x;
      if (x <= 1.5) ++low;
    }
    s.mean = total / static_cast<double>(stretches.size());
    s.frac_at_most_1_5 = static_cast<double>(low) / static_cast<double>(stretches.size());
  }
  std::size_t entries = 0;
  for (const auto& l : labels) {
    s.k_max = std::max(s.k_max, l.entries.size());
    entries += l.entries.size();
  }
  if (!labels.empty()) s.k_mean = static_cast<double>(entries) / static_cast<double>(labels.size());
  return m;
}

void write_results_csv(std::ostream& out, std::span<const RouteRecord> records) {
  out << "source,target,sp_len,routed_len,stretch_mult,stretch_add\n";
  for (const auto& r : records) {
    out << r.source << ',' << r.target << ',' << r.shortest_length << ',' << r.routed_length << ','
        << format_double(r.stretch_mult) << ',' << r.stretch_add << '\n';
  }
}

void write_summary_csv(std::ostream& out, const StretchSummary& s) {
  out << "requested,delivered,skipped,min,p0_1,p25,median,p75,p99_9,max,mean,frac_le_1_5,"
         "max_additive,k_max,k_mean\n";
  out << s.requested << ',' << s.delivered << ',' << s.skipped << ',' << format_double(s.min) << ','
      << format_double(s.p0_1) << ',' << format_double(s.p25) << ',' << format_double(s.median)
      << ',' << format_double(s.p75) << ',' << format_double(s.p99_9) << ','
      << format_double(s.max) << ',' << format_double(s.mean) << ','
      << format_double(s.frac_at_most_1_5) << ',' << s.max_additive << ',' << s.k_max << ','
      << format_double(s.k_mean) << '\n';
}

void write_routes_csv(std::ostream& out, std::span<const RouteRecord> records) {
  out << "source,target,routed_len,path\n";
  for (const auto& r : records) {
    out << r.source << ',' << r.target << ',' << r.routed_length << ',';
    for (std::size_t i = 0; i < r.path.size(); ++i) {
      if (i > 0) out << ' ';
      out << r.path[i];
    }
    out << '\n';
  }
}

}  // namespace hudg
