#include "hudg/proton.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hudg/io.hpp"
#include "hudg/random.hpp"

namespace hudg {

std::string_view strategy_name(RootStrategy s) {
  switch (s) {
    case RootStrategy::kRadiallyIncreasing:
      return "radially-increasing";
    case RootStrategy::kDegreeDecreasing:
      return "degree-decreasing";
    case RootStrategy::kIdOrder:
      return "id-order";
  }
  return "unknown";
}

std::optional<RootStrategy> parse_strategy(std::string_view name) {
  if (name == "radially-increasing") return RootStrategy::kRadiallyIncreasing;
  if (name == "degree-decreasing") return RootStrategy::kDegreeDecreasing;
  if (name == "id-order") return RootStrategy::kIdOrder;
  return std::nullopt;
}

void ProtonParams::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("PROTON requires a > 0");
  if (!(b > 1.0) || !std::isfinite(b)) throw std::invalid_argument("PROTON requires b > 1");
}

void RootedTree::index() {
  lookup_.clear();
  lookup_.reserve(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i) lookup_.emplace_back(vertices[i], i);
  std::sort(lookup_.begin(), lookup_.end());
}

std::optional<std::uint32_t> RootedTree::local(Vertex v) const {
  const auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(v, 0u));
  if (it == lookup_.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::uint32_t RootedTree::distance(std::uint32_t u, std::uint32_t v) const {
  std::uint32_t hops = 0;
  while (depth[u] > depth[v]) u = parent[u], ++hops;
  while (depth[v] > depth[u]) v = parent[v], ++hops;
  while (u != v) u = parent[u], v = parent[v], hops += 2;
  return hops;
}

void TreeCover::rebuild_membership() {
  membership.assign(num_vertices, {});
  for (const auto& t : trees) {
    for (Vertex v : t.vertices) membership[v].push_back(t.graph_id);
  }
  for (auto& m : membership) std::sort(m.begin(), m.end());
}

namespace {

// Hyperbolic distance to the pole for the representations that have one.
double pole_distance(const DiskRepresentation& rep, Vertex v) {
  switch (rep.metric) {
    case Metric::kHyperbolicPolar:
      return rep.coords[v][0];
    case Metric::kPoincare:
      return 2.0 * std::atanh(std::hypot(rep.coords[v][0], rep.coords[v][1]));
    case Metric::kEuclidean:
      break;
  }
  throw std::invalid_argument("radially-increasing roots need a hyperbolic representation");
}

std::vector<Vertex> root_order(const Graph& g, const DiskRepresentation* rep,
                               RootStrategy strategy) {
  std::vector<Vertex> order(g.num_vertices());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  switch (strategy) {
    case RootStrategy::kIdOrder:
      break;
    case RootStrategy::kDegreeDecreasing:
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex u, Vertex v) { return g.degree(u) > g.degree(v); });
      break;
    case RootStrategy::kRadiallyIncreasing: {
      if (rep == nullptr) {
        throw std::invalid_argument("radially-increasing roots need a disk representation");
      }
      if (rep->size() != g.num_vertices()) {
        throw std::invalid_argument("representation and graph sizes differ");
      }
      std::vector<double> radius(g.num_vertices());
      for (Vertex v = 0; v < radius.size(); ++v) radius[v] = pole_distance(*rep, v);
      std::stable_sort(order.begin(), order.end(),
                       [&](Vertex u, Vertex v) { return radius[u] < radius[v]; });
      break;
    }
  }
  return order;
}

// floor(x) for thresholds that are integral in exact arithmetic but may land
// just below an integer in floating point.
double hop_cutoff(double x) { return std::floor(x * (1.0 + 1e-12)); }

}  // namespace

TreeCover compute_tree_cover(const Graph& g, const DiskRepresentation* rep,
                             const ProtonParams& params) {
  params.validate();
  const std::size_t n = g.num_vertices();
  TreeCover cover;
  cover.params = params;
  cover.num_vertices = n;

  std::uint32_t num_components = 0;
  const auto component = connected_components(g, &num_components);
  std::vector<std::vector<Vertex>> orders(num_components);
  for (Vertex v : root_order(g, rep, params.strategy)) orders[component[v]].push_back(v);

  // Epoch stamps: deleted[v] == epoch means v is gone in the current phase,
  // visited[v] == tree stamp means the current BFS reached v.
  std::vector<std::uint64_t> deleted(n, 0), visited(n, 0);
  std::uint64_t epoch = 0, stamp = 0;
  std::vector<Vertex> queue;

  for (std::uint32_t c = 0; c < num_components; ++c) {
    const auto& order = orders[c];
    for (std::uint32_t phase = 0;; ++phase) {
      ++epoch;
      const double radius = std::pow(params.b, static_cast<double>(phase));
      const double depth_cut = hop_cutoff((1.0 + params.a) * radius);
      const double delete_cut = hop_cutoff(radius);

      std::size_t remaining = order.size();
      std::size_t cursor = 0;
      bool first = true;
      bool finished = false;
      while (remaining > 0) {
        while (deleted[order[cursor]] == epoch) ++cursor;
        const Vertex root = order[cursor];

        RootedTree tree;
        tree.graph_id = static_cast<std::uint32_t>(cover.trees.size() + 1);
        tree.phase = phase;
        ++stamp;
        queue.assign(1, root);
        visited[root] = stamp;
        tree.vertices.push_back(root);
        tree.parent.push_back(RootedTree::kNoParent);
        tree.depth.push_back(0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const Vertex u = queue[head];
          const std::uint32_t du = tree.depth[head];
          if (static_cast<double>(du) + 1.0 > depth_cut) break;
          for (Vertex w : g.neighbors(u)) {
            if (visited[w] == stamp || deleted[w] == epoch) continue;
            visited[w] = stamp;
            queue.push_back(w);
            tree.vertices.push_back(w);
            tree.parent.push_back(static_cast<std::uint32_t>(head));
            tree.depth.push_back(du + 1);
          }
        }
        for (std::size_t i = 0; i < tree.size(); ++i) {
          if (static_cast<double>(tree.depth[i]) > delete_cut) break;
          deleted[tree.vertices[i]] = epoch;
          ++tree.deleted;
          --remaining;
        }
        tree.index();
        cover.trees.push_back(std::move(tree));
        if (first && remaining == 0) finished = true;
        first = false;
      }
      if (finished) break;
    }
  }
  cover.rebuild_membership();
  return cover;
}

CoverStretchReport verify_cover_stretch(const Graph& g, const TreeCover& cover,
                                        std::size_t exhaustive_limit, std::size_t samples,
                                        std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  const double c = cover.params.stretch();
  CoverStretchReport report;

  auto check = [&](Vertex s, Vertex t, std::uint32_t dg) {
    ++report.pairs_checked;
    const auto& ms = cover.membership[s];
    const auto& mt = cover.membership[t];
    std::uint32_t best = kUnreachable;
    std::size_t i = 0, j = 0;
    while (i < ms.size() && j < mt.size()) {
      if (ms[i] < mt[j]) {
        ++i;
      } else if (mt[j] < ms[i]) {
        ++j;
      } else {
        const auto& tree = cover.tree(ms[i]);
        best = std::min(best, tree.distance(*tree.local(s), *tree.local(t)));
        ++i, ++j;
      }
    }
    const bool good = best != kUnreachable &&
                      (static_cast<double>(best) <= c * dg + 1e-9 || best <= dg + 2);
    if (!good) report.violations.push_back({s, t, dg, best});
  };

  if (n <= exhaustive_limit) {
    report.exhaustive = true;
    for (Vertex s = 0; s < n; ++s) {
      const auto dist = bfs_distances(g, s);
      for (Vertex t = s + 1; t < n; ++t) {
        if (dist[t] != kUnreachable) check(s, t, dist[t]);
      }
    }
  } else if (n >= 2) {
    Rng rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const auto s = static_cast<Vertex>(rng.below(n));
      auto t = static_cast<Vertex>(rng.below(n - 1));
      if (t >= s) ++t;
      const std::uint32_t dg = bfs_distance(g, s, t);
      if (dg != kUnreachable) check(s, t, dg);
    }
  }
  return report;
}

double k_bound(double R, double a, double b, double diam) {
  if (!(diam >= 1.0)) throw std::invalid_argument("k_bound requires diam >= 1");
  if (!(a > 0.0) || !(b > 1.0)) throw std::invalid_argument("k_bound requires a > 0, b > 1");
  const double e = std::exp(1.0);
  return kPi * e *
         ((1.0 + a) / (b - 1.0) * (b * b * diam - 1.0) * R +
          2.0 * (std::log(diam) / std::log(b) + 2.0));
}

double phase_root_bound(double R, double a, double b, std::uint32_t phase) {
  return kPi * std::exp(1.0) * (R * (1.0 + a) * std::pow(b, static_cast<double>(phase)) + 2.0);
}

CoverStats cover_stats(const TreeCover& cover) {
  CoverStats stats;
  stats.num_trees = cover.trees.size();
  std::size_t total = 0;
  for (const auto& m : cover.membership) {
    stats.k_max = std::max(stats.k_max, m.size());
    total += m.size();
  }
  if (cover.num_vertices > 0) {
    stats.k_mean = static_cast<double>(total) / static_cast<double>(cover.num_vertices);
  }
  std::vector<std::vector<std::size_t>> per_phase_counts;
  for (const auto& t : cover.trees) {
    if (t.phase >= stats.trees_per_phase.size()) {
      stats.trees_per_phase.resize(t.phase + 1, 0);
      per_phase_counts.resize(t.phase + 1, std::vector<std::size_t>(cover.num_vertices, 0));
    }
    ++stats.trees_per_phase[t.phase];
    for (Vertex v : t.vertices) ++per_phase_counts[t.phase][v];
  }
  for (const auto& counts : per_phase_counts) {
    stats.k_max_per_phase.push_back(
        counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()));
  }
  return stats;
}

void write_tree_cover(std::ostream& out, const TreeCover& cover) {
  out << "hudgcover 1 " << cover.num_vertices << ' ' << cover.trees.size() << ' '
      << format_double(cover.params.a) << ' ' << format_double(cover.params.b) << ' '
      << strategy_name(cover.params.strategy) << '\n';
  for (const auto& t : cover.trees) {
    out << "tree " << t.graph_id << " root " << t.root() << " phase " << t.phase << '\n';
    for (std::size_t i = 1; i < t.size(); ++i) {
      out << t.vertices[i] << ' ' << t.vertices[t.parent[i]] << '\n';
    }
  }
}

TreeCover read_tree_cover(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw FormatError("empty cover file", lineno);
  std::istringstream header(line);
  std::string magic, strategy;
  int version = 0;
  std::size_t n = 0, count = 0;
  TreeCover cover;
  if (!(header >> magic >> version >> n >> count >> cover.params.a >> cover.params.b >> strategy) ||
      magic != "hudgcover") {
    throw FormatError("expected header 'hudgcover 1 <n> <trees> <a> <b> <strategy>'", lineno);
  }
  if (version != 1) throw FormatError("unsupported cover version", lineno);
  const auto parsed = parse_strategy(strategy);
  if (!parsed) throw FormatError("unknown strategy '" + strategy + "'", lineno);
  cover.params.strategy = *parsed;
  cover.num_vertices = n;

  RootedTree* current = nullptr;
  std::unordered_map<Vertex, std::uint32_t> local_of;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "tree") {
      std::uint32_t id = 0, phase = 0;
      std::uint64_t root = 0;
      std::string root_kw, phase_kw;
      if (!(fields >> id >> root_kw >> root >> phase_kw >> phase) || root_kw != "root" ||
          phase_kw != "phase") {
        throw FormatError("expected 'tree <graph-id> root <v> phase <i>'", lineno);
      }
      if (id != cover.trees.size() + 1) throw FormatError("graph-IDs must be consecutive", lineno);
      if (root >= n) throw FormatError("root out of range", lineno);
      if (current != nullptr) current->index();
      cover.trees.emplace_back();
      current = &cover.trees.back();
      current->graph_id = id;
      current->phase = phase;
      current->vertices.push_back(static_cast<Vertex>(root));
      current->parent.push_back(RootedTree::kNoParent);
      current->depth.push_back(0);
      current->index();
      local_of.clear();
      local_of.emplace(static_cast<Vertex>(root), 0);
      continue;
    }
    if (current == nullptr) throw FormatError("edge line before the first tree header", lineno);
    std::uint64_t child = 0, parent = 0;
    std::istringstream pair(line);
    if (!(pair >> child >> parent)) throw FormatError("expected '<child> <parent>'", lineno);
    if (child >= n || parent >= n) throw FormatError("vertex out of range", lineno);
    if (local_of.count(static_cast<Vertex>(child)) != 0) {
      throw FormatError("vertex listed twice in a tree", lineno);
    }
    const auto p = local_of.find(static_cast<Vertex>(parent));
    if (p == local_of.end()) throw FormatError("parent listed before it appears in the tree", lineno);
    local_of.emplace(static_cast<Vertex>(child), static_cast<std::uint32_t>(current->size()));
    current->vertices.push_back(static_cast<Vertex>(child));
    current->parent.push_back(p->second);
    current->depth.push_back(current->depth[p->second] + 1);
  }
  if (current != nullptr) current->index();
  if (cover.trees.size() != count) {
    throw FormatError("header announces " + std::to_string(count) + " trees, found " +
                      std::to_string(cover.trees.size()), lineno);
  }
  cover.rebuild_membership();
  return cover;
}

}  // namespace hudg
