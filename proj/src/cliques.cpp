#include "hudg/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hudg {

namespace {

void require_strongly_hyperbolic(const DiskRepresentation& rep, const Graph& g) {
  if (!rep.strongly_hyperbolic()) {
    throw std::invalid_argument("clique covers require a strongly hyperbolic representation");
  }
  if (rep.size() != g.num_vertices()) {
    throw std::invalid_argument("representation and graph sizes differ");
  }
}

// Appends the two half-plane parts of `region` relative to `center`.
void split_halves(const DiskRepresentation& rep, const std::vector<Vertex>& region,
                  const PolarPoint& center, CliqueCover& cover) {
  std::vector<Vertex> front, back;
  for (Vertex v : region) {
    const double rel = normalize_angle(rep.coords[v][1] - center.angle);
    (rel < kPi ? front : back).push_back(v);
  }
  if (!front.empty()) cover.parts.push_back(std::move(front));
  if (!back.empty()) cover.parts.push_back(std::move(back));
}

}  // namespace

CliqueCover two_clique_cover_inner(const DiskRepresentation& rep, const Graph& g,
                                   const PolarPoint& p) {
  require_strongly_hyperbolic(rep, g);
  if (p.radius > rep.threshold) throw std::invalid_argument("center must lie inside D_R");
  std::vector<Vertex> region;
  for (Vertex v = 0; v < rep.size(); ++v) {
    const PolarPoint q = rep.polar(v);
    if (q.radius <= p.radius && within_threshold(hyperbolic_distance(q, p), rep.threshold)) {
      region.push_back(v);
    }
  }
  CliqueCover cover;
  cover.disk_centers.push_back(p);
  split_halves(rep, region, p, cover);
  return cover;
}

CliqueCover clique_cover(const DiskRepresentation& rep, const Graph& g) {
  require_strongly_hyperbolic(rep, g);
  const double R = rep.threshold;
  if (!(R > 0.0)) throw std::invalid_argument("clique_cover: R must be positive");
  CliqueCover cover;
  if (rep.size() == 0) return cover;

  const double spacing = 2.0 * theta_diagonal(R);
  const auto k = static_cast<std::size_t>(std::ceil(kPi / theta_diagonal(R)));
  cover.spacing = spacing;
  for (std::size_t i = 0; i < k; ++i) {
    cover.disk_centers.push_back(PolarPoint{R, normalize_angle(spacing * static_cast<double>(i))});
  }

  auto covers = [&](Vertex v, std::size_t i) {
    return within_threshold(hyperbolic_distance(rep.polar(v), cover.disk_centers[i]), R);
  };

  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < rep.size(); ++v) {
    const double r = std::min(rep.coords[v][0], R);
    const double phi = rep.coords[v][1];
    // Disks reaching v have centers within theta(r, R) of phi; everything
    // below that angular window cannot contain v.
    const double reach = r > 0.0 ? theta(r, R, R) : kPi;
    std::size_t chosen = k;
    if (covers(v, 0)) {
      chosen = 0;
    } else {
      const double lowest = std::floor((phi - reach) / spacing) - 1.0;
      const std::size_t start = lowest > 0.0 ? static_cast<std::size_t>(lowest) : 0;
      for (std::size_t i = start; i < k && chosen == k; ++i) {
        if (covers(v, i)) chosen = i;
      }
      for (std::size_t i = 0; i < std::min(start, k) && chosen == k; ++i) {
        if (covers(v, i)) chosen = i;
      }
    }
    if (chosen == k) {
      throw std::logic_error("clique_cover: vertex " + std::to_string(v) + " lies in no disk");
    }
    members[chosen].push_back(v);
  }
  for (std::size_t i = 0; i < k; ++i) {
    split_halves(rep, members[i], cover.disk_centers[i], cover);
  }
  return cover;
}

double clique_cover_bound(double R) {
  return std::ceil(std::max(2.0 * kPi * std::sqrt(2.0), 2.0 * kPi * std::exp(0.5 * R)));
}

bool is_valid_clique_cover(const CliqueCover& cover, const Graph& g, bool require_all) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::size_t covered = 0;
  for (const auto& part : cover.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i] >= g.num_vertices() || seen[part[i]]) return false;
      seen[part[i]] = true;
      ++covered;
      for (std::size_t j = 0; j < i; ++j) {
        if (!g.has_edge(part[i], part[j])) return false;
      }
    }
  }
  return !require_all || covered == g.num_vertices();
}

void write_clique_cover(std::ostream& out, const CliqueCover& cover) {
  for (const auto& part : cover.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i > 0) out << ' ';
      out << part[i];
    }
    out << '\n';
  }
}

}  // namespace hudg
