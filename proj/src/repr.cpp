#include "hudg/repr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hudg/random.hpp"

namespace hudg {

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::kEuclidean:
      return "euclidean";
    case Metric::kHyperbolicPolar:
      return "hyperbolic-polar";
    case Metric::kPoincare:
      return "poincare";
  }
  return "unknown";
}

std::optional<Metric> parse_metric(std::string_view name) {
  if (name == "euclidean") return Metric::kEuclidean;
  if (name == "hyperbolic-polar") return Metric::kHyperbolicPolar;
  if (name == "poincare") return Metric::kPoincare;
  return std::nullopt;
}

void validate(const DiskRepresentation& rep) {
  if (!(rep.threshold >= 0.0) || !std::isfinite(rep.threshold)) {
    throw RepresentationError("threshold must be a finite non-negative number");
  }
  if (!(rep.ground_radius > 0.0) || !std::isfinite(rep.ground_radius)) {
    throw RepresentationError("ground radius must be a finite positive number");
  }
  const double limit = rep.ground_radius * (1.0 + 1e-12);
  for (std::size_t v = 0; v < rep.size(); ++v) {
    const auto [c1, c2] = rep.coords[v];
    if (!std::isfinite(c1) || !std::isfinite(c2)) {
      throw RepresentationError("vertex " + std::to_string(v) + " has a non-finite coordinate");
    }
    double norm = 0.0;
    if (rep.metric == Metric::kHyperbolicPolar) {
      if (c1 < 0.0) throw RepresentationError("vertex " + std::to_string(v) + " has negative radius");
      if (c2 < 0.0 || c2 >= kTwoPi) {
        throw RepresentationError("vertex " + std::to_string(v) + " has an angle outside [0, 2pi)");
      }
      norm = c1;
    } else {
      norm = std::hypot(c1, c2);
      if (rep.metric == Metric::kPoincare && norm >= 1.0) {
        throw RepresentationError("vertex " + std::to_string(v) + " lies outside the Poincare disk");
      }
    }
    if (norm > limit) {
      throw RepresentationError("vertex " + std::to_string(v) + " lies outside the ground disk");
    }
  }
}

double point_distance(const DiskRepresentation& rep, Vertex u, Vertex v) {
  switch (rep.metric) {
    case Metric::kHyperbolicPolar:
      return hyperbolic_distance(rep.polar(u), rep.polar(v));
    case Metric::kPoincare:
      return poincare_distance(rep.planar(u), rep.planar(v));
    case Metric::kEuclidean:
      return euclidean_distance(rep.planar(u), rep.planar(v));
  }
  return std::numeric_limits<double>::infinity();
}

bool adjacent(const DiskRepresentation& rep, Vertex u, Vertex v) {
  return within_threshold(point_distance(rep, u, v), rep.threshold);
}

namespace {

// Polar adjacency over all pairs. cosh d is first evaluated in the cheap
// (cancellation-prone) product form; only pairs whose value is within the
// round-off band of the threshold fall back to the exact distance.
std::vector<std::pair<Vertex, Vertex>> polar_edges(const DiskRepresentation& rep) {
  const std::size_t n = rep.size();
  std::vector<double> ch(n), sh(n), cs(n), sn(n);
  for (std::size_t v = 0; v < n; ++v) {
    ch[v] = std::cosh(rep.coords[v][0]);
    sh[v] = std::sinh(rep.coords[v][0]);
    cs[v] = std::cos(rep.coords[v][1]);
    sn[v] = std::sin(rep.coords[v][1]);
  }
  const double boundary = std::cosh(rep.threshold * (1.0 + kBoundarySlack));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double scale = ch[u] * ch[v];
      const double cosh_d = scale - sh[u] * sh[v] * (cs[u] * cs[v] + sn[u] * sn[v]);
      const double band = 1e-10 * scale;
      bool is_edge;
      if (cosh_d < boundary - band) {
        is_edge = true;
      } else if (cosh_d > boundary + band) {
        is_edge = false;
      } else {
        is_edge = adjacent(rep, u, v);
      }
      if (is_edge) edges.emplace_back(u, v);
    }
  }
  return edges;
}

}  // namespace

Graph build_udg(const DiskRepresentation& rep) {
  validate(rep);
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (rep.metric == Metric::kHyperbolicPolar) {
    edges = polar_edges(rep);
  } else {
    for (Vertex u = 0; u < rep.size(); ++u) {
      for (Vertex v = u + 1; v < rep.size(); ++v) {
        if (adjacent(rep, u, v)) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(rep.size(), edges);
}

DiskRepresentation sample_strongly_hyperbolic_udg(std::size_t n, double R, double radial_exponent,
                                                  std::uint64_t seed) {
  if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("R must be positive");
  if (!(radial_exponent > 0.0)) throw std::invalid_argument("radial exponent must be positive");
  const double alpha = radial_exponent;
  const double span = std::cosh(alpha * R) - 1.0;
  if (!std::isfinite(span)) throw std::invalid_argument("alpha * R too large for double precision");

  DiskRepresentation rep;
  rep.metric = Metric::kHyperbolicPolar;
  rep.threshold = R;
  rep.ground_radius = R;
  rep.coords.resize(n);
  Rng rng(seed);
  for (auto& c : rep.coords) {
    const double u = rng.uniform();
    const double r = std::acosh(1.0 + u * span) / alpha;
    c[0] = std::min(r, R);
    c[1] = normalize_angle(kTwoPi * rng.uniform());
  }
  return rep;
}

double hrg_auto_radius(std::size_t n) {
  if (n == 0) return 1.0;
  return std::max(2.0 * std::log(static_cast<double>(n)), 1.0);
}

DiskRepresentation sample_hrg(std::size_t n, std::optional<double> R, double alpha,
                              std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_hrg: n must be at least 1");
  return sample_strongly_hyperbolic_udg(n, R.value_or(hrg_auto_radius(n)), alpha, seed);
}

namespace {

double max_norm(const DiskRepresentation& rep) {
  double m = 0.0;
  for (const auto& c : rep.coords) m = std::max(m, std::hypot(c[0], c[1]));
  return m;
}

}  // namespace

DiskRepresentation sample_euclidean_udg(std::size_t n, double side, double R, std::uint64_t seed) {
  if (!(side > 0.0) || !(R > 0.0)) throw std::invalid_argument("side and R must be positive");
  DiskRepresentation rep;
  rep.metric = Metric::kEuclidean;
  rep.threshold = R;
  rep.coords.resize(n);
  Rng rng(seed);
  for (auto& c : rep.coords) {
    c[0] = rng.uniform(0.0, side);
    c[1] = rng.uniform(0.0, side);
  }
  const double m = max_norm(rep);
  rep.ground_radius = m > 0.0 ? m : 1.0;
  return rep;
}

DiskRepresentation euclidean_grid(std::size_t n, double spacing, double jitter, double R,
                                  std::uint64_t seed) {
  if (!(spacing > 0.0) || !(R > 0.0) || jitter < 0.0) {
    throw std::invalid_argument("euclidean_grid: spacing and R must be positive, jitter >= 0");
  }
  const auto width = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  DiskRepresentation rep;
  rep.metric = Metric::kEuclidean;
  rep.threshold = R;
  rep.coords.resize(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double jx = jitter > 0.0 ? rng.uniform(-jitter, jitter) : 0.0;
    const double jy = jitter > 0.0 ? rng.uniform(-jitter, jitter) : 0.0;
    rep.coords[i] = {static_cast<double>(i % width) * spacing + jx,
                     static_cast<double>(i / width) * spacing + jy};
  }
  const double m = max_norm(rep);
  rep.ground_radius = m > 0.0 ? m : 1.0;
  return rep;
}

std::vector<Vertex> neighborhood(const DiskRepresentation& rep, const Graph& g, Vertex v) {
  if (rep.size() != g.num_vertices() || v >= g.num_vertices()) {
    throw std::out_of_range("neighborhood: vertex or representation does not match the graph");
  }
  const auto adj = g.neighbors(v);
  return {adj.begin(), adj.end()};
}

DiskRepresentation move_inward(const DiskRepresentation& rep, Vertex v, double new_radius) {
  if (rep.metric != Metric::kHyperbolicPolar) {
    throw std::invalid_argument("move_inward: requires a hyperbolic polar representation");
  }
  if (v >= rep.size()) throw std::out_of_range("move_inward: no such vertex");
  if (!(new_radius >= 0.0) || new_radius > rep.coords[v][0]) {
    throw std::invalid_argument("move_inward: new radius must lie in [0, r(v)]");
  }
  DiskRepresentation moved = rep;
  moved.coords[v][0] = new_radius;
  return moved;
}

double conversion_upper_factor(double rho) { return 2.0 / (1.0 - rho * rho); }

double conversion_lower_factor(double rho) {
  return 2.0 * (1.0 - rho / std::pow(1.0 + 4.0 * rho * rho, 1.5));
}

ConversionResult euclidean_to_hyperbolic(const DiskRepresentation& euclidean) {
  if (euclidean.metric != Metric::kEuclidean) {
    throw std::invalid_argument("euclidean_to_hyperbolic: input must use the Euclidean metric");
  }
  if (!(euclidean.threshold > 0.0)) {
    throw std::invalid_argument("euclidean_to_hyperbolic: threshold must be positive");
  }
  const Graph input = build_udg(euclidean);
  const std::size_t n = euclidean.size();

  // Adjacent pairs may sit up to the boundary slack above the nominal
  // threshold, so the construction works with the effective threshold.
  const double effective = euclidean.threshold * (1.0 + kBoundarySlack);
  double tau = std::numeric_limits<double>::infinity();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (input.has_edge(u, v)) continue;
      tau = std::min(tau, point_distance(euclidean, u, v) / effective);
    }
  }

  // The Poincare side applies the same relative slack, which the interval
  // must absorb as well: ghat (1 + slack) < tau gcheck.
  ConversionCertificate cert;
  cert.tau = tau;
  double rho = 0.5;
  bool found = false;
  for (int halvings = 0; halvings <= 60; ++halvings) {
    if (conversion_upper_factor(rho) * (1.0 + 2.0 * kBoundarySlack) <
        tau * conversion_lower_factor(rho)) {
      cert.halvings = halvings;
      found = true;
      break;
    }
    rho *= 0.5;
  }
  if (!found) {
    throw ConversionError("no admissible scale found within 60 halvings (tau = " +
                          std::to_string(tau) + ")");
  }
  cert.rho_star = rho;
  cert.g_hat = conversion_upper_factor(rho);
  cert.g_check = conversion_lower_factor(rho);

  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  if (n > 0) {
    min_x = max_x = euclidean.coords[0][0];
    min_y = max_y = euclidean.coords[0][1];
    for (const auto& c : euclidean.coords) {
      min_x = std::min(min_x, c[0]);
      max_x = std::max(max_x, c[0]);
      min_y = std::min(min_y, c[1]);
      max_y = std::max(max_y, c[1]);
    }
  }
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  double spread = 0.0;
  for (const auto& c : euclidean.coords) spread = std::max(spread, std::hypot(c[0] - cx, c[1] - cy));
  const double scale = spread > 0.0 ? rho / spread : rho / euclidean.threshold;

  ConversionResult result;
  auto& out = result.representation;
  out.metric = Metric::kPoincare;
  out.ground_radius = rho;
  out.coords.reserve(n);
  for (const auto& c : euclidean.coords) {
    double x = (c[0] - cx) * scale;
    double y = (c[1] - cy) * scale;
    const double norm = std::hypot(x, y);
    if (norm > rho) {
      x *= rho / norm;
      y *= rho / norm;
    }
    out.coords.push_back({x, y});
  }
  cert.scaled_threshold = effective * scale;
  const double lo = cert.g_hat * cert.scaled_threshold;
  if (std::isinf(tau)) {
    cert.threshold = 2.0 * lo;
  } else {
    const double hi = tau * cert.g_check * cert.scaled_threshold / (1.0 + kBoundarySlack);
    cert.threshold = 0.5 * (lo + hi);
  }
  out.threshold = cert.threshold;
  result.certificate = cert;

  const Graph realized = build_udg(out);
  if (!(realized == input)) {
    throw ConversionError("converted representation does not reproduce the input adjacency");
  }
  return result;
}

}  // namespace hudg
