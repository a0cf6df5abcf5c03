#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hudg/geom.hpp"
#include "hudg/graph.hpp"

namespace hudg {

enum class Metric { kEuclidean, kHyperbolicPolar, kPoincare };

std::string_view metric_name(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Geometric side of a unit disk graph: one point per vertex, the adjacency
// threshold and the radius of the ground disk holding all points.
//
// Coordinates are (radius, angle) for kHyperbolicPolar and (x, y) otherwise.
struct DiskRepresentation {
  Metric metric = Metric::kHyperbolicPolar;
  double threshold = 1.0;
  double ground_radius = 1.0;
  std::vector<std::array<double, 2>> coords;

  std::size_t size() const { return coords.size(); }

  PolarPoint polar(Vertex v) const { return {coords[v][0], coords[v][1]}; }
  EuclideanPoint planar(Vertex v) const { return {coords[v][0], coords[v][1]}; }

  // Hyperbolic polar representation whose ground disk equals the threshold.
  bool strongly_hyperbolic() const {
    return metric == Metric::kHyperbolicPolar && ground_radius == threshold;
  }

  friend bool operator==(const DiskRepresentation&, const DiskRepresentation&) = default;
};

// Throws RepresentationError when a point leaves the ground disk, an angle is
// not normalized, or a Poincare point is not inside the unit disk.
void validate(const DiskRepresentation& rep);

// Metric distance between the points of u and v.
double point_distance(const DiskRepresentation& rep, Vertex u, Vertex v);

bool adjacent(const DiskRepresentation& rep, Vertex u, Vertex v);

// Edge {u, v} iff the points are at distance at most the threshold.
Graph build_udg(const DiskRepresentation& rep);

// Radii follow alpha sinh(alpha r) / (cosh(alpha R) - 1) on [0, R] and angles
// are uniform. Deterministic for a fixed seed.
DiskRepresentation sample_strongly_hyperbolic_udg(std::size_t n, double R, double radial_exponent,
                                                  std::uint64_t seed);

// Hyperbolic random graph: R defaults to max(2 ln n, 1).
DiskRepresentation sample_hrg(std::size_t n, std::optional<double> R, double alpha,
                              std::uint64_t seed);

double hrg_auto_radius(std::size_t n);

// Uniform points in [0, side]^2.
DiskRepresentation sample_euclidean_udg(std::size_t n, double side, double R, std::uint64_t seed);

// Points on a square grid with the given spacing, each jittered uniformly by
// up to `jitter` in both coordinates.
DiskRepresentation euclidean_grid(std::size_t n, double spacing, double jitter, double R,
                                  std::uint64_t seed);

std::vector<Vertex> neighborhood(const DiskRepresentation& rep, const Graph& g, Vertex v);

// Copy of rep with v moved radially inward to new_radius (angle unchanged).
DiskRepresentation move_inward(const DiskRepresentation& rep, Vertex v, double new_radius);

struct ConversionCertificate {
  double rho_star = 0.0;
  double tau = 0.0;  // +inf when every pair is adjacent
  double g_hat = 0.0;
  double g_check = 0.0;
  double scaled_threshold = 0.0;  // Euclidean threshold after scaling into the rho disk
  double threshold = 0.0;         // chosen hyperbolic threshold R_H
  int halvings = 0;
};

// Upper and lower factors relating Poincare and Euclidean distances for points
// inside a Euclidean disk of radius rho <= 1/2.
double conversion_upper_factor(double rho);
double conversion_lower_factor(double rho);

class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConversionResult {
  DiskRepresentation representation;  // Metric::kPoincare
  ConversionCertificate certificate;
};

// Realizes a Euclidean unit disk graph as a hyperbolic one in the Poincare
// disk by shrinking it into a small disk around the origin. The result is
// rechecked against the input adjacency; any mismatch throws ConversionError.
ConversionResult euclidean_to_hyperbolic(const DiskRepresentation& euclidean);

}  // namespace hudg
