#pragma once

#include <cstdint>
#include <stdexcept>

namespace hudg {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Relative slack applied to every "distance at most R" test. Distances that
// are mathematically equal to the threshold may evaluate a few ulps above it.
inline constexpr double kBoundarySlack = 1e-9;

// Window below the domain edge of acos/acosh that is absorbed as round-off.
inline constexpr double kDomainClamp = 1e-12;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A point of the hyperbolic plane in polar coordinates around the pole.
struct PolarPoint {
  double radius = 0.0;
  double angle = 0.0;  // in [0, 2pi)

  static PolarPoint make(double radius, double angle);
};

// Cartesian point, used for the Euclidean plane and the Poincare disk.
struct EuclideanPoint {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const PolarPoint& a, const PolarPoint& b) {
  return a.radius == b.radius && a.angle == b.angle;
}
inline bool operator==(const EuclideanPoint& a, const EuclideanPoint& b) {
  return a.x == b.x && a.y == b.y;
}

double normalize_angle(double phi);

// Delta_phi = pi - |pi - |phi1 - phi2||, in [0, pi].
double angular_distance(double phi1, double phi2);

double hyperbolic_distance(const PolarPoint& p, const PolarPoint& q);

// Distance in the Poincare disk model. Both points must lie strictly inside
// the unit disk.
double poincare_distance(const EuclideanPoint& p, const EuclideanPoint& q);

double euclidean_distance(const EuclideanPoint& p, const EuclideanPoint& q);

// True iff `distance` is at most `threshold` (closed, with kBoundarySlack).
inline bool within_threshold(double distance, double threshold) {
  return distance <= threshold + kBoundarySlack * threshold;
}

/// Maximum angular distance at which two points of radii r1, r2 are still
/// within hyperbolic distance R of each other. Returns pi whenever
/// r1 + r2 <= R. Requires r1, r2 in (0, R].
double theta(double r1, double r2, double R);

/// theta(r, r) with threshold r, i.e. acos(1 - 1/(cosh r + 1)).
double theta_diagonal(double r);

// Closed-form bounds on theta. Both require R > 0, r1, r2 in (0, R] and
// r1 + r2 >= R.
double theta_lower_bound(double r1, double r2, double R);
double theta_upper_bound(double r1, double r2, double R);

// sqrt(e^(R - r1 - r2)). Additionally requires R >= 1 and |r1 - r2| <= R - 1.
double theta_simple_lower_bound(double r1, double r2, double R);

// Angular spread of a k-hop path that never goes below radius r >= R/2:
// k * pi * e^(R/2 - r).
double path_angle_bound(std::int64_t hops, double r, double R);

// acos/acosh with the round-off clamp policy: arguments within kDomainClamp
// outside the domain are clamped, anything further out throws DomainError.
double checked_acos(double x);
double checked_acosh(double x);

}  // namespace hudg
