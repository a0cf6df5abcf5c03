#include "hudg/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hudg {

namespace {

// log(sinh(x)) for x > 0 without overflow for large x.
double log_sinh(double x) {
  if (x > 20.0) {
    return x - std::log(2.0) + std::log1p(-std::exp(-2.0 * x));
  }
  return std::log(std::sinh(x));
}

void require_theta_domain(double r1, double r2, double R, const char* what) {
  if (!(R > 0.0) || !(r1 > 0.0) || !(r2 > 0.0) || r1 > R || r2 > R) {
    throw DomainError(std::string(what) + ": radii must lie in (0, R] with R > 0 (r1=" +
                      std::to_string(r1) + ", r2=" + std::to_string(r2) +
                      ", R=" + std::to_string(R) + ")");
  }
}

void require_far_pair(double r1, double r2, double R, const char* what) {
  if (r1 + r2 < R * (1.0 - 1e-12)) {
    throw DomainError(std::string(what) + ": requires r1 + r2 >= R");
  }
}

}  // namespace

PolarPoint PolarPoint::make(double radius, double angle) {
  if (!(radius >= 0.0)) {
    throw DomainError("PolarPoint: radius must be non-negative");
  }
  return PolarPoint{radius, normalize_angle(angle)};
}

double normalize_angle(double phi) {
  double a = std::fmod(phi, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double angular_distance(double phi1, double phi2) {
  // Same value as pi - |pi - diff|, without cancellation for small gaps.
  const double diff = std::fabs(normalize_angle(phi1) - normalize_angle(phi2));
  return diff > kPi ? kTwoPi - diff : diff;
}

double checked_acos(double x) {
  if (x > 1.0) {
    if (x > 1.0 + kDomainClamp) throw DomainError("acos argument above 1: " + std::to_string(x));
    x = 1.0;
  } else if (x < -1.0) {
    if (x < -1.0 - kDomainClamp) throw DomainError("acos argument below -1: " + std::to_string(x));
    x = -1.0;
  }
  return std::acos(x);
}

double checked_acosh(double x) {
  if (x < 1.0) {
    if (x < 1.0 - kDomainClamp) throw DomainError("acosh argument below 1: " + std::to_string(x));
    x = 1.0;
  }
  return std::acosh(x);
}

// cosh d = cosh(r1 - r2) + 2 sinh r1 sinh r2 sin^2(dphi / 2), and
// acosh(1 + 2 s^2) = 2 asinh(s). Every term is non-negative, so the acosh
// argument never drops below 1 and nearby points keep full precision.
double hyperbolic_distance(const PolarPoint& p, const PolarPoint& q) {
  const double half_gap = std::sinh(0.5 * (p.radius - q.radius));
  const double half_angle = std::sin(0.5 * angular_distance(p.angle, q.angle));
  const double s2 = half_gap * half_gap +
                    std::sinh(p.radius) * std::sinh(q.radius) * half_angle * half_angle;
  return 2.0 * std::asinh(std::sqrt(s2));
}

double poincare_distance(const EuclideanPoint& p, const EuclideanPoint& q) {
  const double np = p.x * p.x + p.y * p.y;
  const double nq = q.x * q.x + q.y * q.y;
  if (np >= 1.0 || nq >= 1.0) {
    throw DomainError("poincare_distance: points must lie strictly inside the unit disk");
  }
  const double diff = euclidean_distance(p, q);
  return 2.0 * std::asinh(diff / std::sqrt((1.0 - np) * (1.0 - nq)));
}

double euclidean_distance(const EuclideanPoint& p, const EuclideanPoint& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

// Half-angle form of the acos definition:
//   sin^2(theta / 2) = sinh((R + d) / 2) sinh((R - d) / 2) / (sinh r1 sinh r2)
// with d = |r1 - r2|, evaluated in log space.
double theta(double r1, double r2, double R) {
  require_theta_domain(r1, r2, R, "theta");
  if (r1 + r2 <= R) return kPi;
  const double d = std::fabs(r1 - r2);
  const double log_s2 = log_sinh(0.5 * (R + d)) + log_sinh(0.5 * (R - d)) -
                        log_sinh(r1) - log_sinh(r2);
  if (log_s2 >= 0.0) return kPi;
  return 2.0 * std::asin(std::exp(0.5 * log_s2));
}

double theta_diagonal(double r) {
  if (!(r > 0.0)) throw DomainError("theta_diagonal: radius must be positive");
  return 2.0 * std::asin(0.5 / std::cosh(0.5 * r));
}

double theta_lower_bound(double r1, double r2, double R) {
  require_theta_domain(r1, r2, R, "theta_lower_bound");
  require_far_pair(r1, r2, R, "theta_lower_bound");
  const double radicand = std::exp(R - r1 - r2) + std::exp(-R - r1 - r2) -
                          (std::exp(-2.0 * r1) + std::exp(-2.0 * r2));
  return 2.0 * std::sqrt(std::max(radicand, 0.0));
}

double theta_upper_bound(double r1, double r2, double R) {
  require_theta_domain(r1, r2, R, "theta_upper_bound");
  require_far_pair(r1, r2, R, "theta_upper_bound");
  return kPi * std::sqrt(std::exp(R - r1 - r2));
}

double theta_simple_lower_bound(double r1, double r2, double R) {
  require_theta_domain(r1, r2, R, "theta_simple_lower_bound");
  require_far_pair(r1, r2, R, "theta_simple_lower_bound");
  if (R < 1.0) throw DomainError("theta_simple_lower_bound: requires R >= 1");
  if (std::fabs(r1 - r2) > R - 1.0) {
    throw DomainError("theta_simple_lower_bound: requires |r1 - r2| <= R - 1");
  }
  return std::sqrt(std::exp(R - r1 - r2));
}

double path_angle_bound(std::int64_t hops, double r, double R) {
  if (hops < 1) throw DomainError("path_angle_bound: hop count must be at least 1");
  if (!(R > 0.0) || r < 0.5 * R) throw DomainError("path_angle_bound: requires r >= R/2");
  return static_cast<double>(hops) * kPi * std::exp(0.5 * R - r);
}

}  // namespace hudg
