#include "sqcon/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace sqcon {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Guards against floating-point drift at activation thresholds. Radicands
// may dip below zero by rounding only; a drop past -1e-12 means a caller
// evaluated a curve outside its slab. Inverse-trig arguments clamp to
// [-1, 1] on the same grounds.
inline double safe_sqrt(double v) {
  assert(v > -1e-12);
  return std::sqrt(std::max(v, 0.0));
}

inline double safe_acos(double v) {
  return std::acos(std::clamp(v, -1.0, 1.0));
}

inline double safe_asin(double v) {
  return std::asin(std::clamp(v, -1.0, 1.0));
}

// Corner overlap in the vertex-local frame: (a, b) are the distances from u
// to the two sides meeting at the vertex. Valid for a^2 + b^2 < r0^2.
double corner_overlap_local(double a, double b, double r0) {
  const double qa = safe_sqrt(r0 * r0 - a * a);  // chord offset along b-axis
  const double qb = safe_sqrt(r0 * r0 - b * b);  // chord offset along a-axis
  const double chord_sq = 2.0 * r0 * r0 - 2.0 * a * qb - 2.0 * b * qa;
  const double theta = 2.0 * safe_asin(safe_sqrt(chord_sq) / (2.0 * r0));
  const double area = 0.5 * r0 * r0 * theta - 0.5 * (qb - a) * b - 0.5 * (qa - b) * a;
  return std::max(area, 0.0);
}

}  // namespace

double side_distance(const Point& u, int side) {
  switch (side) {
    case 1: return u.x;
    case 2: return u.y;
    case 3: return 1.0 - u.x;
    default: return 1.0 - u.y;
  }
}

double vertex_distance(const Point& u, int vertex) {
  double a, b;
  switch (vertex) {
    case 1: a = u.x;       b = u.y;       break;
    case 2: a = 1.0 - u.x; b = u.y;       break;
    case 3: a = 1.0 - u.x; b = 1.0 - u.y; break;
    default: a = u.x;      b = 1.0 - u.y; break;
  }
  return std::hypot(a, b);
}

double segment_area(const Point& u, double r0, int side) {
  const double d = side_distance(u, side);
  if (!(d < r0)) return 0.0;
  return r0 * r0 * safe_acos(d / r0) - d * safe_sqrt(r0 * r0 - d * d);
}

double corner_area(const Point& u, double r0, int vertex) {
  double a, b;
  switch (vertex) {
    case 1: a = u.x;       b = u.y;       break;
    case 2: a = 1.0 - u.x; b = u.y;       break;
    case 3: a = 1.0 - u.x; b = 1.0 - u.y; break;
    default: a = u.x;      b = 1.0 - u.y; break;
  }
  if (!(a * a + b * b < r0 * r0)) return 0.0;
  return corner_overlap_local(a, b, r0);
}

double coverage_cdf(const Point& u, double r0) {
  if (r0 <= 0.0) return 0.0;
  if (r0 >= kSqrt2) return 1.0;
  double area = kPi * r0 * r0;
  for (int ell = 1; ell <= 4; ++ell) area -= segment_area(u, r0, ell);
  for (int ell = 1; ell <= 4; ++ell) area += corner_area(u, r0, ell);
  return std::clamp(area, 0.0, 1.0);
}

double coverage_from_masks(const Point& u, double r0, std::uint8_t sides,
                           std::uint8_t corners) {
  double area = kPi * r0 * r0;
  for (int ell = 1; ell <= 4; ++ell) {
    if (sides & (1u << (ell - 1))) area -= segment_area(u, r0, ell);
  }
  for (int ell = 1; ell <= 4; ++ell) {
    if (corners & (1u << (ell - 1))) area += corner_area(u, r0, ell);
  }
  return std::clamp(area, 0.0, 1.0);
}

BoundaryEffects classify(const Point& u, double r0) {
  BoundaryEffects fx;
  if (r0 <= 0.0) return fx;
  for (int ell = 1; ell <= 4; ++ell) {
    if (side_distance(u, ell) < r0) {
      fx.active_sides |= static_cast<std::uint8_t>(1u << (ell - 1));
      fx.segments[ell - 1] = segment_area(u, r0, ell);
    }
    if (vertex_distance(u, ell) < r0) {
      fx.active_vertices |= static_cast<std::uint8_t>(1u << (ell - 1));
      fx.corners[ell - 1] = corner_area(u, r0, ell);
    }
  }
  return fx;
}

}  // namespace sqcon
