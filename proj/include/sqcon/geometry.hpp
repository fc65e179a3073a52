#pragma once

#include <array>
#include <cstdint>

// Closed-form coverage geometry on the unit square.
//
// A node at u covers a disk of radius r0. Its coverage CDF F(u; r0) is the
// area of the disk clipped to the square, computed by inclusion-exclusion:
//
//   F = pi r0^2 - sum of side segment areas + sum of corner overlap areas
//
// Sides are numbered S1 = {x=0}, S2 = {y=0}, S3 = {x=1}, S4 = {y=1} and
// vertices V1 = (0,0), V2 = (1,0), V3 = (1,1), V4 = (0,1) (anticlockwise,
// origin at V1). A side/vertex contributes iff the node is strictly closer
// than r0 to it. Pairwise overlaps only occur at the four corners; opposite
// sides never overlap, so the inclusion-exclusion above is exact for every
// u in the square and every r0.

namespace sqcon {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kSqrt2 = 1.4142135623730950488;

// Distance from u to side S_ell (1..4).
double side_distance(const Point& u, int side);

// Distance from u to vertex V_ell (1..4).
double vertex_distance(const Point& u, int vertex);

// Area of the circular segment of the disk at u lying beyond side S_ell.
// Zero when the side is farther than r0. Result in [0, pi r0^2 / 2].
double segment_area(const Point& u, double r0, int side);

// Area of the overlap between the two segments adjacent to vertex V_ell,
// i.e. the part of the disk beyond both incident sides. Zero when the
// vertex is farther than r0.
double corner_area(const Point& u, double r0, int vertex);

// Coverage CDF F(u; r0) = |disk(u, r0) ∩ unit square|. Exactly 1 once
// r0 >= sqrt(2); 0 at r0 = 0. Result clamped to [0, 1].
double coverage_cdf(const Point& u, double r0);

// Coverage evaluated from a fixed set of active sides/corners (bit ell-1
// set means S_ell / V_ell contributes). Matches coverage_cdf whenever the
// masks equal the active sets at u; used by the partition integrands where
// the active sets are constant per subregion.
double coverage_from_masks(const Point& u, double r0, std::uint8_t sides,
                           std::uint8_t corners);

// Active boundary effects at a point: which sides/vertices clip the disk,
// and the corresponding segment/corner areas.
struct BoundaryEffects {
  std::array<double, 4> segments{};  // B_1..B_4
  std::array<double, 4> corners{};   // C_1..C_4
  std::uint8_t active_sides = 0;     // bit ell-1 <-> S_ell
  std::uint8_t active_vertices = 0;  // bit ell-1 <-> V_ell
};

BoundaryEffects classify(const Point& u, double r0);

}  // namespace sqcon
