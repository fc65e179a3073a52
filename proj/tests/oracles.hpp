#pragma once

#include <functional>

#include "sqcon/geometry.hpp"
#include "sqcon/quadrature.hpp"
#include "sqcon/simulator.hpp"

// Independent reference computations for the test suites. Everything here
// deliberately avoids the code paths it is used to check: areas come from
// column-sliced grid integration instead of the closed forms, whole-square
// integrals bypass the subregion decomposition, and k-connectivity is
// decided by max-flow instead of removal enumeration.

namespace sqcon::testing {

// Area of disk(u, r0) clipped to the unit square, by midpoint integration
// over x columns with the exact chord length in y per column.
double disk_square_area_oracle(const Point& u, double r0, int columns = 60000);

// Area of the disk part beyond one side (local frame: d = distance from
// center to the side, region beyond the side unbounded in y).
double segment_area_oracle(double d, double r0, int columns = 60000);

// Area of the disk part beyond both sides of a corner (local frame:
// center at (a, b), region {x < 0, y < 0}).
double corner_area_oracle(double a, double b, double r0, int columns = 60000);

// CDF of the distance between two uniform points in the unit square.
double square_line_picking_cdf(double r);

// Integral over the unit square of g(coverage_cdf(u; r0)) without the
// subregion decomposition: plain nested adaptive quadrature on [0,1]^2.
IntegralResult integrate_square_direct(double r0,
                                       const std::function<double(double)>& g,
                                       const IntegrationSettings& settings = {});

// Max internally vertex-disjoint s-t paths of at least `needed`, by
// augmenting-path max flow on the split-vertex digraph (Menger).
bool menger_k_connected(const GraphSample& g, int k);

}  // namespace sqcon::testing
