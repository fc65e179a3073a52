#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "sqcon/quadrature.hpp"

// Subregion decomposition of the unit square for a given transmission
// range. Within each subregion the set of active border/corner effects is
// constant, so the coverage CDF has a single closed form there. The
// decomposition changes with r0 across seven range cases; each case lists
// one canonical copy per subregion type together with the count of its
// congruent images under the symmetries of the square (multiplicity).
// Integrals over the square reduce to sum_i n_i * integral over the
// canonical copy, because the coverage CDF is invariant under those
// symmetries.

namespace sqcon {

// Case interval endpoints: {0, 1/2, 2-sqrt(2), 5/8, 1/sqrt(2), 1,
// sqrt(5)/2, sqrt(2)}. Case i spans [boundary[i-1], boundary[i]]; an r0 on
// a shared endpoint belongs to the lower case (either decomposition is
// valid there by continuity).
extern const std::array<double, 8> kCaseBoundaries;

// Sentinel case id for r0 > sqrt(2), where every disk covers the square.
inline constexpr int kFullCoverageCase = 8;

struct RangeCase {
  int case_id = 0;  // 1..7, or kFullCoverageCase
  double lo = 0.0;
  double hi = 0.0;
};

// Bound curves usable as slab edges. Non-constant curves are functions of
// the slab's outer variable t.
enum class Curve : std::uint8_t {
  kConstant,          // c
  kCircleNear,        // sqrt(r0^2 - t^2)           circle centred at t = 0
  kCircleFar,         // sqrt(r0^2 - (t-1)^2)       circle centred at t = 1
  kOneMinusCircleNear,  // 1 - sqrt(r0^2 - t^2)
  kOneMinusCircleFar,   // 1 - sqrt(r0^2 - (t-1)^2)
};

struct Bound {
  Curve curve = Curve::kConstant;
  double c = 0.0;

  double eval(double t, double r0) const;
};

// One x-slab (or y-slab, when the outer variable is y) of a subregion:
// outer variable in [t_lo, t_hi], inner variable between the two bounds.
struct Slab {
  bool outer_is_x = true;
  double t_lo = 0.0;
  double t_hi = 0.0;
  Bound lower;
  Bound upper;
};

struct SubregionSpec {
  int type_id = 0;       // R_i index within the case
  int multiplicity = 0;  // n_i congruent copies
  std::uint8_t sides = 0;    // active side mask, bit ell-1 <-> S_ell
  std::uint8_t corners = 0;  // active corner mask
  bool fully_covered = false;  // coverage CDF is identically 1 here
  std::vector<Slab> pieces;    // union of up to 3 slabs
};

// The case whose interval contains r0 (r0 >= 0 required).
RangeCase range_case(double r0);

// The full decomposition for r0. For r0 > sqrt(2) returns the single
// fully covered cell spanning the square.
std::vector<SubregionSpec> subregions(double r0);

// Area of one canonical copy (not multiplied by the multiplicity).
double subregion_area(const SubregionSpec& spec, double r0);

// Integral of f(x, y) over one canonical copy: iterated adaptive
// quadrature per slab, outer variable as the slab dictates. Not scaled by
// the multiplicity.
IntegralResult integrate_cell(const std::function<double(double, double)>& f,
                              const SubregionSpec& spec, double r0,
                              const IntegrationSettings& settings = {});

}  // namespace sqcon
