#include "sqcon/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sqcon/geometry.hpp"
#include "sqcon/quadrature.hpp"

namespace sqcon {

const std::array<double, 8> kCaseBoundaries = {
    0.0,
    0.5,
    2.0 - kSqrt2,
    0.625,
    1.0 / kSqrt2,
    1.0,
    std::sqrt(5.0) / 2.0,
    kSqrt2,
};

double Bound::eval(double t, double r0) const {
  switch (curve) {
    case Curve::kConstant:
      return c;
    case Curve::kCircleNear:
      return std::sqrt(std::max(r0 * r0 - t * t, 0.0));
    case Curve::kCircleFar:
      return std::sqrt(std::max(r0 * r0 - (t - 1.0) * (t - 1.0), 0.0));
    case Curve::kOneMinusCircleNear:
      return 1.0 - std::sqrt(std::max(r0 * r0 - t * t, 0.0));
    case Curve::kOneMinusCircleFar:
      return 1.0 - std::sqrt(std::max(r0 * r0 - (t - 1.0) * (t - 1.0), 0.0));
  }
  return c;
}

namespace {

Bound constant(double c) { return Bound{Curve::kConstant, c}; }
Bound circle_near() { return Bound{Curve::kCircleNear, 0.0}; }
Bound circle_far() { return Bound{Curve::kCircleFar, 0.0}; }
Bound one_minus_circle_near() { return Bound{Curve::kOneMinusCircleNear, 0.0}; }
Bound one_minus_circle_far() { return Bound{Curve::kOneMinusCircleFar, 0.0}; }

Slab xslab(double lo, double hi, Bound lower, Bound upper) {
  return Slab{true, lo, hi, lower, upper};
}

Slab yslab(double lo, double hi, Bound lower, Bound upper) {
  return Slab{false, lo, hi, lower, upper};
}

constexpr std::uint8_t kS1 = 1u << 0;
constexpr std::uint8_t kS2 = 1u << 1;
constexpr std::uint8_t kS3 = 1u << 2;
constexpr std::uint8_t kS4 = 1u << 3;
constexpr std::uint8_t kAll = kS1 | kS2 | kS3 | kS4;

SubregionSpec make_spec(int type_id, int multiplicity, std::uint8_t sides,
                        std::uint8_t corners, std::vector<Slab> pieces,
                        bool fully_covered = false) {
  SubregionSpec spec;
  spec.type_id = type_id;
  spec.multiplicity = multiplicity;
  spec.sides = sides;
  spec.corners = corners;
  spec.fully_covered = fully_covered;
  spec.pieces = std::move(pieces);
  return spec;
}

std::vector<SubregionSpec> case1(double r0) {
  const double q = 1.0 - r0;
  return {
      make_spec(1, 1, 0, 0, {xslab(r0, q, constant(r0), constant(q))}),
      make_spec(2, 4, kS1, 0, {xslab(0.0, r0, constant(r0), constant(q))}),
      make_spec(3, 4, kS1 | kS2, 0, {xslab(0.0, r0, circle_near(), constant(r0))}),
      make_spec(4, 4, kS1 | kS2, kS1, {xslab(0.0, r0, constant(0.0), circle_near())}),
  };
}

std::vector<SubregionSpec> case2(double r0) {
  const double q = 1.0 - r0;
  const double s = std::sqrt(std::max(2.0 * r0 - 1.0, 0.0));
  return {
      make_spec(1, 4, kS1 | kS2, kS1,
                {xslab(0.0, s, constant(0.0), constant(q)),
                 xslab(s, q, constant(0.0), circle_near())}),
      make_spec(2, 8, kS1 | kS2 | kS3, kS1 | kS2,
                {xslab(q, 0.5, constant(0.0), circle_far())}),
      make_spec(3, 8, kS1 | kS2 | kS3, kS1,
                {xslab(q, 0.5, circle_far(), circle_near())}),
      make_spec(4, 8, kS1 | kS2 | kS3, 0,
                {xslab(q, 0.5, circle_near(), constant(q))}),
      make_spec(5, 4, kS1 | kS2, 0, {xslab(s, q, circle_near(), constant(q))}),
      make_spec(6, 4, kAll, 0, {xslab(q, 0.5, constant(q), constant(0.5))}),
  };
}

std::vector<SubregionSpec> case3(double r0) {
  const double q = 1.0 - r0;
  const double s = std::sqrt(2.0 * r0 - 1.0);
  return {
      make_spec(1, 4, kS1 | kS2, kS1,
                {xslab(0.0, q, constant(0.0), constant(q))}),
      make_spec(2, 8, kS1 | kS2 | kS3, kS1 | kS2,
                {xslab(q, 0.5, constant(0.0), circle_far())}),
      make_spec(3, 8, kS1 | kS2 | kS3, kS1,
                {xslab(q, s, circle_far(), constant(q)),
                 xslab(s, 0.5, circle_far(), circle_near())}),
      make_spec(4, 8, kS1 | kS2 | kS3, 0,
                {xslab(s, 0.5, circle_near(), constant(q))}),
      make_spec(5, 4, kAll, kS1, {xslab(q, s, constant(q), circle_near())}),
      make_spec(6, 4, kAll, 0,
                {xslab(q, s, circle_near(), constant(0.5)),
                 xslab(s, 0.5, constant(q), constant(0.5))}),
  };
}

std::vector<SubregionSpec> case4(double r0) {
  const double q = 1.0 - r0;
  const double xa = std::sqrt(r0 * r0 - 0.25);
  const double xb = 1.0 - std::sqrt(2.0 * r0 - 1.0);

  // R5's lower bound switches from the constant 1-r0 to the far circle at
  // xb, and its upper bound from 1-sqrt(r0^2-x^2) to the near circle at
  // xa. The two switch points cross inside this case (near r0 ~ 0.661), so
  // the piece list follows whichever order holds.
  std::vector<Slab> r5;
  if (xa <= xb) {
    r5 = {xslab(q, xa, constant(q), one_minus_circle_near()),
          xslab(xa, xb, constant(q), circle_near()),
          xslab(xb, 0.5, circle_far(), circle_near())};
  } else {
    r5 = {xslab(q, xb, constant(q), one_minus_circle_near()),
          xslab(xb, xa, circle_far(), one_minus_circle_near()),
          xslab(xa, 0.5, circle_far(), circle_near())};
  }

  return {
      make_spec(1, 4, kS1 | kS2, kS1,
                {xslab(0.0, q, constant(0.0), constant(q))}),
      make_spec(2, 8, kS1 | kS2 | kS3, kS1 | kS2,
                {yslab(0.0, q, one_minus_circle_near(), constant(0.5))}),
      make_spec(3, 8, kS1 | kS2 | kS3, kS1,
                {yslab(0.0, q, constant(q), one_minus_circle_near())}),
      make_spec(4, 8, kAll, kS1 | kS2,
                {xslab(xb, 0.5, constant(q), circle_far())}),
      make_spec(5, 4, kAll, kS1, std::move(r5)),
      make_spec(6, 4, kAll, 0,
                {xslab(xa, 0.5, circle_near(), constant(0.5))}),
  };
}

std::vector<SubregionSpec> case5(double r0) {
  const double q = 1.0 - r0;
  const double xb = 1.0 - std::sqrt(2.0 * r0 - 1.0);
  const double xd = 0.5 * (1.0 - std::sqrt(2.0 * r0 * r0 - 1.0));
  const double xc = 1.0 - std::sqrt(r0 * r0 - 0.25);
  return {
      make_spec(1, 4, kS1 | kS2, kS1,
                {xslab(0.0, q, constant(0.0), constant(q))}),
      make_spec(2, 8, kS1 | kS2 | kS3, kS1 | kS2,
                {xslab(q, xb, constant(0.0), circle_far()),
                 xslab(xb, 0.5, constant(0.0), constant(q))}),
      make_spec(3, 8, kS1 | kS2 | kS3, kS1,
                {xslab(q, xb, circle_far(), constant(q))}),
      make_spec(4, 8, kAll, kS1 | kS2,
                {xslab(xb, xd, constant(q), circle_far()),
                 xslab(xd, 0.5, constant(q), one_minus_circle_near())}),
      make_spec(5, 4, kAll, kS1,
                {xslab(q, xb, constant(q), one_minus_circle_near()),
                 xslab(xb, xd, circle_far(), one_minus_circle_near())}),
      make_spec(6, 4, kAll, kS1 | kS2 | kS4,
                {xslab(xd, xc, one_minus_circle_near(), circle_far()),
                 xslab(xc, 0.5, one_minus_circle_near(), one_minus_circle_far())}),
      make_spec(7, 4, kAll, kAll,
                {xslab(xc, 0.5, one_minus_circle_far(), constant(0.5))},
                /*fully_covered=*/true),
  };
}

std::vector<SubregionSpec> case6(double r0) {
  const double xl = std::sqrt(r0 * r0 - 1.0);
  const double xu = 1.0 - std::sqrt(r0 * r0 - 0.25);

  // R1's lower bound switches off the slab floor at xl (where the corner
  // circle around V4 leaves the square) and its upper bound switches
  // curves at xu. The switch points cross at r0 = sqrt(65)/8, so the piece
  // list follows whichever order holds.
  std::vector<Slab> r1;
  if (xu <= xl) {
    r1 = {xslab(0.0, xu, constant(0.0), circle_far()),
          xslab(xu, xl, constant(0.0), one_minus_circle_far()),
          xslab(xl, 0.5, one_minus_circle_near(), one_minus_circle_far())};
  } else {
    r1 = {xslab(0.0, xl, constant(0.0), circle_far()),
          xslab(xl, xu, one_minus_circle_near(), circle_far()),
          xslab(xu, 0.5, one_minus_circle_near(), one_minus_circle_far())};
  }

  return {
      make_spec(1, 4, kAll, kS1 | kS2 | kS4, std::move(r1)),
      make_spec(2, 8, kAll, kS1 | kS2,
                {xslab(xl, 0.5, constant(0.0), one_minus_circle_near())}),
      make_spec(3, 4, kAll, kAll,
                {xslab(xu, 0.5, one_minus_circle_far(), constant(0.5))},
                /*fully_covered=*/true),
  };
}

std::vector<SubregionSpec> case7(double r0) {
  const double xe = 1.0 - std::sqrt(r0 * r0 - 1.0);
  return {
      make_spec(1, 4, kAll, kS1 | kS2 | kS4,
                {xslab(0.0, xe, constant(0.0), one_minus_circle_far())}),
      make_spec(2, 4, kAll, kAll,
                {xslab(0.0, xe, one_minus_circle_far(), constant(0.5)),
                 xslab(xe, 0.5, constant(0.0), constant(0.5))},
                /*fully_covered=*/true),
  };
}

std::vector<SubregionSpec> full_coverage_cell() {
  return {make_spec(1, 1, kAll, kAll,
                    {xslab(0.0, 1.0, constant(0.0), constant(1.0))},
                    /*fully_covered=*/true)};
}

}  // namespace

RangeCase range_case(double r0) {
  if (!(r0 >= 0.0)) {
    throw std::invalid_argument("range_case: r0 must be >= 0");
  }
  if (r0 > kCaseBoundaries[7]) {
    return RangeCase{kFullCoverageCase, kCaseBoundaries[7],
                     std::numeric_limits<double>::infinity()};
  }
  for (int i = 1; i <= 7; ++i) {
    if (r0 <= kCaseBoundaries[i]) {
      return RangeCase{i, kCaseBoundaries[i - 1], kCaseBoundaries[i]};
    }
  }
  return RangeCase{7, kCaseBoundaries[6], kCaseBoundaries[7]};
}

std::vector<SubregionSpec> subregions(double r0) {
  switch (range_case(r0).case_id) {
    case 1: return case1(r0);
    case 2: return case2(r0);
    case 3: return case3(r0);
    case 4: return case4(r0);
    case 5: return case5(r0);
    case 6: return case6(r0);
    case 7: return case7(r0);
    default: return full_coverage_cell();
  }
}

IntegralResult integrate_cell(const std::function<double(double, double)>& f,
                              const SubregionSpec& spec, double r0,
                              const IntegrationSettings& settings) {
  IntegralResult total;
  for (const Slab& slab : spec.pieces) {
    auto integrand = [&](double t, double s) {
      return slab.outer_is_x ? f(t, s) : f(s, t);
    };
    total += integrate_slab(
        integrand, slab.t_lo, slab.t_hi,
        [&](double t) { return slab.lower.eval(t, r0); },
        [&](double t) { return slab.upper.eval(t, r0); }, settings);
  }
  return total;
}

double subregion_area(const SubregionSpec& spec, double r0) {
  IntegrationSettings settings;
  settings.rel_tol = 1e-11;
  settings.abs_tol = 1e-13;

  double area = 0.0;
  for (const Slab& slab : spec.pieces) {
    if (!(slab.t_hi > slab.t_lo)) continue;
    if (slab.lower.curve == Curve::kConstant &&
        slab.upper.curve == Curve::kConstant) {
      area += (slab.t_hi - slab.t_lo) *
              std::max(slab.upper.c - slab.lower.c, 0.0);
      continue;
    }
    area += integrate_1d(
                [&](double t) {
                  return std::max(
                      slab.upper.eval(t, r0) - slab.lower.eval(t, r0), 0.0);
                },
                slab.t_lo, slab.t_hi, settings)
                .value;
  }
  return area;
}

}  // namespace sqcon
