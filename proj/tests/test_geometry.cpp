#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sqcon/geometry.hpp"
#include "sqcon/partition.hpp"
#include "sqcon/rng.hpp"

using namespace sqcon;

namespace {
constexpr double kPi = 3.14159265358979323846;

Point random_point(Rng& rng) { return {rng.next_unit(), rng.next_unit()}; }

// r0 drawn uniformly within one of the seven case intervals.
double random_range_in_case(Rng& rng, int case_id) {
  const double lo = kCaseBoundaries[case_id - 1];
  const double hi = kCaseBoundaries[case_id];
  return lo + (hi - lo) * rng.next_unit();
}
}  // namespace

TEST_CASE("segment area reference values") {
  // Node on the side: half the disk sticks out.
  CHECK(segment_area({0.0, 0.5}, 0.2, 1) ==
        doctest::Approx(kPi * 0.04 / 2.0).epsilon(1e-12));
  // Side farther than the range: no segment.
  CHECK(segment_area({0.3, 0.5}, 0.2, 1) == 0.0);
  CHECK(segment_area({0.1, 0.5}, 0.2, 1) ==
        doctest::Approx(0.0245673940).epsilon(1e-7));
  // Independent column oracle at the same distance.
  CHECK(std::abs(segment_area({0.1, 0.5}, 0.2, 1) -
                 testing::segment_area_oracle(0.1, 0.2)) < 1e-7);
}

TEST_CASE("corner area reference values") {
  CHECK(corner_area({0.0, 0.0}, 0.1, 1) ==
        doctest::Approx(kPi * 0.01 / 4.0).epsilon(1e-12));
  // Vertex farther than the range.
  CHECK(corner_area({0.5, 0.5}, 0.2, 1) == 0.0);
  CHECK(corner_area({0.05, 0.05}, 0.1, 1) ==
        doctest::Approx(0.000787866859).epsilon(1e-7));
  CHECK(std::abs(corner_area({0.05, 0.05}, 0.1, 1) -
                 testing::corner_area_oracle(0.05, 0.05, 0.1)) < 1e-7);
}

TEST_CASE("corner area stays valid for ranges beyond the side length") {
  // All four sides and three corners clip this disk.
  Rng rng(2024, 0);
  for (int i = 0; i < 200; ++i) {
    const Point u = random_point(rng);
    const double r0 = 1.0 + 0.41 * rng.next_unit();
    for (int v = 1; v <= 4; ++v) {
      double a = (v == 2 || v == 3) ? 1.0 - u.x : u.x;
      double b = (v == 3 || v == 4) ? 1.0 - u.y : u.y;
      const double expect = testing::corner_area_oracle(a, b, r0, 20000);
      CHECK(std::abs(corner_area(u, r0, v) - expect) < 2e-6);
    }
  }
}

TEST_CASE("coverage reference values") {
  CHECK(coverage_cdf({0.5, 0.5}, 0.2) ==
        doctest::Approx(kPi * 0.04).epsilon(1e-12));
  CHECK(coverage_cdf({0.0, 0.0}, 0.1) ==
        doctest::Approx(0.00785398163).epsilon(1e-8));
  CHECK(coverage_cdf({0.05, 0.5}, 0.1) ==
        doctest::Approx(0.0252741).epsilon(1e-5));
}

TEST_CASE("coverage matches the column oracle across all range cases") {
  Rng rng(7, 0);
  double worst = 0.0;
  for (int case_id = 1; case_id <= 7; ++case_id) {
    for (int i = 0; i < 150; ++i) {
      const Point u = random_point(rng);
      const double r0 = random_range_in_case(rng, case_id);
      worst = std::max(
          worst, std::abs(coverage_cdf(u, r0) -
                          testing::disk_square_area_oracle(u, r0, 20000)));
    }
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("coverage is continuous across activation thresholds") {
  // Perturb points across the exact side/vertex activation distances.
  Rng rng(11, 0);
  for (int i = 0; i < 500; ++i) {
    const double r0 = 0.05 + 1.3 * rng.next_unit();
    const double y = rng.next_unit();
    const double eps = 1e-8;
    // Side 1 threshold at x = r0.
    if (r0 < 1.0) {
      const double below = coverage_cdf({r0 - eps, y}, r0);
      const double above = coverage_cdf({std::min(r0 + eps, 1.0), y}, r0);
      CHECK(std::abs(above - below) < 1e-6);
    }
    // Vertex 1 threshold along the diagonal.
    const double d = r0 / kSqrt2;
    if (d < 1.0 - eps) {
      const double inside = coverage_cdf({d - eps, d - eps}, r0);
      const double outside = coverage_cdf({d + eps, d + eps}, r0);
      CHECK(std::abs(outside - inside) < 1e-6);
    }
  }
}

TEST_CASE("coverage is monotone in r0 and invariant under square symmetries") {
  Rng rng(13, 0);
  for (int i = 0; i < 300; ++i) {
    const Point u = random_point(rng);
    const double r0 = 1.45 * rng.next_unit();
    const double f = coverage_cdf(u, r0);
    CHECK(coverage_cdf(u, r0 + 0.01) >= f - 1e-12);

    const Point images[8] = {
        {u.x, u.y},       {u.y, u.x},       {1 - u.x, u.y}, {u.y, 1 - u.x},
        {u.x, 1 - u.y},   {1 - u.y, u.x},   {1 - u.x, 1 - u.y},
        {1 - u.y, 1 - u.x}};
    for (const Point& v : images) {
      CHECK(coverage_cdf(v, r0) == doctest::Approx(f).epsilon(1e-13));
    }
  }
}

TEST_CASE("coverage lower bound: the corner is the worst location") {
  Rng rng(17, 0);
  for (int i = 0; i < 300; ++i) {
    const Point u = random_point(rng);
    const double r0 = rng.next_unit();  // r0 <= 1
    CHECK(coverage_cdf(u, r0) >= kPi * r0 * r0 / 4.0 - 1e-12);
  }
}

TEST_CASE("segment and corner bounds at their symmetric extremes") {
  Rng rng(19, 0);
  for (int i = 0; i < 300; ++i) {
    const Point u = random_point(rng);
    const double r0 = 1.45 * rng.next_unit();
    for (int ell = 1; ell <= 4; ++ell) {
      const double b = segment_area(u, r0, ell);
      CHECK(b >= 0.0);
      CHECK(b <= kPi * r0 * r0 / 2.0 + 1e-12);
      const double c = corner_area(u, r0, ell);
      CHECK(c >= 0.0);
      CHECK(c <= kPi * r0 * r0 / 4.0 + 1e-12);
    }
  }
}

TEST_CASE("corner overlap never exceeds its adjacent segments") {
  const int side_of[4][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
  Rng rng(23, 0);
  for (int i = 0; i < 300; ++i) {
    const Point u = random_point(rng);
    const double r0 = 1.45 * rng.next_unit();
    for (int v = 1; v <= 4; ++v) {
      const double c = corner_area(u, r0, v);
      CHECK(c <= segment_area(u, r0, side_of[v - 1][0]) + 1e-12);
      CHECK(c <= segment_area(u, r0, side_of[v - 1][1]) + 1e-12);
    }
  }
}

TEST_CASE("degenerate ranges") {
  CHECK(coverage_cdf({0.3, 0.7}, 0.0) == 0.0);
  CHECK(coverage_cdf({0.3, 0.7}, kSqrt2) == 1.0);
  CHECK(coverage_cdf({0.0, 0.0}, 2.5) == 1.0);
  const BoundaryEffects none = classify({0.2, 0.8}, 0.0);
  CHECK(none.active_sides == 0);
  CHECK(none.active_vertices == 0);
}

TEST_CASE("classify reports the active sets") {
  const BoundaryEffects interior = classify({0.5, 0.5}, 0.2);
  CHECK(interior.active_sides == 0);
  CHECK(interior.active_vertices == 0);

  const BoundaryEffects one_side = classify({0.05, 0.5}, 0.1);
  CHECK(one_side.active_sides == 0b0001);
  CHECK(one_side.active_vertices == 0);

  // d(u, V1) = 0.424 < 0.6 activates the corner as well.
  const BoundaryEffects corner = classify({0.3, 0.3}, 0.6);
  CHECK(corner.active_sides == 0b0011);
  CHECK(corner.active_vertices == 0b0001);

  // Areas mirror the standalone operations.
  CHECK(corner.segments[0] == segment_area({0.3, 0.3}, 0.6, 1));
  CHECK(corner.corners[0] == corner_area({0.3, 0.3}, 0.6, 1));
}
