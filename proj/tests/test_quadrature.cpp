#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "sqcon/metrics.hpp"
#include "sqcon/partition.hpp"
#include "sqcon/quadrature.hpp"
#include "sqcon/rng.hpp"

using namespace sqcon;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("polynomials are integrated exactly on rectangular cells") {
  // x^9 y^7 over [0.1, 0.9] x [0.2, 0.6]; within the embedded rule's degree,
  // so a single panel already lands on the analytic value.
  auto f = [](double x, double y) {
    return std::pow(x, 9) * std::pow(y, 7);
  };
  const double ix = (std::pow(0.9, 10) - std::pow(0.1, 10)) / 10.0;
  const double iy = (std::pow(0.6, 8) - std::pow(0.2, 8)) / 8.0;
  const IntegralResult got = integrate_slab(
      f, 0.1, 0.9, [](double) { return 0.2; }, [](double) { return 0.6; });
  CHECK(got.converged);
  CHECK(std::abs(got.value - ix * iy) < 1e-13);
}

TEST_CASE("area recovery over the small-range cells") {
  const auto specs = subregions(0.3);
  // Central square.
  CHECK(subregion_area(specs[0], 0.3) == doctest::Approx(0.16).epsilon(1e-12));
  // Quarter disk at the corner.
  CHECK(subregion_area(specs[3], 0.3) ==
        doctest::Approx(kPi * 0.09 / 4.0).epsilon(1e-10));

  // The same areas through the 2-D cell path with f = 1.
  for (std::size_t i : {std::size_t{0}, std::size_t{3}}) {
    const IntegralResult via_cell =
        integrate_cell([](double, double) { return 1.0; }, specs[i], 0.3);
    CHECK(via_cell.converged);
    CHECK(via_cell.value ==
          doctest::Approx(subregion_area(specs[i], 0.3)).epsilon(1e-10));
  }
}

TEST_CASE("cell integrals honor the transposed orientation") {
  // A case-4 subregion described with y as the outer variable: integrating
  // x recovers the first moment matched against an x-outer rewrite of the
  // same region.
  const double r0 = 0.65;
  const auto specs = subregions(r0);
  const SubregionSpec& r3 = specs[2];
  REQUIRE(!r3.pieces[0].outer_is_x);
  const IntegralResult got =
      integrate_cell([](double x, double) { return x; }, r3, r0);
  // Same region, x outer: x in (1-r0, 1-sqrt(2 r0 - 1)), y between the
  // circle around (1, 0) and the constant 1-r0.
  const double xb = 1.0 - std::sqrt(2.0 * r0 - 1.0);
  const IntegralResult expect = integrate_slab(
      [](double x, double) { return x; }, 1.0 - r0, xb,
      [&](double x) { return std::sqrt(r0 * r0 - (x - 1.0) * (x - 1.0)); },
      [&](double) { return 1.0 - r0; });
  CHECK(got.value == doctest::Approx(expect.value).epsilon(1e-9));
}

TEST_CASE("unit integrand sums to the square's area for any range") {
  Rng rng(31, 0);
  for (int i = 0; i < 12; ++i) {
    const double r0 = 1.41 * rng.next_unit();
    double total = 0.0;
    for (const SubregionSpec& spec : subregions(r0)) {
      total += spec.multiplicity * subregion_area(spec, r0);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("coverage integral reproduces the two-point distance CDF") {
  // Summing F over all cells gives the probability two uniform points lie
  // within r0 of each other; the closed-form CDF is the oracle.
  for (double r0 : {0.15, 0.3, 0.55, 0.64, 0.75, 0.97, 1.05, 1.2, 1.38}) {
    const IntegralResult got = integrate_coverage_functional(
        r0, [](double f) { return f; });
    CHECK(got.converged);
    CHECK(std::abs(got.value - testing::square_line_picking_cdf(r0)) < 1e-9);
  }
}

TEST_CASE("tightening the tolerance never worsens the oracle discrepancy") {
  const double oracle = testing::square_line_picking_cdf(0.3);
  double previous = 1.0;
  for (double rel : {1e-4, 1e-6, 1e-8, 1e-10}) {
    IntegrationSettings settings;
    settings.rel_tol = rel;
    settings.abs_tol = rel * 1e-3;
    const double got =
        integrate_coverage_functional(0.3, [](double f) { return f; }, settings)
            .value;
    const double diff = std::abs(got - oracle);
    CHECK(diff <= previous + 1e-14);
    previous = diff;
  }
}

TEST_CASE("non-convergence is reported, not raised") {
  IntegrationSettings tight;
  tight.rel_tol = 1e-16;
  tight.abs_tol = 1e-18;
  tight.max_subdivisions = 2;
  const IntegralResult res = integrate_1d(
      [](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0, 1.0, tight);
  CHECK(!res.converged);
  CHECK(res.value == doctest::Approx(5.0 / 18.0).epsilon(1e-3));
}

TEST_CASE("NaN integrands are a hard error") {
  CHECK_THROWS_AS(
      integrate_1d([](double) { return std::nan(""); }, 0.0, 1.0),
      std::domain_error);
}

TEST_CASE("empty and inverted intervals integrate to zero") {
  const auto f = [](double) { return 1.0; };
  CHECK(integrate_1d(f, 0.5, 0.5).value == 0.0);
  CHECK(integrate_1d(f, 0.7, 0.3).value == 0.0);
  const IntegralResult slab = integrate_slab(
      [](double, double) { return 1.0; }, 0.0, 1.0,
      [](double) { return 0.8; }, [](double) { return 0.2; });
  CHECK(slab.value == 0.0);
}
