#include "sqcon/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sqcon/geometry.hpp"
#include "sqcon/partition.hpp"

namespace sqcon {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const NetworkModel& model) {
  if (model.n_nodes < 1) throw std::invalid_argument("n_nodes must be >= 1");
  if (!(model.side_length > 0.0)) {
    throw std::invalid_argument("side_length must be > 0");
  }
  if (!(model.r0 >= 0.0)) throw std::invalid_argument("r0 must be >= 0");
}

// Sum of the first k binomial probability terms C(n,d) F^d (1-F)^(n-d),
// d = 0..k-1. Log-space per term so large n neither overflows the
// coefficient nor loses terms whose factors underflow individually.
double binomial_head_sum(int n, int k, double F,
                         const std::vector<double>& log_choose) {
  if (F <= 0.0) return 1.0;             // only d = 0 survives
  if (F >= 1.0) return k > n ? 1.0 : 0.0;  // every head term has (1-F) factor
  const double log_f = std::log(F);
  const double log_1mf = std::log1p(-F);
  double sum = 0.0;
  for (int d = 0; d < k; ++d) {
    sum += std::exp(log_choose[d] + d * log_f + (n - d) * log_1mf);
  }
  return sum;
}

}  // namespace

IntegralResult integrate_coverage_functional(
    double eff_range, const std::function<double(double)>& g,
    const IntegrationSettings& settings) {
  IntegralResult total;
  for (const SubregionSpec& spec : subregions(eff_range)) {
    IntegralResult piece;
    if (spec.fully_covered) {
      // The coverage CDF is the constant 1 on these cells.
      const double g1 = g(1.0);
      if (g1 == 0.0) continue;
      piece.value = subregion_area(spec, eff_range) * g1;
    } else {
      piece = integrate_cell(
          [&](double x, double y) {
            return g(coverage_from_masks({x, y}, eff_range, spec.sides,
                                         spec.corners));
          },
          spec, eff_range, settings);
    }
    piece.value *= spec.multiplicity;
    piece.error_estimate *= spec.multiplicity;
    total += piece;
  }
  return total;
}

MetricValue p_isolation(const NetworkModel& model,
                        const IntegrationSettings& settings) {
  validate(model);
  if (model.n_nodes == 1) return {1.0, false, false};
  const double eff = model.effective_range();
  if (eff >= kSqrt2) return {0.0, false, false};

  const int exponent = model.n_nodes - 1;
  const IntegralResult integral = integrate_coverage_functional(
      eff, [exponent](double f) { return std::pow(1.0 - f, exponent); },
      settings);
  return {std::clamp(integral.value, 0.0, 1.0), !integral.converged, false};
}

MetricValue min_degree_dist(const NetworkModel& model, int k,
                            const IntegrationSettings& settings) {
  validate(model);
  if (k < 1 || k > model.n_nodes - 1) {
    throw std::invalid_argument("min_degree_dist: need 1 <= k <= N-1");
  }
  const double eff = model.effective_range();
  if (eff >= kSqrt2) return {1.0, false, false};

  const int n = model.n_nodes - 1;
  std::vector<double> log_choose(k);
  for (int d = 0; d < k; ++d) {
    log_choose[d] =
        std::lgamma(n + 1.0) - std::lgamma(d + 1.0) - std::lgamma(n - d + 1.0);
  }

  const IntegralResult integral = integrate_coverage_functional(
      eff,
      [&](double f) { return binomial_head_sum(n, k, f, log_choose); },
      settings);

  MetricValue out;
  out.accuracy_warning = !integral.converged;
  double base = 1.0 - integral.value;
  if (base < 0.0) {
    // The head sum integrates to 1 up to quadrature error when the range is
    // too small for k neighbors anywhere; clamp the underflow.
    base = 0.0;
    out.out_of_range = true;
  }
  out.value = std::pow(base, model.n_nodes);
  return out;
}

MetricValue mean_degree(const NetworkModel& model,
                        const IntegrationSettings& settings) {
  validate(model);
  if (model.n_nodes == 1) return {0.0, false, false};
  const double eff = model.effective_range();
  if (eff >= kSqrt2) {
    return {static_cast<double>(model.n_nodes - 1), false, false};
  }
  const IntegralResult integral = integrate_coverage_functional(
      eff, [](double f) { return f; }, settings);
  return {(model.n_nodes - 1) * integral.value, !integral.converged, false};
}

double poisson_isolation(double density, double r0) {
  if (!(density >= 0.0)) {
    throw std::invalid_argument("poisson_isolation: density must be >= 0");
  }
  return std::exp(-density * kPi * r0 * r0);
}

MetricValue hd_approx_connectivity(const NetworkModel& model) {
  validate(model);
  const double L = model.side_length;
  const double rho = model.n_nodes / (L * L);
  const double eff = model.effective_range();
  const double beta = 1.0 / (eff * eff);  // infinite at r0 = 0

  const double value = 1.0 - L * L * rho * std::exp(-kPi * rho / beta) -
                       4.0 * L * std::sqrt(beta / kPi) *
                           std::exp(-kPi * rho / (2.0 * beta)) -
                       (16.0 * beta / (rho * kPi)) *
                           std::exp(-kPi * rho / (4.0 * beta));

  MetricValue out;
  out.value = value;
  out.out_of_range = !(value >= 0.0 && value <= 1.0);
  return out;
}

}  // namespace sqcon
