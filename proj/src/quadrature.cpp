#include "sqcon/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sqcon {

namespace {

// Gauss-Kronrod 15(7) abscissae and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct Panel {
  double a, b;
  double value;
  double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;

  if (std::isnan(kronrod)) {
    throw std::domain_error("integrand evaluated to NaN");
  }
  return Panel{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

IntegralResult integrate_1d(const std::function<double(double)>& f, double a,
                            double b, const IntegrationSettings& settings) {
  if (!(settings.rel_tol > 0.0) || !(settings.abs_tol > 0.0) ||
      settings.max_subdivisions < 1) {
    throw std::invalid_argument("integrate_1d: invalid settings");
  }
  IntegralResult result;
  if (!(b > a)) return result;

  std::vector<Panel> panels;
  panels.push_back(evaluate_panel(f, a, b));

  double total = panels[0].value;
  double total_err = panels[0].error;

  while (static_cast<int>(panels.size()) < settings.max_subdivisions) {
    const double tol = std::max(settings.rel_tol * std::abs(total), settings.abs_tol);
    if (total_err <= tol) break;

    // Split the interval with the largest error estimate; ties broken by
    // the left endpoint so refinement order is deterministic.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i) {
      if (panels[i].error > panels[worst].error ||
          (panels[i].error == panels[worst].error && panels[i].a < panels[worst].a)) {
        worst = i;
      }
    }
    const Panel split = panels[worst];
    const double mid = 0.5 * (split.a + split.b);
    if (mid <= split.a || mid >= split.b) break;  // interval at FP resolution

    const Panel left = evaluate_panel(f, split.a, mid);
    const Panel right = evaluate_panel(f, mid, split.b);
    total += left.value + right.value - split.value;
    total_err += left.error + right.error - split.error;
    panels[worst] = left;
    panels.push_back(right);
  }

  result.value = total;
  result.error_estimate = total_err;
  result.converged =
      total_err <= std::max(settings.rel_tol * std::abs(total), settings.abs_tol);
  return result;
}

IntegralResult integrate_slab(const std::function<double(double, double)>& f,
                              double t_lo, double t_hi,
                              const std::function<double(double)>& lower,
                              const std::function<double(double)>& upper,
                              const IntegrationSettings& settings) {
  IntegralResult result;
  if (!(t_hi > t_lo)) return result;

  IntegrationSettings inner = settings;
  inner.rel_tol = settings.rel_tol * 0.1;
  inner.abs_tol = settings.abs_tol * 0.1;

  bool inner_converged = true;
  auto outer_integrand = [&](double t) {
    const double lo = lower(t);
    const double hi = upper(t);
    if (!(hi > lo)) return 0.0;  // slab edges may touch at FP resolution
    const IntegralResult row =
        integrate_1d([&](double s) { return f(t, s); }, lo, hi, inner);
    inner_converged = inner_converged && row.converged;
    return row.value;
  };

  result = integrate_1d(outer_integrand, t_lo, t_hi, settings);
  result.converged = result.converged && inner_converged;
  return result;
}

}  // namespace sqcon
