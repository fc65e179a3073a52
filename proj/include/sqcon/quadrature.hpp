#pragma once

#include <functional>

// Adaptive numerical integration. 1-D integrals use a globally adaptive
// Gauss-Kronrod 15(7) scheme (worst-interval-first refinement); 2-D cell
// integrals iterate it: outer over the slab interval, inner over
// [lower(t), upper(t)]. Integrands are assumed finite; a NaN evaluation
// throws. Failure to reach tolerance within the subdivision budget is not
// an error: the result carries converged = false and the caller decides.

namespace sqcon {

struct IntegrationSettings {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 1 << 15;  // interval budget per 1-D integral
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;

  IntegralResult& operator+=(const IntegralResult& other) {
    value += other.value;
    error_estimate += other.error_estimate;
    converged = converged && other.converged;
    return *this;
  }
};

// Integral of f over [a, b] (a <= b required; empty interval gives 0).
IntegralResult integrate_1d(const std::function<double(double)>& f, double a,
                            double b, const IntegrationSettings& settings = {});

// Iterated integral of f(t, s) for t in [t_lo, t_hi], s in
// [lower(t), upper(t)]. Degenerate slabs (upper <= lower) contribute 0.
// The inner integrals run at a tenth of the requested tolerances so the
// reported outer estimate dominates.
IntegralResult integrate_slab(const std::function<double(double, double)>& f,
                              double t_lo, double t_hi,
                              const std::function<double(double)>& lower,
                              const std::function<double(double)>& upper,
                              const IntegrationSettings& settings = {});

}  // namespace sqcon
