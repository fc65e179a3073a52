#pragma once

#include <functional>

#include "sqcon/quadrature.hpp"

// Analytic connectivity metrics for N nodes uniformly distributed on a
// square of side L with disk connectivity radius r0. Everything reduces to
// integrals of functions of the coverage CDF over the unit square, taken
// subregion by subregion; the side length enters only through the scaled
// range r0/L.

namespace sqcon {

struct NetworkModel {
  int n_nodes = 1;         // N >= 1
  double r0 = 0.0;         // transmission radius, in units of side_length
  double side_length = 1.0;  // L > 0

  double effective_range() const { return r0 / side_length; }
};

// A computed metric plus quality flags. accuracy_warning means some
// quadrature failed to reach tolerance; out_of_range means the raw value
// left [0, 1] (returned as-is for the high-density approximation, clamped
// for probabilities).
struct MetricValue {
  double value = 0.0;
  bool accuracy_warning = false;
  bool out_of_range = false;
};

// Integral over the unit square of g(F(u; eff_range)), evaluated through
// the subregion decomposition (sum of n_i * integral over the canonical
// copy of subregion i).
IntegralResult integrate_coverage_functional(
    double eff_range, const std::function<double(double)>& g,
    const IntegrationSettings& settings = {});

// Probability that a given node has no neighbors, averaged over its
// placement: integral of (1 - F)^(N-1). Equals 1 for N = 1 and 0 once
// r0 >= sqrt(2) L with N >= 2.
MetricValue p_isolation(const NetworkModel& model,
                        const IntegrationSettings& settings = {});

// Probability that every node has at least k neighbors (survival form of
// the minimum node degree distribution):
//   (1 - sum_{d<k} C(N-1,d) * integral of F^d (1-F)^(N-1-d))^N
// Upper-bounds the probability of k-connectivity. Requires 1 <= k <= N-1.
MetricValue min_degree_dist(const NetworkModel& model, int k,
                            const IntegrationSettings& settings = {});

// Expected neighbor count of a random node: (N-1) * integral of F. The
// integral factor equals the CDF of the distance between two uniform
// points in the square, evaluated at r0/L.
MetricValue mean_degree(const NetworkModel& model,
                        const IntegrationSettings& settings = {});

// Isolation probability in an infinite Poisson network of the given node
// density: exp(-density * pi * r0^2). Boundary-free baseline.
double poisson_isolation(double density, double r0);

// Cluster-expansion high-density approximation of the probability of
// 1-connectivity. Can fall below 0 at small N or small r0; such values are
// returned unclamped with out_of_range set.
MetricValue hd_approx_connectivity(const NetworkModel& model);

}  // namespace sqcon
