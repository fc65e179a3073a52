#pragma once

#include "sqcon/metrics.hpp"

// Network design solvers built on the monotonicity of the minimum node
// degree distribution in both the transmission range and the node count:
// smallest range (at fixed N) or smallest N (at fixed range) that reaches
// a target connectivity probability.

namespace sqcon {

struct CriticalRangeResult {
  double r0 = 0.0;          // smallest range with f_D(k) >= target
  double achieved = 0.0;    // f_D(k) at that range
  bool accuracy_warning = false;
};

struct CriticalNodesResult {
  int n_nodes = 0;          // smallest N with f_D(k) >= target
  double achieved = 0.0;
  bool accuracy_warning = false;
};

// Bisection on r0 over [0, sqrt(2) * L]; the returned range satisfies the
// target and is within `tolerance` of the true threshold. Requires
// N >= k+1 and target in (0, 1).
CriticalRangeResult critical_range(int n_nodes, int k, double target,
                                   double side_length = 1.0,
                                   double tolerance = 1e-5,
                                   const IntegrationSettings& settings = {});

// Exponential bracket plus integer bisection on N. Requires r0 > 0 and
// target in (0, 1).
CriticalNodesResult critical_nodes(double r0, int k, double target,
                                   double side_length = 1.0,
                                   const IntegrationSettings& settings = {});

}  // namespace sqcon
