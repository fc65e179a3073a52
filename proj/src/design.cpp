#include "sqcon/design.hpp"

#include <algorithm>
#include <stdexcept>

#include "sqcon/geometry.hpp"

namespace sqcon {

namespace {

void validate_target(double target) {
  if (!(target > 0.0 && target < 1.0)) {
    throw std::invalid_argument("target probability must be in (0, 1)");
  }
}

}  // namespace

CriticalRangeResult critical_range(int n_nodes, int k, double target,
                                   double side_length, double tolerance,
                                   const IntegrationSettings& settings) {
  validate_target(target);
  if (k < 1 || n_nodes < k + 1) {
    throw std::invalid_argument("critical_range: need N >= k+1, k >= 1");
  }
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("critical_range: tolerance must be > 0");
  }

  CriticalRangeResult result;
  auto f = [&](double r0) {
    const MetricValue v =
        min_degree_dist({n_nodes, r0, side_length}, k, settings);
    result.accuracy_warning = result.accuracy_warning || v.accuracy_warning;
    return v.value;
  };

  // f_D(k) is 0 at r0 = 0 and 1 at r0 = sqrt(2) L, non-decreasing in
  // between: keep lo strictly below the target and hi at or above it.
  double lo = 0.0;
  double hi = kSqrt2 * side_length;
  double f_hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid >= target) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
    }
  }

  result.r0 = hi;
  result.achieved = f_hi;
  return result;
}

CriticalNodesResult critical_nodes(double r0, int k, double target,
                                   double side_length,
                                   const IntegrationSettings& settings) {
  validate_target(target);
  if (k < 1) throw std::invalid_argument("critical_nodes: need k >= 1");
  if (!(r0 > 0.0)) {
    throw std::invalid_argument("critical_nodes: unsatisfiable for r0 = 0");
  }

  CriticalNodesResult result;
  auto f = [&](int n) {
    const MetricValue v = min_degree_dist({n, r0, side_length}, k, settings);
    result.accuracy_warning = result.accuracy_warning || v.accuracy_warning;
    return v.value;
  };

  constexpr int kMaxNodes = 1 << 22;
  int lo = k;  // f_D undefined below k+1; treat as failing
  int hi = k + 1;
  double f_hi = f(hi);
  while (f_hi < target) {
    lo = hi;
    if (hi >= kMaxNodes) {
      throw std::runtime_error(
          "critical_nodes: target not reached within the node budget");
    }
    hi = std::min(hi * 2, kMaxNodes);
    f_hi = f(hi);
  }

  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    const double f_mid = f(mid);
    if (f_mid >= target) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
    }
  }

  result.n_nodes = hi;
  result.achieved = f_hi;
  return result;
}

}  // namespace sqcon
