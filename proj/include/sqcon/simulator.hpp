#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "sqcon/geometry.hpp"

// Monte-Carlo validation of the analytic metrics: uniform node placement
// on [0, L]^2, geometric-graph construction (nodes adjacent iff their
// distance is <= r0, closed disk), and empirical estimates of isolation,
// minimum-degree and k-connectivity frequencies. Runs are independent
// streams of a counter-seeded RNG, so results are deterministic for a
// given (config, seed) no matter how runs are scheduled.

namespace sqcon {

struct SimulationConfig {
  int n_nodes = 1;
  double r0 = 0.0;
  int runs = 50000;
  std::uint64_t seed = 1;
  double side_length = 1.0;
  int threads = 0;  // 0 = all hardware threads
};

struct GraphSample {
  int n = 0;
  std::vector<Point> positions;
  std::vector<int> degree_list;
  // Symmetric irreflexive adjacency, bitset rows of `words` 64-bit words.
  int words = 0;
  std::vector<std::uint64_t> adjacency;

  bool adjacent(int i, int j) const {
    return (adjacency[static_cast<std::size_t>(i) * words + (j >> 6)] >>
            (j & 63)) & 1u;
  }
};

struct SimulationResult {
  double p_iso_hat = 0.0;
  double p_iso_std_error = 0.0;
  std::map<int, double> min_degree_freq;       // P(min degree >= k)
  std::map<int, double> min_degree_std_error;
  std::map<int, double> p_kcon_hat;            // P(k-connected)
  std::map<int, double> p_kcon_std_error;
  int runs_used = 0;
};

// The graph of run `run_index`; identical on every invocation with the
// same (config.seed, run_index).
GraphSample sample_graph(const SimulationConfig& config, int run_index);

// Fraction of (run, node) draws that are isolated, with the conservative
// per-run standard error sqrt(p(1-p)/S). Returns exactly 1 for N = 1.
SimulationResult estimate_isolation(const SimulationConfig& config);

// Fraction of runs whose minimum node degree is at least k, for each
// requested k (1 <= k <= N-1).
SimulationResult estimate_min_degree(const SimulationConfig& config,
                                     const std::vector<int>& ks);

// Whether g stays connected after removal of every vertex subset of size
// k-1 (k = 1 is a plain connectivity traversal). Requires N >= 2 and
// 1 <= k <= N-1; the subset enumeration is intended for small k.
bool is_k_connected(const GraphSample& g, int k);

// Fraction of runs that are k-connected, for each requested k.
SimulationResult estimate_kcon(const SimulationConfig& config,
                               const std::vector<int>& ks);

}  // namespace sqcon
