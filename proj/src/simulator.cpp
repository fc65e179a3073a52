#include "sqcon/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sqcon/rng.hpp"

namespace sqcon {

namespace {

void validate(const SimulationConfig& config) {
  if (config.n_nodes < 1) throw std::invalid_argument("n_nodes must be >= 1");
  if (config.runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (!(config.r0 >= 0.0)) throw std::invalid_argument("r0 must be >= 0");
  if (!(config.side_length > 0.0)) {
    throw std::invalid_argument("side_length must be > 0");
  }
}

void fill_sample(const SimulationConfig& config, int run_index, GraphSample& g) {
  const int n = config.n_nodes;
  g.n = n;
  g.words = (n + 63) / 64;
  g.positions.resize(n);
  g.degree_list.assign(n, 0);
  g.adjacency.assign(static_cast<std::size_t>(n) * g.words, 0);

  Rng rng(config.seed, static_cast<std::uint64_t>(run_index));
  for (int i = 0; i < n; ++i) {
    g.positions[i].x = rng.next_unit() * config.side_length;
    g.positions[i].y = rng.next_unit() * config.side_length;
  }

  const double r_sq = config.r0 * config.r0;
  for (int i = 0; i < n; ++i) {
    const Point& pi = g.positions[i];
    for (int j = i + 1; j < n; ++j) {
      const double dx = pi.x - g.positions[j].x;
      const double dy = pi.y - g.positions[j].y;
      if (dx * dx + dy * dy <= r_sq) {
        g.adjacency[static_cast<std::size_t>(i) * g.words + (j >> 6)] |=
            1ull << (j & 63);
        g.adjacency[static_cast<std::size_t>(j) * g.words + (i >> 6)] |=
            1ull << (i & 63);
        ++g.degree_list[i];
        ++g.degree_list[j];
      }
    }
  }
}

// Scratch buffers for connectivity traversals, reused across runs.
struct Traversal {
  std::vector<std::uint64_t> visited;
  std::vector<std::uint64_t> frontier;
  std::vector<std::uint64_t> next;

  // Is the graph restricted to vertices outside `removed` connected?
  // `removed` may be null (nothing removed). Vacuously true for fewer than
  // two remaining vertices.
  bool connected_without(const GraphSample& g, const std::uint64_t* removed,
                         int removed_count) {
    const int words = g.words;
    const int alive = g.n - removed_count;
    if (alive <= 1) return true;

    visited.assign(words, 0);
    frontier.assign(words, 0);
    next.assign(words, 0);

    int start = 0;
    if (removed != nullptr) {
      while (start < g.n && (removed[start >> 6] >> (start & 63) & 1u)) ++start;
    }
    visited[start >> 6] |= 1ull << (start & 63);
    frontier[start >> 6] |= 1ull << (start & 63);
    int reached = 1;

    while (true) {
      for (int w = 0; w < words; ++w) next[w] = 0;
      bool frontier_empty = true;
      for (int w = 0; w < words; ++w) {
        std::uint64_t bits = frontier[w];
        while (bits != 0) {
          const int i = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* row =
              g.adjacency.data() + static_cast<std::size_t>(i) * words;
          for (int v = 0; v < words; ++v) next[v] |= row[v];
          frontier_empty = false;
        }
      }
      if (frontier_empty) break;
      bool any_new = false;
      for (int w = 0; w < words; ++w) {
        std::uint64_t mask = next[w] & ~visited[w];
        if (removed != nullptr) mask &= ~removed[w];
        frontier[w] = mask;
        visited[w] |= mask;
        if (mask != 0) {
          reached += std::popcount(mask);
          any_new = true;
        }
      }
      if (!any_new) break;
    }
    return reached == alive;
  }
};

// k-connectivity by the removal characterization: connected after removal
// of every subset of exactly k-1 vertices. Dedicated loops for the sizes
// the sweeps use; a generic combination walk above that.
bool k_connected_impl(const GraphSample& g, int k, Traversal& scratch,
                      std::vector<std::uint64_t>& removed) {
  if (k == 1) return scratch.connected_without(g, nullptr, 0);

  const int words = g.words;
  removed.assign(words, 0);
  auto set_bit = [&](int i) { removed[i >> 6] |= 1ull << (i & 63); };
  auto clear_bit = [&](int i) { removed[i >> 6] &= ~(1ull << (i & 63)); };

  if (k == 2) {
    for (int a = 0; a < g.n; ++a) {
      set_bit(a);
      const bool ok = scratch.connected_without(g, removed.data(), 1);
      clear_bit(a);
      if (!ok) return false;
    }
    return true;
  }
  if (k == 3) {
    for (int a = 0; a < g.n; ++a) {
      set_bit(a);
      for (int b = a + 1; b < g.n; ++b) {
        set_bit(b);
        const bool ok = scratch.connected_without(g, removed.data(), 2);
        clear_bit(b);
        if (!ok) {
          clear_bit(a);
          return false;
        }
      }
      clear_bit(a);
    }
    return true;
  }

  std::vector<int> subset(k - 1);
  for (int i = 0; i < k - 1; ++i) subset[i] = i;
  while (true) {
    removed.assign(words, 0);
    for (int i : subset) set_bit(i);
    if (!scratch.connected_without(g, removed.data(), k - 1)) return false;
    int pos = k - 2;
    while (pos >= 0 && subset[pos] == g.n - (k - 1) + pos) --pos;
    if (pos < 0) return true;
    ++subset[pos];
    for (int i = pos + 1; i < k - 1; ++i) subset[i] = subset[i - 1] + 1;
  }
}

double binomial_std_error(double p_hat, int runs) {
  return std::sqrt(std::max(p_hat * (1.0 - p_hat), 0.0) / runs);
}

// Partition run indices across threads; each thread owns an accumulator
// and the integer counts are merged afterwards, so the result does not
// depend on the schedule.
template <typename Acc, typename Worker>
Acc parallel_runs(const SimulationConfig& config, Worker worker) {
  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, config.runs);

  std::vector<Acc> accs(threads);
  if (threads == 1) {
    for (int run = 0; run < config.runs; ++run) worker(run, accs[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (config.runs + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(config.runs, lo + chunk);
      pool.emplace_back([&, t, lo, hi] {
        for (int run = lo; run < hi; ++run) worker(run, accs[t]);
      });
    }
    for (auto& th : pool) th.join();
  }

  Acc total;
  for (const Acc& acc : accs) total.merge(acc);
  return total;
}

void validate_ks(const SimulationConfig& config, const std::vector<int>& ks) {
  if (ks.empty()) throw std::invalid_argument("no k values requested");
  for (int k : ks) {
    if (k < 1 || k > config.n_nodes - 1) {
      throw std::invalid_argument("k must satisfy 1 <= k <= N-1");
    }
  }
}

}  // namespace

GraphSample sample_graph(const SimulationConfig& config, int run_index) {
  validate(config);
  GraphSample g;
  fill_sample(config, run_index, g);
  return g;
}

SimulationResult estimate_isolation(const SimulationConfig& config) {
  validate(config);
  SimulationResult result;
  result.runs_used = config.runs;
  if (config.n_nodes == 1) {
    result.p_iso_hat = 1.0;
    return result;
  }

  struct Acc {
    long long isolated = 0;
    GraphSample g;
    void merge(const Acc& other) { isolated += other.isolated; }
  };
  const Acc total = parallel_runs<Acc>(config, [&](int run, Acc& acc) {
    fill_sample(config, run, acc.g);
    for (int d : acc.g.degree_list) {
      if (d == 0) ++acc.isolated;
    }
  });

  result.p_iso_hat = static_cast<double>(total.isolated) /
                     (static_cast<double>(config.runs) * config.n_nodes);
  result.p_iso_std_error = binomial_std_error(result.p_iso_hat, config.runs);
  return result;
}

SimulationResult estimate_min_degree(const SimulationConfig& config,
                                     const std::vector<int>& ks) {
  validate(config);
  validate_ks(config, ks);

  struct Acc {
    std::vector<long long> at_least;  // indexed as ks
    GraphSample g;
    void merge(const Acc& other) {
      if (at_least.size() < other.at_least.size()) {
        at_least.resize(other.at_least.size(), 0);
      }
      for (std::size_t i = 0; i < other.at_least.size(); ++i) {
        at_least[i] += other.at_least[i];
      }
    }
  };
  const Acc total = parallel_runs<Acc>(config, [&](int run, Acc& acc) {
    if (acc.at_least.empty()) acc.at_least.assign(ks.size(), 0);
    fill_sample(config, run, acc.g);
    const int min_deg =
        *std::min_element(acc.g.degree_list.begin(), acc.g.degree_list.end());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (min_deg >= ks[i]) ++acc.at_least[i];
    }
  });

  SimulationResult result;
  result.runs_used = config.runs;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double p = static_cast<double>(total.at_least[i]) / config.runs;
    result.min_degree_freq[ks[i]] = p;
    result.min_degree_std_error[ks[i]] = binomial_std_error(p, config.runs);
  }
  return result;
}

bool is_k_connected(const GraphSample& g, int k) {
  if (g.n < 2) throw std::invalid_argument("is_k_connected: need N >= 2");
  if (k < 1 || k > g.n - 1) {
    throw std::invalid_argument("is_k_connected: need 1 <= k <= N-1");
  }
  Traversal scratch;
  std::vector<std::uint64_t> removed;
  return k_connected_impl(g, k, scratch, removed);
}

SimulationResult estimate_kcon(const SimulationConfig& config,
                               const std::vector<int>& ks) {
  validate(config);
  if (config.n_nodes < 2) {
    throw std::invalid_argument("estimate_kcon: need N >= 2");
  }
  validate_ks(config, ks);
  std::vector<int> sorted_ks = ks;
  std::sort(sorted_ks.begin(), sorted_ks.end());

  struct Acc {
    std::vector<long long> connected;  // indexed as sorted_ks
    GraphSample g;
    Traversal scratch;
    std::vector<std::uint64_t> removed;
    void merge(const Acc& other) {
      if (connected.size() < other.connected.size()) {
        connected.resize(other.connected.size(), 0);
      }
      for (std::size_t i = 0; i < other.connected.size(); ++i) {
        connected[i] += other.connected[i];
      }
    }
  };
  const Acc total = parallel_runs<Acc>(config, [&](int run, Acc& acc) {
    if (acc.connected.empty()) acc.connected.assign(sorted_ks.size(), 0);
    fill_sample(config, run, acc.g);
    const int min_deg =
        *std::min_element(acc.g.degree_list.begin(), acc.g.degree_list.end());
    for (std::size_t i = 0; i < sorted_ks.size(); ++i) {
      const int k = sorted_ks[i];
      // min degree >= k is necessary, and kappa >= k is monotone in k, so
      // the first failure settles all larger k.
      if (min_deg < k || !k_connected_impl(acc.g, k, acc.scratch, acc.removed)) {
        break;
      }
      ++acc.connected[i];
    }
  });

  SimulationResult result;
  result.runs_used = config.runs;
  for (std::size_t i = 0; i < sorted_ks.size(); ++i) {
    const double p = static_cast<double>(total.connected[i]) / config.runs;
    result.p_kcon_hat[sorted_ks[i]] = p;
    result.p_kcon_std_error[sorted_ks[i]] = binomial_std_error(p, config.runs);
  }
  return result;
}

}  // namespace sqcon
