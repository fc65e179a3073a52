// Command-line surface: evaluates coverage at a point, sweeps connectivity
// metrics over a transmission-range grid (analytic and simulated), runs
// standalone simulations, solves critical-parameter queries, and validates
// the subregion decomposition.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqcon/design.hpp"
#include "sqcon/geometry.hpp"
#include "sqcon/metrics.hpp"
#include "sqcon/partition.hpp"
#include "sqcon/report.hpp"
#include "sqcon/rng.hpp"
#include "sqcon/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitAccuracy = 3;

struct SweepOptions {
  std::vector<std::string> metrics;
  std::vector<int> n_list;
  std::vector<int> k_list{1};
  double r_start = 0.0;
  double r_stop = sqcon::kSqrt2;
  double r_step = 0.02;
  int runs = 50000;
  std::uint64_t seed = 1;
  double side = 1.0;
  int threads = 0;
  bool no_sim = false;
  std::string format = "csv";
  std::string out_path;
  bool strict = false;
  sqcon::IntegrationSettings quad;
};

std::vector<double> make_grid(double start, double stop, double step) {
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double r = start + i * step;
    if (r > stop + 0.5 * step * 1e-6) break;
    grid.push_back(std::min(r, stop));
  }
  return grid;
}

int emit_rows(std::vector<sqcon::CurveRow> rows, const std::string& format,
              const std::string& out_path) {
  sqcon::sort_rows(rows);
  std::ostringstream body;
  if (format == "json") {
    sqcon::write_json(body, rows);
  } else {
    sqcon::write_csv(body, rows);
  }
  if (out_path.empty()) {
    std::cout << body.str();
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output path: " << out_path << "\n";
    return kExitIo;
  }
  file << body.str();
  if (!file.flush()) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_sweep(const SweepOptions& opt) {
  if (!(opt.r_step > 0.0)) {
    std::cerr << "error: --r-step must be > 0\n";
    return kExitUsage;
  }
  if (opt.r_start < 0.0 || opt.r_stop > sqcon::kSqrt2 * opt.side ||
      opt.r_start > opt.r_stop) {
    std::cerr << "error: r0 grid must lie within [0, sqrt(2)*L]\n";
    return kExitUsage;
  }

  std::vector<sqcon::Metric> metrics;
  for (const std::string& name : opt.metrics) {
    const auto metric = sqcon::parse_metric(name);
    if (!metric) {
      std::cerr << "error: unknown metric '" << name << "'\n";
      return kExitUsage;
    }
    metrics.push_back(*metric);
  }

  const std::vector<double> grid = make_grid(opt.r_start, opt.r_stop, opt.r_step);
  std::vector<sqcon::CurveRow> rows;
  bool warned = false;

  for (const sqcon::Metric metric : metrics) {
    const bool needs_k =
        metric == sqcon::Metric::kMinDegree || metric == sqcon::Metric::kPKcon;
    for (const int n : opt.n_list) {
      if (needs_k) {
        for (const int k : opt.k_list) {
          if (k < 1 || k > n - 1) {
            std::cerr << "error: k=" << k << " needs 1 <= k <= N-1 (N=" << n
                      << ")\n";
            return kExitUsage;
          }
        }
      }
      for (const double r0 : grid) {
        const sqcon::NetworkModel model{n, r0, opt.side};
        switch (metric) {
          case sqcon::Metric::kPIso: {
            const sqcon::MetricValue v = sqcon::p_isolation(model, opt.quad);
            warned = warned || v.accuracy_warning;
            rows.push_back({metric, n, std::nullopt, r0, v.value, std::nullopt,
                            sqcon::Source::kAnalytic});
            break;
          }
          case sqcon::Metric::kMinDegree: {
            for (const int k : opt.k_list) {
              const sqcon::MetricValue v = sqcon::min_degree_dist(model, k, opt.quad);
              warned = warned || v.accuracy_warning;
              rows.push_back({metric, n, k, r0, v.value, std::nullopt,
                              sqcon::Source::kAnalytic});
            }
            break;
          }
          case sqcon::Metric::kMeanDegree: {
            const sqcon::MetricValue v = sqcon::mean_degree(model, opt.quad);
            warned = warned || v.accuracy_warning;
            rows.push_back({metric, n, std::nullopt, r0, v.value, std::nullopt,
                            sqcon::Source::kAnalytic});
            break;
          }
          case sqcon::Metric::kPoissonIso: {
            const double density = n / (opt.side * opt.side);
            rows.push_back({metric, n, std::nullopt, r0,
                            sqcon::poisson_isolation(density, r0),
                            std::nullopt, sqcon::Source::kAnalytic});
            break;
          }
          case sqcon::Metric::kHdApprox: {
            const sqcon::MetricValue v = sqcon::hd_approx_connectivity(model);
            rows.push_back({metric, n, std::nullopt, r0, v.value, std::nullopt,
                            sqcon::Source::kAnalytic});
            break;
          }
          case sqcon::Metric::kPKcon:
            break;  // simulation-only, handled below
        }

        if (opt.no_sim) continue;
        const sqcon::SimulationConfig config{n,        r0,       opt.runs,
                                             opt.seed, opt.side, opt.threads};
        if (metric == sqcon::Metric::kPIso) {
          const sqcon::SimulationResult sim = sqcon::estimate_isolation(config);
          rows.push_back({metric, n, std::nullopt, r0, sim.p_iso_hat,
                          sim.p_iso_std_error, sqcon::Source::kSimulated});
        } else if (metric == sqcon::Metric::kMinDegree && n >= 2) {
          const sqcon::SimulationResult sim =
              sqcon::estimate_min_degree(config, opt.k_list);
          for (const int k : opt.k_list) {
            rows.push_back({metric, n, k, r0, sim.min_degree_freq.at(k),
                            sim.min_degree_std_error.at(k),
                            sqcon::Source::kSimulated});
          }
        } else if (metric == sqcon::Metric::kPKcon && n >= 2) {
          const sqcon::SimulationResult sim =
              sqcon::estimate_kcon(config, opt.k_list);
          for (const int k : opt.k_list) {
            rows.push_back({metric, n, k, r0, sim.p_kcon_hat.at(k),
                            sim.p_kcon_std_error.at(k),
                            sqcon::Source::kSimulated});
          }
        }
      }
    }
  }

  const int rc = emit_rows(std::move(rows), opt.format, opt.out_path);
  if (rc != kExitOk) return rc;
  return (warned && opt.strict) ? kExitAccuracy : kExitOk;
}

int run_coverage(double x, double y, double r0) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0 || r0 < 0.0) {
    std::cerr << "error: point must lie in the unit square and r0 >= 0\n";
    return kExitUsage;
  }
  const sqcon::Point u{x, y};
  const sqcon::BoundaryEffects fx = sqcon::classify(u, r0);
  std::cout << "F = " << sqcon::format_value(sqcon::coverage_cdf(u, r0))
            << "\n";
  std::cout << "active sides:";
  for (int ell = 1; ell <= 4; ++ell) {
    if (fx.active_sides & (1u << (ell - 1))) {
      std::cout << " S" << ell << " (B=" << sqcon::format_value(fx.segments[ell - 1])
                << ")";
    }
  }
  std::cout << "\nactive vertices:";
  for (int ell = 1; ell <= 4; ++ell) {
    if (fx.active_vertices & (1u << (ell - 1))) {
      std::cout << " V" << ell << " (C=" << sqcon::format_value(fx.corners[ell - 1])
                << ")";
    }
  }
  std::cout << "\n";
  return kExitOk;
}

int run_critical(std::optional<int> n, std::optional<double> r, int k,
                 double target, double tol, double side, bool verify,
                 int runs, std::uint64_t seed, int threads, bool strict) {
  bool warned = false;
  if (n.has_value() == r.has_value()) {
    std::cerr << "error: give exactly one of --n or --r\n";
    return kExitUsage;
  }
  if (n) {
    const sqcon::CriticalRangeResult res =
        sqcon::critical_range(*n, k, target, side, tol);
    warned = res.accuracy_warning;
    std::cout << "critical r0 = " << sqcon::format_value(res.r0)
              << "  (min-degree dist at r0 = "
              << sqcon::format_value(res.achieved) << ", target = "
              << sqcon::format_value(target) << ")\n";
    if (verify) {
      const sqcon::SimulationConfig config{*n, res.r0, runs, seed, side, threads};
      const sqcon::SimulationResult sim = sqcon::estimate_kcon(config, {k});
      std::cout << "simulated P_" << k << "-con(r0) = "
                << sqcon::format_value(sim.p_kcon_hat.at(k)) << " +/- "
                << sqcon::format_value(sim.p_kcon_std_error.at(k)) << " ("
                << runs << " runs)\n";
    }
  } else {
    const sqcon::CriticalNodesResult res =
        sqcon::critical_nodes(*r, k, target, side);
    warned = res.accuracy_warning;
    std::cout << "critical N = " << res.n_nodes
              << "  (min-degree dist at N = "
              << sqcon::format_value(res.achieved) << ", target = "
              << sqcon::format_value(target) << ")\n";
    if (verify) {
      const sqcon::SimulationConfig config{res.n_nodes, *r,   runs,
                                           seed,        side, threads};
      const sqcon::SimulationResult sim = sqcon::estimate_kcon(config, {k});
      std::cout << "simulated P_" << k << "-con(N) = "
                << sqcon::format_value(sim.p_kcon_hat.at(k)) << " +/- "
                << sqcon::format_value(sim.p_kcon_std_error.at(k)) << " ("
                << runs << " runs)\n";
    }
  }
  return (warned && strict) ? kExitAccuracy : kExitOk;
}

int run_partition_check(double r0, int samples, std::uint64_t seed) {
  const sqcon::RangeCase range = sqcon::range_case(r0);
  const auto specs = sqcon::subregions(r0);
  std::cout << "r0 = " << sqcon::format_value(r0) << "  case " << range.case_id
            << "\n";

  double total = 0.0;
  for (const auto& spec : specs) {
    const double area = sqcon::subregion_area(spec, r0);
    total += spec.multiplicity * area;
    std::cout << "  R" << spec.type_id << "  n=" << spec.multiplicity
              << "  area=" << sqcon::format_value(area)
              << (spec.fully_covered ? "  (fully covered)" : "") << "\n";
  }
  const double residual = total - 1.0;
  std::cout << "sum n_i * area = " << sqcon::format_value(total)
            << "  (residual " << sqcon::format_value(residual) << ")\n";
  bool ok = std::abs(residual) <= 1e-9;

  // Spot-check the per-subregion closed form against the general
  // inclusion-exclusion at random interior points.
  sqcon::Rng rng(seed, 0);
  double worst = 0.0;
  for (const auto& spec : specs) {
    for (int s = 0; s < samples; ++s) {
      for (const auto& slab : spec.pieces) {
        if (!(slab.t_hi > slab.t_lo)) continue;
        const double t =
            slab.t_lo + (slab.t_hi - slab.t_lo) * (0.01 + 0.98 * rng.next_unit());
        const double lo = slab.lower.eval(t, r0);
        const double hi = slab.upper.eval(t, r0);
        if (!(hi > lo)) continue;
        const double v = lo + (hi - lo) * (0.01 + 0.98 * rng.next_unit());
        const sqcon::Point u = slab.outer_is_x ? sqcon::Point{t, v}
                                               : sqcon::Point{v, t};
        const double from_masks = spec.fully_covered
                                      ? 1.0
                                      : sqcon::coverage_from_masks(
                                            u, r0, spec.sides, spec.corners);
        worst = std::max(worst,
                         std::abs(from_masks - sqcon::coverage_cdf(u, r0)));
      }
    }
  }
  if (samples > 0) {
    std::cout << "max |table expression - coverage| over samples = "
              << sqcon::format_value(worst) << "\n";
    ok = ok && worst <= 1e-12;
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitAccuracy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity metrics for random geometric graphs on a square"};
  app.require_subcommand(1);

  // coverage
  double cov_x = 0.0, cov_y = 0.0, cov_r = 0.0;
  CLI::App* coverage = app.add_subcommand(
      "coverage", "Coverage CDF and active boundary effects at a point");
  coverage->add_option("--x", cov_x, "x coordinate in [0,1]")->required();
  coverage->add_option("--y", cov_y, "y coordinate in [0,1]")->required();
  coverage->add_option("--r", cov_r, "transmission range")->required();

  // sweep
  SweepOptions sweep_opt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Metric curves over a transmission-range grid");
  sweep->add_option("--metric", sweep_opt.metrics,
                    "p_iso|min_degree|p_kcon|mean_degree|poisson_iso|hd_approx")
      ->required();
  sweep->add_option("--n", sweep_opt.n_list, "node counts")->required();
  sweep->add_option("--k", sweep_opt.k_list, "degree/connectivity orders");
  sweep->add_option("--r-start", sweep_opt.r_start, "grid start");
  sweep->add_option("--r-stop", sweep_opt.r_stop, "grid stop");
  sweep->add_option("--r-step", sweep_opt.r_step, "grid step");
  sweep->add_option("--runs", sweep_opt.runs, "Monte-Carlo runs per point");
  sweep->add_option("--seed", sweep_opt.seed, "simulation seed");
  sweep->add_option("--side", sweep_opt.side, "square side length");
  sweep->add_option("--threads", sweep_opt.threads, "simulation threads");
  sweep->add_flag("--no-sim", sweep_opt.no_sim, "skip simulated rows");
  sweep->add_option("--format", sweep_opt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", sweep_opt.out_path, "output path (default stdout)");
  sweep->add_flag("--strict", sweep_opt.strict,
                  "exit 3 on quadrature accuracy warnings");
  sweep->add_option("--rel-tol", sweep_opt.quad.rel_tol,
                    "quadrature relative tolerance");
  sweep->add_option("--max-subdiv", sweep_opt.quad.max_subdivisions,
                    "quadrature subdivision budget");

  // simulate
  int sim_n = 0;
  double sim_r = 0.0, sim_side = 1.0;
  int sim_runs = 50000, sim_threads = 0;
  std::uint64_t sim_seed = 1;
  std::vector<int> sim_ks{1};
  std::string sim_format = "csv", sim_out;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte-Carlo estimates at a single (N, r0) point");
  simulate->add_option("--n", sim_n, "node count")->required();
  simulate->add_option("--r", sim_r, "transmission range")->required();
  simulate->add_option("--k", sim_ks, "orders for min-degree/k-connectivity");
  simulate->add_option("--runs", sim_runs, "Monte-Carlo runs");
  simulate->add_option("--seed", sim_seed, "simulation seed");
  simulate->add_option("--side", sim_side, "square side length");
  simulate->add_option("--threads", sim_threads, "simulation threads");
  simulate->add_option("--format", sim_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--out", sim_out, "output path (default stdout)");

  // critical
  std::optional<int> crit_n;
  std::optional<double> crit_r;
  int crit_k = 1, crit_runs = 50000, crit_threads = 0;
  double crit_target = 0.99, crit_tol = 1e-5, crit_side = 1.0;
  std::uint64_t crit_seed = 1;
  bool crit_verify = false, crit_strict = false;
  CLI::App* critical = app.add_subcommand(
      "critical", "Critical transmission range or critical node count");
  critical->add_option("--n", crit_n, "fixed node count (solve for r0)");
  critical->add_option("--r", crit_r, "fixed range (solve for N)");
  critical->add_option("--k", crit_k, "connectivity order");
  critical->add_option("--target", crit_target, "target probability in (0,1)");
  critical->add_option("--tol", crit_tol, "bisection tolerance on r0");
  critical->add_option("--side", crit_side, "square side length");
  critical->add_flag("--verify-sim", crit_verify,
                     "also simulate at the solution");
  critical->add_option("--runs", crit_runs, "verification runs");
  critical->add_option("--seed", crit_seed, "verification seed");
  critical->add_option("--threads", crit_threads, "simulation threads");
  critical->add_flag("--strict", crit_strict,
                     "exit 3 on quadrature accuracy warnings");

  // partition-check
  double part_r = 0.3;
  int part_samples = 200;
  std::uint64_t part_seed = 1;
  CLI::App* partition_check = app.add_subcommand(
      "partition-check", "Validate the subregion decomposition at r0");
  partition_check->add_option("--r", part_r, "transmission range")->required();
  partition_check->add_option("--samples", part_samples,
                              "consistency samples per subregion");
  partition_check->add_option("--seed", part_seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (coverage->parsed()) return run_coverage(cov_x, cov_y, cov_r);
    if (sweep->parsed()) return run_sweep(sweep_opt);
    if (simulate->parsed()) {
      if (sim_n < 1) {
        std::cerr << "error: need N >= 1\n";
        return kExitUsage;
      }
      const sqcon::SimulationConfig config{sim_n,    sim_r,    sim_runs,
                                           sim_seed, sim_side, sim_threads};
      std::vector<sqcon::CurveRow> rows;
      const sqcon::SimulationResult iso = sqcon::estimate_isolation(config);
      rows.push_back({sqcon::Metric::kPIso, sim_n, std::nullopt, sim_r,
                      iso.p_iso_hat, iso.p_iso_std_error,
                      sqcon::Source::kSimulated});
      if (sim_n >= 2) {
        const sqcon::SimulationResult deg =
            sqcon::estimate_min_degree(config, sim_ks);
        const sqcon::SimulationResult kc = sqcon::estimate_kcon(config, sim_ks);
        for (const int k : sim_ks) {
          rows.push_back({sqcon::Metric::kMinDegree, sim_n, k, sim_r,
                          deg.min_degree_freq.at(k),
                          deg.min_degree_std_error.at(k),
                          sqcon::Source::kSimulated});
          rows.push_back({sqcon::Metric::kPKcon, sim_n, k, sim_r,
                          kc.p_kcon_hat.at(k), kc.p_kcon_std_error.at(k),
                          sqcon::Source::kSimulated});
        }
      }
      return emit_rows(std::move(rows), sim_format, sim_out);
    }
    if (critical->parsed()) {
      return run_critical(crit_n, crit_r, crit_k, crit_target, crit_tol,
                          crit_side, crit_verify, crit_runs, crit_seed,
                          crit_threads, crit_strict);
    }
    if (partition_check->parsed()) {
      return run_partition_check(part_r, part_samples, part_seed);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
