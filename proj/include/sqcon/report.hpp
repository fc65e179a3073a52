#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Machine-readable output of metric sweeps. One row per
// (metric, N, k, r0) sample; rows are sorted canonically before emission
// so how they were computed is unobservable. Columns are fixed:
//   metric,N,k,r0,value,stderr,source
// k and stderr are empty (CSV) / null (JSON) where they do not apply.
// Floats are printed with 9 significant digits.

namespace sqcon {

enum class Metric {
  kPIso,
  kMinDegree,
  kPKcon,
  kMeanDegree,
  kPoissonIso,
  kHdApprox,
};

enum class Source { kAnalytic, kSimulated };

const char* to_string(Metric metric);
const char* to_string(Source source);
std::optional<Metric> parse_metric(const std::string& name);

struct CurveRow {
  Metric metric = Metric::kPIso;
  int n_nodes = 0;
  std::optional<int> k;
  double r0 = 0.0;
  double value = 0.0;
  std::optional<double> std_error;
  Source source = Source::kAnalytic;
};

// Canonical row order: metric, N, k, r0, source.
void sort_rows(std::vector<CurveRow>& rows);

// Fixed-format float with 9 significant digits.
std::string format_value(double v);

void write_csv(std::ostream& os, const std::vector<CurveRow>& rows);
void write_json(std::ostream& os, const std::vector<CurveRow>& rows);

}  // namespace sqcon
