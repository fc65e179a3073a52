#include "sqcon/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <tuple>

namespace sqcon {

const char* to_string(Metric metric) {
  switch (metric) {
    case Metric::kPIso: return "p_iso";
    case Metric::kMinDegree: return "min_degree";
    case Metric::kPKcon: return "p_kcon";
    case Metric::kMeanDegree: return "mean_degree";
    case Metric::kPoissonIso: return "poisson_iso";
    case Metric::kHdApprox: return "hd_approx";
  }
  return "?";
}

const char* to_string(Source source) {
  return source == Source::kAnalytic ? "analytic" : "simulated";
}

std::optional<Metric> parse_metric(const std::string& name) {
  for (Metric m : {Metric::kPIso, Metric::kMinDegree, Metric::kPKcon,
                   Metric::kMeanDegree, Metric::kPoissonIso, Metric::kHdApprox}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

void sort_rows(std::vector<CurveRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
    return std::make_tuple(static_cast<int>(a.metric), a.n_nodes,
                           a.k.value_or(0), a.r0, static_cast<int>(a.source)) <
           std::make_tuple(static_cast<int>(b.metric), b.n_nodes,
                           b.k.value_or(0), b.r0, static_cast<int>(b.source));
  });
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "metric,N,k,r0,value,stderr,source\n";
  for (const CurveRow& row : rows) {
    os << to_string(row.metric) << ',' << row.n_nodes << ',';
    if (row.k) os << *row.k;
    os << ',' << format_value(row.r0) << ',' << format_value(row.value) << ',';
    if (row.std_error) os << format_value(*row.std_error);
    os << ',' << to_string(row.source) << '\n';
  }
}

void write_json(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CurveRow& row = rows[i];
    os << "  {\"metric\": \"" << to_string(row.metric) << "\", \"N\": "
       << row.n_nodes << ", \"k\": ";
    if (row.k) {
      os << *row.k;
    } else {
      os << "null";
    }
    os << ", \"r0\": " << format_value(row.r0) << ", \"value\": "
       << format_value(row.value) << ", \"stderr\": ";
    if (row.std_error) {
      os << format_value(*row.std_error);
    } else {
      os << "null";
    }
    os << ", \"source\": \"" << to_string(row.source) << "\"}";
    if (i + 1 < rows.size()) os << ',';
    os << '\n';
  }
  os << "]\n";
}

}  // namespace sqcon
