#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "sqcon/report.hpp"

using namespace sqcon;

namespace {

std::vector<CurveRow> sample_rows() {
  std::vector<CurveRow> rows;
  rows.push_back({Metric::kPIso, 10, std::nullopt, 0.3, 0.135757077,
                  std::nullopt, Source::kAnalytic});
  rows.push_back({Metric::kPIso, 10, std::nullopt, 0.1, 0.6303423,
                  std::nullopt, Source::kAnalytic});
  rows.push_back({Metric::kMinDegree, 10, 2, 0.4, 0.151039466, 0.0025998142,
                  Source::kSimulated});
  rows.push_back({Metric::kPIso, 10, std::nullopt, 0.1, 0.629815, 0.0021,
                  Source::kSimulated});
  return rows;
}

}  // namespace

TEST_CASE("metric names round-trip") {
  for (Metric m : {Metric::kPIso, Metric::kMinDegree, Metric::kPKcon,
                   Metric::kMeanDegree, Metric::kPoissonIso, Metric::kHdApprox}) {
    CHECK(parse_metric(to_string(m)) == m);
  }
  CHECK(!parse_metric("bogus").has_value());
}

TEST_CASE("rows sort canonically by metric, N, k, r0, source") {
  auto rows = sample_rows();
  sort_rows(rows);
  CHECK(rows[0].r0 == 0.1);
  CHECK(rows[0].source == Source::kAnalytic);
  CHECK(rows[1].r0 == 0.1);
  CHECK(rows[1].source == Source::kSimulated);
  CHECK(rows[2].r0 == 0.3);
  CHECK(rows[3].metric == Metric::kMinDegree);
}

TEST_CASE("csv output is stable and uses empty fields for missing values") {
  auto rows = sample_rows();
  sort_rows(rows);
  std::ostringstream os;
  write_csv(os, rows);
  const std::string expected =
      "metric,N,k,r0,value,stderr,source\n"
      "p_iso,10,,0.1,0.6303423,,analytic\n"
      "p_iso,10,,0.1,0.629815,0.0021,simulated\n"
      "p_iso,10,,0.3,0.135757077,,analytic\n"
      "min_degree,10,2,0.4,0.151039466,0.0025998142,simulated\n";
  CHECK(os.str() == expected);

  std::ostringstream again;
  write_csv(again, rows);
  CHECK(os.str() == again.str());
}

TEST_CASE("json output round-trips through the documented schema") {
  auto rows = sample_rows();
  sort_rows(rows);
  std::ostringstream os;
  write_json(os, rows);

  const nlohmann::json parsed = nlohmann::json::parse(os.str());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& obj = parsed[i];
    CHECK(obj.at("metric").get<std::string>() == to_string(rows[i].metric));
    CHECK(obj.at("N").get<int>() == rows[i].n_nodes);
    if (rows[i].k) {
      CHECK(obj.at("k").get<int>() == *rows[i].k);
    } else {
      CHECK(obj.at("k").is_null());
    }
    CHECK(obj.at("r0").get<double>() == doctest::Approx(rows[i].r0).epsilon(1e-9));
    CHECK(obj.at("value").get<double>() ==
          doctest::Approx(rows[i].value).epsilon(1e-9));
    if (rows[i].std_error) {
      CHECK(obj.at("stderr").get<double>() ==
            doctest::Approx(*rows[i].std_error).epsilon(1e-9));
    } else {
      CHECK(obj.at("stderr").is_null());
    }
    CHECK(obj.at("source").get<std::string>() == to_string(rows[i].source));
  }
}

TEST_CASE("values print with nine significant digits") {
  CHECK(format_value(0.12566370614359172) == "0.125663706");
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(0.5) == "0.5");
  CHECK(format_value(1e-12) == "1e-12");
}
