#include "doctest.h"
#include "json.hpp"
#include "richmult/report.hpp"

using namespace richmult;

TEST_CASE("ideal text round trip for every valid G(2,5) triple") {
  GrassShape s(2, 5);
  for (const auto& t : all_triples(s)) {
    Chart chart(s, t.tau);
    auto names = chart.variable_names("x");
    PolyIdeal I = richardson_ideal(chart, t.w, t.v);
    CHECK(parse_ideal(format_ideal(I, names), names) == I);
  }
  std::vector<std::string> names{"x_1_2"};
  CHECK(parse_ideal("\n  \n", names).is_zero());
}

TEST_CASE("report JSON has stable fields and nulls for absent data") {
  GrassShape s(2, 4);
  TripleContext ctx = prepare_triple(s, CosetRep(s, {2, 4}), CosetRep(s, {1, 2}), CosetRep(s, {1, 2}));
  MultiplicityReport r = analyze_point(ctx, ctx.chart.origin());
  auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["family"] == "grassmannian");
  CHECK(j["w"] == "2,4");
  CHECK(j["point"]["3.1"] == "0");
  CHECK(j["mu_wv_oracle"] == 2);
  CHECK(j["samuel_w"].is_null());
  CHECK(j["degree_identity"] == true);

  QuadricShape q(2);
  QuadricPoint x{1, 0, 0, 0, 0};
  MultiplicityReport qr = quadric_report(q, SchubertIndex(q, 4), SchubertIndex(q, 1), x);
  auto qj = nlohmann::json::parse(report_to_json(qr));
  CHECK(qj["family"] == "quadric");
  CHECK(qj["d"].is_null());
  CHECK(qj["tau"].is_null());
  CHECK(qj["point"] == nlohmann::json::array({"1", "0", "0", "0", "0"}));
  CHECK(qj["deg_zw"].is_null());
}

TEST_CASE("CSV has one row per report and quotes comma fields") {
  GrassShape s(2, 4);
  SweepConfig cfg;
  SweepResult r = verify_theorem(s, cfg);
  std::string csv = reports_to_csv(r.reports);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == r.checked() + 1);
  CHECK(csv.find("\"1,2\"") != std::string::npos);
  CHECK(format_reports(r.reports, ReportFormat::Json) == reports_to_json(r.reports));
  CHECK(reports_to_json({}) == "[]\n");
}

TEST_CASE("point formats") {
  GrassShape s(3, 7);
  Chart chart(s, CosetRep(s, {2, 5, 6}));
  AffinePoint m = parse_point_map(R"({"1.2": "1", "1.6": 1, "3.6": "-1"})", chart);
  CHECK(m[0] == 1);
  CHECK(m[2] == 1);
  CHECK(m[5] == -1);
  CHECK(parse_point_map(point_to_json(chart, m), chart) == m);
  CHECK_THROWS_AS(parse_point_map(R"({"2.5": "1"})", chart), Error);
  CHECK_THROWS_AS(parse_point_map(R"({"1.2": 0.5})", chart), Error);
  CHECK_THROWS_AS(parse_point_map("{", chart), Error);

  std::string matrix = R"([[1,0,0],[1,0,0],[0,0,0],[0,0,0],[0,1,0],[0,0,1],[0,0,0]])";
  CHECK(point_json_is_matrix(matrix));
  RationalMatrix M = parse_point_matrix(matrix);
  CHECK(cell_of_point(s, M) == CosetRep(s, {2, 5, 6}));
  CHECK(chart_coordinates(chart, M)[0] == 1);

  QuadricPoint x = parse_quadric_point(R"(["1/2", 0, -3])");
  CHECK(x == QuadricPoint{Rational(1, 2), 0, -3});
  CHECK(quadric_point_to_json(x) == R"(["1/2","0","-3"])");
}

TEST_CASE("grid and format parsing") {
  CHECK(parse_grid("-2,-1,0,1,2").size() == 5);
  CHECK(parse_grid("1/2, 3").at(0) == Rational(1, 2));
  CHECK_THROWS_AS(parse_grid("1,2,1"), Error);
  CHECK_THROWS_AS(parse_grid("1,,2"), Error);
  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(parse_report_format("xml"), Error);
}
