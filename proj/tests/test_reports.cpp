#include <doctest.h>

#include <json.hpp>

#include "core/json_io.hpp"
#include "core/reports.hpp"
#include "core/verify.hpp"

using namespace hk;

namespace {
ReportOptions opts(ReportFormat f) {
  ReportOptions o;
  o.format = f;
  return o;
}
}  // namespace

TEST_CASE("format and mode parsing") {
  CHECK(parse_format("pretty") == ReportFormat::pretty);
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_format("yaml"), ArgumentError);
  CHECK(parse_mode("plain") == CharMode::plain);
  CHECK(parse_mode("qt") == CharMode::qt);
  CHECK_THROWS_AS(parse_mode("graded"), ArgumentError);
}

TEST_CASE("ribbon report for one class") {
  std::string out = ribbon_report(4, {1, 2, 1}, 0, opts(ReportFormat::pretty));
  CHECK(out.find("(1,2,1)") != std::string::npos);
  CHECK(out.find("5") != std::string::npos);

  auto j = nlohmann::json::parse(ribbon_report(4, {1, 2, 1}, 0, opts(ReportFormat::json)));
  CHECK(j["report"] == "ribbon");
  CHECK(j["n"] == 4);
  REQUIRE(j["classes"].size() == 1);
  CHECK(j["classes"][0]["alpha"] == nlohmann::json::array({1, 2, 1}));
  CHECK(j["classes"][0]["count"] == "5");
}

TEST_CASE("ribbon report with the (q,t) layer") {
  std::string out = ribbon_report(2, {1, 1}, 2, opts(ReportFormat::pretty));
  CHECK(out.find("t + t^2") != std::string::npos);
  auto j = nlohmann::json::parse(ribbon_report(2, {1, 1}, 2, opts(ReportFormat::json)));
  CHECK(j["q"] == 2);
  QtPoly t = QtPoly::t();
  CHECK(j["classes"][0]["qt"] == qtpoly_to_json(t + t * t));
}

TEST_CASE("ribbon report over all classes of n") {
  auto j = nlohmann::json::parse(ribbon_report(3, {}, 0, opts(ReportFormat::json)));
  CHECK(j["classes"].size() == 4);
  int total = 0;
  for (const auto& c : j["classes"]) total += std::stoi(c["count"].get<std::string>());
  CHECK(total == 6);
}

TEST_CASE("trivial class") {
  auto j = nlohmann::json::parse(ribbon_report(1, {1}, 0, opts(ReportFormat::json)));
  CHECK(j["classes"][0]["count"] == "1");
  Json one = qtpoly_to_json(QtPoly(1));
  CHECK(j["classes"][0]["by_inversions"] == one);
  CHECK(j["classes"][0]["by_inverse_major"] == one);
  CHECK(j["classes"][0]["q_multinomial"] == one);
}

TEST_CASE("ribbon csv has the fixed header") {
  std::string out = ribbon_report(3, {2, 1}, 0, opts(ReportFormat::csv));
  CHECK(out.rfind("alpha,n,statistic,value", 0) == 0);
}

TEST_CASE("reports are byte-deterministic") {
  for (ReportFormat f : {ReportFormat::pretty, ReportFormat::json, ReportFormat::csv}) {
    CHECK(ribbon_report(4, {2, 2}, 2, opts(f)) == ribbon_report(4, {2, 2}, 2, opts(f)));
    CHECK(characteristic_report("coinvariant", 3, {}, {}, 0, CharMode::qt, opts(f)) ==
          characteristic_report("coinvariant", 3, {}, {}, 0, CharMode::qt, opts(f)));
  }
}

TEST_CASE("coinvariant characteristic report lists six terms at n = 3") {
  auto j = nlohmann::json::parse(
      characteristic_report("coinvariant", 3, {}, {}, 0, CharMode::qt, opts(ReportFormat::json)));
  CHECK(j["report"] == "characteristic");
  CHECK(j["module"] == "coinvariant");
  CHECK(j["mode"] == "qt");
  // distinct F-indices for n = 3; six permutations share them
  CHECK(j["fundamental"]["terms"].size() == 4);
  Int mass = 0;
  for (const auto& term : j["fundamental"]["terms"])
    mass += qtpoly_from_json(term["coeff"]).eval(1, 1);
  CHECK(mass == 6);
  CHECK(j["decomposition"].size() == 4);
  for (const auto& b : j["decomposition"]) {
    CHECK(b.contains("alpha"));
    CHECK(b.contains("dimension"));
    CHECK(b.contains("isomorphism_witness_checksum"));
  }
}

TEST_CASE("projective characteristic is a ribbon function") {
  auto j = nlohmann::json::parse(characteristic_report("projective", 0, {1, 2, 1}, {}, 0,
                                                       CharMode::plain, opts(ReportFormat::json)));
  CHECK(j["module"] == "projective");
  // the F-expansion coefficients total the class size
  Int total = 0;
  for (const auto& term : j["fundamental"]["terms"])
    total += qtpoly_from_json(term["coeff"]).eval(1, 1);
  CHECK(total == 5);
}

TEST_CASE("simple characteristic is one fundamental term") {
  auto j = nlohmann::json::parse(characteristic_report("simple", 0, {2, 1}, {}, 0, CharMode::plain,
                                                       opts(ReportFormat::json)));
  REQUIRE(j["fundamental"]["terms"].size() == 1);
  CHECK(j["fundamental"]["terms"][0]["index"] == nlohmann::json::array({2, 1}));
}

TEST_CASE("flag characteristic report carries the factor table") {
  auto j = nlohmann::json::parse(
      characteristic_report("flag", 2, {}, {}, 2, CharMode::plain, opts(ReportFormat::json)));
  CHECK(j["q"] == 2);
  REQUIRE(j["factors"].size() == 2);
  for (const auto& f : j["factors"]) {
    CHECK(f["multiplicity"] == f["predicted_r_alpha_q"]);
  }
  std::string csv = characteristic_report("flag", 2, {}, {}, 2, CharMode::plain, opts(ReportFormat::csv));
  CHECK(csv.rfind("alpha,dim_Q_alpha,multiplicity,predicted_r_alpha_q", 0) == 0);
}

TEST_CASE("springer characteristic rejects non-hooks") {
  CHECK_THROWS_AS(characteristic_report("springer", 0, {}, {2, 2}, 0, CharMode::t,
                                        opts(ReportFormat::pretty)),
                  UnavailableError);
}

TEST_CASE("unsupported gradings are refused") {
  CHECK_THROWS_AS(characteristic_report("flag", 2, {}, {}, 2, CharMode::t,
                                        opts(ReportFormat::pretty)),
                  UnavailableError);
  CHECK_THROWS_AS(characteristic_report("projective", 0, {2, 1}, {}, 0, CharMode::q,
                                        opts(ReportFormat::pretty)),
                  UnavailableError);
}

TEST_CASE("unknown module names are argument errors") {
  CHECK_THROWS_AS(characteristic_report("mystery", 3, {}, {}, 0, CharMode::plain,
                                        opts(ReportFormat::pretty)),
                  ArgumentError);
}

TEST_CASE("verify report renders pass and fail lines") {
  SuiteResult r;
  r.suite = "demo";
  r.checks.push_back({"first", true, "fine"});
  r.checks.push_back({"second", false, "broke"});
  std::string pretty = verify_report(r, opts(ReportFormat::pretty));
  CHECK(pretty.find("[PASS] first") != std::string::npos);
  CHECK(pretty.find("[FAIL] second") != std::string::npos);
  CHECK(pretty.find("FAIL (1/2 checks)") != std::string::npos);

  auto j = nlohmann::json::parse(verify_report(r, opts(ReportFormat::json)));
  CHECK(j["suite"] == "demo");
  CHECK(j["passed"] == false);
  CHECK(j["checks"].size() == 2);

  std::string csv = verify_report(r, opts(ReportFormat::csv));
  CHECK(csv.rfind("suite,check,passed,detail", 0) == 0);
}

TEST_CASE("suite registry knows every suite") {
  for (const auto& name : suite_names()) CHECK(is_suite(name));
  CHECK(!is_suite("nonsense"));
  CHECK(suite_names().size() == 7);
}

TEST_CASE("small verification suites pass end to end") {
  VerifyConfig cfg;
  cfg.n = 3;
  cfg.trials = 10;
  auto r1 = run_suite("demazure-relations", cfg);
  CHECK(r1.passed());
  VerifyConfig cfg2;
  cfg2.n = 3;
  auto r2 = run_suite("norton", cfg2);
  CHECK(r2.passed());
  auto r3 = run_suite("foata", cfg2);
  CHECK(r3.passed());
  CHECK_THROWS_AS(run_suite("mystery", cfg2), ArgumentError);
}
