#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "threecore/io.hpp"
#include "threecore/parallel.hpp"
#include "threecore/series.hpp"
#include "threecore/verify.hpp"

#include <atomic>
#include <vector>

using namespace threecore;

TEST_CASE("parallel_for covers the range exactly once") {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(0, 1000, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) hits[static_cast<std::size_t>(i)]++;
  }, 4);
  for (const auto& h : hits) CHECK(h.load() == 1);
  parallel_for(5, 5, [&](std::int64_t, std::int64_t) { FAIL("empty range ran"); });
}

TEST_CASE("campaigns pass at reduced scale") {
  CHECK(verify_jacobi(500).passed);
  CHECK(verify_hook_formula(20).passed);
  CHECK(verify_three_core(20, 300, 2000).passed);
  CHECK(verify_theorem1(2000, 300).passed);
  CHECK(verify_theta(500).passed);
  CHECK(verify_counterexample_t4().passed);
}

TEST_CASE("reports are deterministic apart from wall time") {
  const VerificationReport a = verify_jacobi(400);
  const VerificationReport b = verify_jacobi(400);
  CHECK(a.campaign == b.campaign);
  CHECK(a.ranges == b.ranges);
  CHECK(a.passed == b.passed);
  CHECK(a.mismatches.size() == b.mismatches.size());
  nlohmann::json ja = report_to_json(a);
  nlohmann::json jb = report_to_json(b);
  ja.erase("elapsed_seconds");
  jb.erase("elapsed_seconds");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("report json carries the pass/fail contract") {
  const VerificationReport r = verify_counterexample_t4();
  const nlohmann::json j = report_to_json(r);
  CHECK(j.at("campaign") == "counterexample-t4");
  CHECK(j.at("status") == "pass");
  CHECK(j.at("mismatches").is_array());
  CHECK(j.at("mismatches").empty());
  CHECK(j.at("ranges").at("precision") == 54);
}

TEST_CASE("the mismatch sink streams every finding") {
  int streamed = 0;
  const MismatchSink sink = [&streamed](const Mismatch&) { ++streamed; };
  const VerificationReport r = verify_jacobi(300, sink);
  CHECK(streamed == static_cast<int>(r.mismatches.size()));
  CHECK(streamed == 0);
}

TEST_CASE("density rows at small bounds match the series zero pattern") {
  const auto rows = density_table({0, 5, 20});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].bound == 0);
  CHECK(rows[0].zeros == 0);
  CHECK(rows[0].ratio == Rational(0));

  // zeros among n <= X counted off the Euler-power series
  const IntSeries f = euler_power(8, 20);
  std::uint64_t zeros5 = 0, zeros20 = 0;
  for (int n = 0; n <= 20; ++n) {
    if (!f[n].is_zero()) continue;
    if (n <= 5) ++zeros5;
    ++zeros20;
  }
  CHECK(rows[1].zeros == zeros5);
  CHECK(rows[2].zeros == zeros20);
  CHECK(rows[2].ratio == Rational(Int(static_cast<std::int64_t>(zeros20)), Int(21)));
}

TEST_CASE("density rows serialize to csv and json") {
  const auto rows = density_table({0, 20});
  const std::string csv = density_to_csv(rows);
  CHECK(csv.substr(0, 14) == "X,zeros,ratio\n");
  CHECK(csv.find("0,0,0.000000\n") != std::string::npos);
  const nlohmann::json j = density_to_json(rows);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("X") == 0);
  CHECK(j[1].at("X") == 20);
  CHECK(j[1].at("ratio").get<std::string>().find('/') != std::string::npos);
}

TEST_CASE("density bounds are deduplicated and ordered") {
  const auto rows = density_table({30, 10, 30, 0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].bound == 0);
  CHECK(rows[1].bound == 10);
  CHECK(rows[2].bound == 30);
}

TEST_CASE("factorization rendering") {
  CHECK(to_string(factorize(1)) == "1");
  CHECK(to_string(factorize(10)) == "2 * 5");
  CHECK(to_string(factorize(208)) == "2^4 * 13");
  CHECK(to_string(factorize(49)) == "7^2");
}
