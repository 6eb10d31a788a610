#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biracah/sweep.hpp"

using namespace biracah;

namespace {

SweepOptions small_options() {
  SweepOptions opt;
  opt.mu_grid = {Rational(0), Rational(1)};
  opt.n_max = 3;
  opt.oracle_n_max = 1;
  return opt;
}

}  // namespace

TEST_CASE("parallel runner matches the serial reference") {
  std::vector<Check> checks = exact_suite(small_options());
  std::vector<CheckResult> serial = run_checks(checks, false);
  std::vector<CheckResult> parallel = run_checks(checks, true);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].name == parallel[i].name);
    CHECK(serial[i].pass == parallel[i].pass);
    CHECK(serial[i].detail == parallel[i].detail);
  }
}

TEST_CASE("exact suite passes") {
  for (const CheckResult& r : run_checks(exact_suite(small_options()), true)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("fault injection is caught and named") {
  SweepOptions opt = small_options();
  opt.inject_fault = "u1";
  std::vector<CheckResult> results = run_checks(exact_suite(opt), false);
  bool found = false;
  for (const CheckResult& r : results)
    if (!r.pass) {
      found = true;
      CHECK(r.name.find("bi-algebra") != std::string::npos);
      CHECK(r.detail.find("violated") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("numeric suite passes serially") {
  SweepOptions opt;
  opt.mu_grid = {Rational(0), Rational(1, 2)};
  opt.n_max = 2;
  opt.oracle_n_max = 1;
  for (const CheckResult& r : run_checks(numeric_suite(opt), false)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("exceptions become failures") {
  std::vector<Check> checks{{"boom", []() -> std::pair<bool, std::string> {
                               throw Error("expected");
                             }}};
  std::vector<CheckResult> r = run_checks(checks, false);
  CHECK_FALSE(r[0].pass);
  CHECK(r[0].detail.find("expected") != std::string::npos);
}
