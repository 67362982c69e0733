#include <doctest.h>

#include <cmath>

#include "imag/error.hpp"
#include "imag/verification.hpp"

using namespace imag;

namespace {
OptConfig quick() {
  OptConfig c;
  c.restarts = 4;
  return c;
}
}  // namespace

TEST_CASE("axiom suite, small") {
  AxiomConfig c;
  c.n_samples = 12;
  c.alphas = {0.75};
  c.opt = quick();
  const SuiteResult r = run_axiom_suite(c);
  CHECK(r.passed());
  // M1: 6 + 6 states, M2: 12 pairs, M5: 3 instances; three families each.
  CHECK(r.checks_run == 3 * (12 + 12 + 3));

  c.n_samples = 0;
  CHECK_THROWS_AS(run_axiom_suite(c), ValidationError);
}

TEST_CASE("axiom self-test flags a complex channel") {
  AxiomConfig c;
  c.n_samples = 10;
  c.alphas = {0.75};
  c.opt = quick();
  c.self_test = true;
  const SuiteResult r = run_axiom_suite(c);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.front().check == "M2");
}

TEST_CASE("theorem 2 suite tabulates the Tsallis gap") {
  Theorem2Config c;
  c.A_grid = {0.0, 0.5, 1.0};
  c.alphas = {0.75};
  c.opt = quick();
  c.oracle_resolution = 64;
  const SuiteResult r = run_theorem2_suite(c);
  CHECK(r.passed());
  const auto& t = r.tables.at("tsallis_discrepancy");
  REQUIRE(t.size() == 3);
  CHECK(t[0].at("closed_minus_definitional").get<double>() ==
        doctest::Approx(std::pow(2.0, -1.0 / 3) - std::pow(2.0, -4.0 / 3)).epsilon(1e-6));
  CHECK(std::abs(t[2].at("closed_minus_definitional").get<double>()) <= 1e-6);
}

TEST_CASE("figure 1 suite") {
  const SuiteResult r = run_fig1_suite(uniform_grid(21), fig1_alpha_grid());
  CHECK(r.passed());
  CHECK(r.checks_run == 21 * 10 * 2 + 21);
}

TEST_CASE("figure 2 suite without the optimizer table") {
  Fig2Config c;
  c.cross_points = 0;
  const SuiteResult r = run_fig2_suite(c);
  CHECK(r.passed());
  CHECK_FALSE(r.tables.contains("cross_check"));
}

TEST_CASE("figure 2 cross-check table") {
  Fig2Config c;
  c.A_grid = {0.0, 0.6, 1.0};
  c.cross_points = 3;
  c.opt = quick();
  const SuiteResult r = run_fig2_suite(c);
  CHECK(r.passed());
  CHECK(r.tables.at("cross_check").size() == 9);
}

TEST_CASE("ordering suites") {
  OrderingConfig c;
  c.n_samples = 60;
  c.ms = {0.0, 0.3, 0.5};
  CHECK(run_prop3_suite(c).passed());
  const SuiteResult p4 = run_prop4_suite(c);
  CHECK(p4.passed());
  CHECK(p4.checks_run == 4 * 3 * 3 * (60 * 59 / 2));
}

TEST_CASE("suite JSON") {
  SuiteResult r;
  r.name = "x";
  r.checks_run = 2;
  r.failures.push_back({"c", {{"seed", 1}}, 0.0, 1.0, 1e-6});
  const auto j = to_json(r);
  CHECK(j.at("passed") == false);
  CHECK(j.at("failures")[0].at("coordinates").at("seed") == 1);

  const auto o = to_json(check_proposition4(3, 0.2, Alpha(0.7), 5));
  CHECK(o.at("proposition") == "prop4");
  CHECK(o.at("pairs") == 9);
  CHECK(o.at("seed") == 5);
}
