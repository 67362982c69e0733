#include <doctest.h>

#include <cmath>

#include "imag/error.hpp"
#include "imag/ordering.hpp"

using namespace imag;

TEST_CASE("same order") {
  CHECK(same_order({1, 2, 3}, {10, 20, 30}).holds());
  const OrderReport r = same_order({1, 2}, {2, 1});
  CHECK_FALSE(r.holds());
  CHECK(r.violations.size() == 1);
  CHECK(r.pairs_tested == 1);
  // Ties are compatible with either direction.
  CHECK(same_order({1, 1, 2}, {5, 4, 6}).holds());
  CHECK(same_order({3.0}, {1.0}).holds());
  CHECK_THROWS_AS(same_order({1, 2}, {1}), ValidationError);
}

TEST_CASE("closed forms share an order on a small grid") {
  std::vector<double> t, s, o;
  for (double x : {0.1, 0.2, 0.3, 0.4}) {
    t.push_back(closed_form_canonical_x(x, {Family::Tsallis, Alpha(0.75)}));
    s.push_back(closed_form_canonical_x(x, {Family::Sandwiched, Alpha(0.75)}));
    o.push_back(closed_form_canonical_x(x, {Family::Operator, Alpha(0.75)}));
  }
  CHECK(same_order(t, s).holds());
  CHECK(same_order(s, o).holds());
}

TEST_CASE("proposition 3") {
  CHECK(check_proposition3({0, 0.1, 0.2, 0.3, 0.4, 0.5}, Alpha(0.75)).holds());
  CHECK(check_proposition3({0.25}, Alpha(0.75)).holds());
  CHECK(check_proposition3({0, 0.25, 0.5}, Alpha(0.5)).holds());
  CHECK(check_proposition3({0, 0.25, 0.5}, Alpha(0.5)).pairs_tested == 9);
}

TEST_CASE("proposition 4") {
  const OrderReport r = check_proposition4(100, 0.3, Alpha(0.75), 1);
  CHECK(r.holds());
  CHECK(r.pairs_tested == 3 * 4950);
  CHECK(check_proposition4(50, 0.5, Alpha(0.75), 1).holds());
  CHECK(check_proposition4(2, 0.2, Alpha(0.9), 3).holds());
  CHECK_THROWS_AS(check_proposition4(1, 0.2, Alpha(0.9), 3), ValidationError);
}

TEST_CASE("printed derivatives") {
  CHECK(printed_derivative_canonical_x(0.2, {Family::Tsallis, Alpha(0.75)}) ==
        doctest::Approx(-std::cbrt(0.7) / 0.75));
  CHECK(printed_derivative_canonical_x(0.25, {Family::Sandwiched, Alpha(0.5)}) ==
        doctest::Approx(-(2 * 0.5 * 0.75) / (0.25 * 1.5)));
}

TEST_CASE("monotonicity and derivative agreement") {
  for (double a : {0.5, 0.75, 0.9}) {
    for (Family f : {Family::Tsallis, Family::Sandwiched, Family::Operator}) {
      const MonotonicityReport rep = monotonicity_check({f, Alpha(a)}, interior_x_grid(20));
      CHECK(rep.samples.size() == 80);
      CHECK(rep.holds());
    }
  }
  // x = 0 uses a one-sided difference.
  const MonotonicityReport edge = monotonicity_check({Family::Tsallis, Alpha(0.75)}, {0.0});
  CHECK(edge.samples[0].finite_difference <= 0.0);
  CHECK_THROWS_AS(monotonicity_check({Family::Tsallis, Alpha(0.75)}, {0.5}), ValidationError);
}
