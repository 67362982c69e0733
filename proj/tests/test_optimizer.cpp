#include <doctest.h>

#include <cmath>

#include "imag/error.hpp"
#include "imag/optimizer.hpp"

using namespace imag;

TEST_CASE("nelder-mead on smooth functions") {
  const auto quad = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0);
  };
  const SimplexResult r = nelder_mead_minimize(quad, {0.0, 0.0}, 0.5, 5000, 1e-14);
  CHECK(r.converged);
  CHECK(r.point[0] == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.point[1] == doctest::Approx(-2.0).epsilon(1e-5));

  const auto rosen = [](std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  const SimplexResult s = nelder_mead_minimize(rosen, {-1.2, 1.0}, 0.5, 20000, 1e-16);
  CHECK(s.value <= 1e-10);
}

TEST_CASE("nelder-mead budget and infeasible vertices") {
  int calls = 0;
  const auto f = [&](std::span<const double> x) {
    ++calls;
    return x[0] < 0.0 ? INFINITY : x[0];
  };
  const SimplexResult r = nelder_mead_minimize(f, {1.0}, 0.3, 50, 1e-300);
  CHECK(r.evaluations <= 52);
  CHECK(calls == r.evaluations);
  CHECK(r.value >= 0.0);
  CHECK_THROWS_AS(nelder_mead_minimize(f, {}, 0.1, 10, 1e-9), ValidationError);
}

TEST_CASE("config validation") {
  OptConfig c;
  c.restarts = 0;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = {};
  c.tol = 0.0;
  CHECK_THROWS_AS(validate(c), ValidationError);
}

TEST_CASE("maximizing a linear functional picks the top eigenvector") {
  // max tr(H sigma) over real states is the largest eigenvalue of H.
  RealMatrix h(3, 3);
  h << 1.0, 0.5, 0.0, 0.5, 2.0, 0.3, 0.0, 0.3, -1.0;
  const auto obj = [&](const DensityMatrix& s) {
    return (h.cast<Complex>() * s.matrix()).trace().real();
  };
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(h.eval()));
  const double top = es.eigenvalues()(2);
  OptConfig cfg;
  cfg.restarts = 4;
  const OptResult full = maximize_over_real_states(obj, 3, cfg);
  CHECK(full.value == doctest::Approx(top).epsilon(1e-7));
  const OptResult pure = maximize_over_pure_real_states(obj, 3, cfg);
  CHECK(pure.value == doctest::Approx(top).epsilon(1e-9));
  CHECK(full.evaluations > 0);
}

TEST_CASE("seeded runs are reproducible") {
  const auto obj = [](const DensityMatrix& s) {
    return -std::abs(s.matrix()(0, 1).real() - 0.2);
  };
  OptConfig cfg;
  cfg.restarts = 5;
  cfg.seed = 42;
  const OptResult a = maximize_over_real_states(obj, 2, cfg);
  const OptResult b = maximize_over_real_states(obj, 2, cfg);
  CHECK(a.value == b.value);
  CHECK(a.best_restart == b.best_restart);
  CHECK(max_abs(a.sigma.matrix() - b.sigma.matrix()) == 0.0);
}

TEST_CASE("hints must have the right shape") {
  const auto obj = [](const DensityMatrix&) { return 0.0; };
  const RealMatrix wrong = RealMatrix::Identity(3, 3);
  CHECK_THROWS_AS(maximize_over_real_states(obj, 2, OptConfig{}, std::span(&wrong, 1)),
                  ValidationError);
}

TEST_CASE("non-finite objective is a numerical error") {
  const auto obj = [](const DensityMatrix&) { return std::nan(""); };
  CHECK_THROWS_AS(maximize_over_real_states(obj, 2, OptConfig{}), NumericalError);
}

TEST_CASE("grid oracle") {
  // max of <0|sigma|0> is 1, at theta = 0, q = 1.
  const auto obj = [](const DensityMatrix& s) { return s.matrix()(0, 0).real(); };
  const OptResult r = grid_oracle_qubit(obj, 64);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(grid_oracle_qubit(obj, 10), ValidationError);
}
