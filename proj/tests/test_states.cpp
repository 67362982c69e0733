#include <doctest.h>

#include <cmath>

#include "imag/error.hpp"
#include "imag/states.hpp"

using namespace imag;

TEST_CASE("density matrix validation names the broken invariant") {
  ComplexMatrix m(2, 2);
  m << 0.5, 0.0, 0.0, 0.5;
  CHECK_NOTHROW(DensityMatrix{m});

  ComplexMatrix trace(2, 2);
  trace << 0.6, 0.0, 0.0, 0.6;
  CHECK_THROWS_WITH_AS(DensityMatrix{trace}, doctest::Contains("trace"),
                       ValidationError);

  ComplexMatrix herm(2, 2);
  herm << 0.5, 0.1, 0.0, 0.5;
  CHECK_THROWS_WITH_AS(DensityMatrix{herm}, doctest::Contains("ermitian"),
                       ValidationError);

  ComplexMatrix neg(2, 2);
  neg << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityMatrix{neg}, ValidationError);
}

TEST_CASE("pure states and the imaginarity parameter") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(PureState{v}, ValidationError);

  for (double A : {0.0, 0.3, 0.77, 1.0}) {
    const PureState psi = canonical_pure_state(A);
    CHECK(imaginarity_parameter(psi) == doctest::Approx(A).epsilon(1e-12));
  }
  CHECK_THROWS_AS(canonical_pure_state(1.5), ValidationError);
  // A global phase leaves A unchanged.
  const PureState psi = canonical_pure_state(0.4);
  const PureState rot(psi.amplitudes() * std::polar(1.0, 0.9));
  CHECK(imaginarity_parameter(rot) == doctest::Approx(0.4));
}

TEST_CASE("canonicalize_pure reaches the canonical state") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PureState psi = random_pure(2, seed);
    const PureCanonicalization c = canonicalize_pure(psi);
    const RealMatrix o = c.transform;
    CHECK((o.transpose() * o - RealMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-12);
    const ComplexVector moved = o.cast<Complex>() * psi.amplitudes();
    const double overlap = std::abs(c.state.amplitudes().dot(moved));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(imaginarity_parameter(c.state) ==
          doctest::Approx(imaginarity_parameter(psi)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(canonicalize_pure(random_pure(3, 1)), UnsupportedDimension);
}

TEST_CASE("canonical mixed form") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_density(2, 1 + seed % 2, seed);
    const CanonicalQubitForm f = canonicalize_qubit_mixed(rho);
    const DensityMatrix c = conjugate(rho, f.transform);
    CHECK(c.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(c.matrix()(0, 1).real() == doctest::Approx(f.x).epsilon(1e-10));
    CHECK(c.matrix()(0, 1).imag() == doctest::Approx(-f.y).epsilon(1e-10));
    CHECK(f.x >= 0.0);
    CHECK(f.y >= 0.0);
  }
  // Pure states land on x^2 + y^2 = 1/4 with x = A/2.
  const CanonicalQubitForm f =
      canonicalize_qubit_mixed(canonical_pure_state(0.6).density());
  CHECK(f.x == doctest::Approx(0.3));
  CHECK(f.x * f.x + f.y * f.y == doctest::Approx(0.25));

  const DensityMatrix m = canonical_mixed_form_pure(0.2);
  CHECK(m.matrix()(0, 1).real() == doctest::Approx(0.2));
  CHECK(m.matrix()(0, 1).imag() == doctest::Approx(-std::sqrt(0.25 - 0.04)));
  CHECK_THROWS_AS(canonical_mixed_form_pure(0.6), ValidationError);
}

TEST_CASE("direct sum, conjugation, samplers") {
  const DensityMatrix a = random_density(2, 2, 3);
  const DensityMatrix b = random_density(2, 1, 4);
  const DensityMatrix s = direct_sum(0.25, a, b);
  CHECK(s.dim() == 4);
  CHECK(s.matrix().trace().real() == doctest::Approx(1.0));
  CHECK(std::abs(s.matrix()(0, 3)) == 0.0);
  CHECK_THROWS_AS(direct_sum(0.0, a, b), ValidationError);
  CHECK_THROWS_AS(direct_sum(1.0, a, b), ValidationError);

  CHECK(is_real_state(random_real_density(3, 9)));
  CHECK_FALSE(is_real_state(canonical_pure_state(0.5).density()));
  CHECK(max_abs(random_density(3, 2, 5).matrix() - random_density(3, 2, 5).matrix()) == 0.0);
  CHECK_THROWS_AS(random_density(2, 3, 1), ValidationError);

  const RealMatrix o = random_orthogonal(4, 2);
  CHECK((o * o.transpose() - RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
}
