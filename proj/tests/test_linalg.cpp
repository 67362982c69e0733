#include <doctest.h>

#include <random>

#include "imag/error.hpp"
#include "imag/linalg.hpp"

using namespace imag;

namespace {

ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return hermitian_part(m);
}

}  // namespace

TEST_CASE("jacobi reconstructs and orders eigenvalues") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const ComplexMatrix m = random_hermitian(n, rng);
    const HermitianEig e = hermitian_eig(m);
    const ComplexMatrix back = e.eigenvectors *
                               e.eigenvalues.cast<Complex>().asDiagonal() *
                               e.eigenvectors.adjoint();
    CHECK(max_abs(back - m) <= 1e-10);
    CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors -
                  ComplexMatrix::Identity(n, n)) <= 1e-10);
    for (int k = 1; k < n; ++k) CHECK(e.eigenvalues(k - 1) <= e.eigenvalues(k));

    // Eigen as an independent oracle.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref{Eigen::MatrixXcd(m)};
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(ref.eigenvalues()(k) - e.eigenvalues(k)) <= 1e-10);
    }
  }
}

TEST_CASE("jacobi handles diagonal and degenerate input") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 3.0;
  const HermitianEig e = hermitian_eig(d);
  CHECK(e.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(e.eigenvalues(2) == doctest::Approx(3.0));

  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  CHECK(max_abs(hermitian_eig(id).eigenvectors.adjoint() *
                    hermitian_eig(id).eigenvectors -
                id) <= 1e-14);
}

TEST_CASE("jacobi rejects bad input") {
  ComplexMatrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(hermitian_eig(rect), ValidationError);
  ComplexMatrix nh(2, 2);
  nh << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(hermitian_eig(nh), ValidationError);
}

TEST_CASE("support pseudo-power") {
  ComplexMatrix p(2, 2);
  p << 1.0, 0.0, 0.0, 0.0;
  // Negative powers act on the support only.
  CHECK(max_abs(matrix_power(p, -0.5) - p) <= 1e-14);

  ComplexMatrix m(2, 2);
  m << 2.0, 1.0, 1.0, 2.0;  // eigenvalues 1, 3
  const ComplexMatrix half = matrix_power(m, 0.5);
  CHECK(max_abs(half * half - m) <= 1e-12);
  const ComplexMatrix inv = matrix_power(m, -1.0);
  CHECK(max_abs(inv * m - ComplexMatrix::Identity(2, 2)) <= 1e-12);

  ComplexMatrix tiny_neg(2, 2);
  tiny_neg << 1.0, 0.0, 0.0, -1e-12;
  CHECK(max_abs(matrix_power(tiny_neg, 0.5) - p) <= 1e-14);

  ComplexMatrix neg(2, 2);
  neg << 1.0, 0.0, 0.0, -0.1;
  CHECK_THROWS_AS(matrix_power(neg, 0.5), ValidationError);
}

TEST_CASE("hermiticity helpers and trace product") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1.0, Complex(0, 1), Complex(0, -1), 2.0;
  b << 0.5, 1.0, 2.0, Complex(0, 3);
  CHECK(is_hermitian(a));
  CHECK_FALSE(is_hermitian(b));
  CHECK(hermiticity_defect(a) == 0.0);
  CHECK(std::abs(trace_product(a, b) - (a * b).trace()) <= 1e-14);
  ComplexMatrix c(3, 3);
  c.setZero();
  CHECK_THROWS_AS(trace_product(a, c), ValidationError);
}
