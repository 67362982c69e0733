#include "imag/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const auto n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is
// G = diag(1, conj(e)) * [[c, s], [-s, c]] on the (p, q) plane, with
// e = a(p, q) / |a(p, q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = std::conj(apq / mag);

  const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * phase;
  const Complex gqq = c * phase;

  const auto n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_defect(m) <= tol * std::max(1.0, max_abs(m));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError("hermitian_eig: matrix must be square and non-empty");
  }
  if (!is_hermitian(m)) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not Hermitian (defect "
        << hermiticity_defect(m) << ")";
    throw ValidationError(msg.str());
  }

  const auto n = m.rows();
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kJacobiOffDiagTol * scale) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }
  if (!converged) {
    const double residual = off_diagonal_norm(a);
    if (residual > kJacobiOffDiagTol * scale) {
      std::ostringstream msg;
      msg << "hermitian_eig: no convergence after " << kJacobiMaxSweeps
          << " sweeps, off-diagonal residual " << residual;
      throw NumericalError(msg.str());
    }
  }

  std::array<Eigen::Index, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, Eigen::Index{0});
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](Eigen::Index i, Eigen::Index j) {
                     return a(i, i).real() < a(j, j).real();
                   });

  HermitianEig out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

ComplexMatrix matrix_power(const HermitianEig& eig, double p) {
  const auto n = eig.eigenvalues.size();
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  RealVector f(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda < -kNegativeEigTol * scale) {
      std::ostringstream msg;
      msg << "matrix_power: negative eigenvalue " << lambda
          << " (matrix is not positive semidefinite)";
      throw ValidationError(msg.str());
    }
    f(k) = lambda > kRankTol ? std::pow(lambda, p) : 0.0;
  }
  const auto& vecs = eig.eigenvectors;
  return vecs * f.asDiagonal() * vecs.adjoint();
}

ComplexMatrix matrix_power(const ComplexMatrix& m, double p) {
  return matrix_power(hermitian_eig(m), p);
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw ValidationError("trace_product: dimension mismatch");
  }
  // tr(AB) = sum_ij A_ij B_ji
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace imag
