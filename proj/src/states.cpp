#include "imag/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

void require_qubit(int dim, const char* where) {
  if (dim != 2) {
    std::ostringstream msg;
    msg << where << ": only qubits are supported (dim " << dim << ")";
    throw UnsupportedDimension(msg.str());
  }
}

void require_dim(int dim, const char* where) {
  if (dim < 2 || dim > kMaxDim) {
    std::ostringstream msg;
    msg << where << ": dim must be in [2, " << kMaxDim << "], got " << dim;
    throw ValidationError(msg.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > kMaxDim) {
    throw ValidationError("DensityMatrix: matrix must be square, dim in [1, 16]");
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not Hermitian (max |M - M^dagger| = " << defect
        << ")";
    throw ValidationError(msg.str());
  }
  mat_ = hermitian_part(m);
  const double trace = mat_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: trace is " << trace << ", expected 1";
    throw ValidationError(msg.str());
  }
  const double min_eig = hermitian_eig(mat_).eigenvalues(0);
  if (min_eig < -kNegativeEigTol) {
    std::ostringstream msg;
    msg << "DensityMatrix: not positive semidefinite (min eigenvalue "
        << min_eig << ")";
    throw ValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::from_trusted(const ComplexMatrix& m) {
  return DensityMatrix(m, Trusted{});
}

PureState::PureState(const ComplexVector& amps) : amps_(amps) {
  if (amps.size() < 1 || amps.size() > kMaxDim) {
    throw ValidationError("PureState: dim must be in [1, 16]");
  }
  const double norm2 = amps.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "PureState: squared norm is " << norm2 << ", expected 1";
    throw ValidationError(msg.str());
  }
}

ComplexMatrix PureState::projector() const { return amps_ * amps_.adjoint(); }

DensityMatrix PureState::density() const {
  return DensityMatrix::from_trusted(projector());
}

bool is_real_state(const DensityMatrix& rho, double tol) {
  return rho.matrix().imag().cwiseAbs().maxCoeff() <= tol;
}

double imaginarity_parameter(const PureState& psi) {
  const Complex s = (psi.amplitudes().array() * psi.amplitudes().array()).sum();
  return std::min(1.0, std::abs(s));
}

PureState canonical_pure_state(double A) {
  if (!(A >= 0.0 && A <= 1.0)) {
    std::ostringstream msg;
    msg << "canonical_pure_state: A must be in [0, 1], got " << A;
    throw ValidationError(msg.str());
  }
  ComplexVector amps(2);
  amps << std::sqrt((1.0 + A) / 2.0), Complex(0.0, std::sqrt((1.0 - A) / 2.0));
  return PureState(amps);
}

DensityMatrix canonical_mixed_form_pure(double x) {
  if (!(x >= 0.0 && x <= 0.5)) {
    std::ostringstream msg;
    msg << "canonical_mixed_form_pure: x must be in [0, 1/2], got " << x;
    throw ValidationError(msg.str());
  }
  const double y = std::sqrt(std::max(0.0, 0.25 - x * x));
  ComplexMatrix m(2, 2);
  m << 0.5, Complex(x, -y), Complex(x, y), 0.5;
  return DensityMatrix(m);
}

PureCanonicalization canonicalize_pure(const PureState& psi) {
  require_qubit(psi.dim(), "canonicalize_pure");
  const Complex s = (psi.amplitudes().array() * psi.amplitudes().array()).sum();
  const double A = std::min(1.0, std::abs(s));
  // Degenerate A = 0 has no defined argument; phase 0 keeps it deterministic.
  const double phase = A > 1e-14 ? std::arg(s) / 2.0 : 0.0;
  const ComplexVector rotated = psi.amplitudes() * std::polar(1.0, -phase);

  // rotated = u + i v with u.v = 0, |u|^2 = (1+A)/2, |v|^2 = (1-A)/2
  const RealVector u = rotated.real();
  const RealVector v = rotated.imag();
  const double un = u.norm();

  RealMatrix rot(2, 2);
  rot << u(0) / un, u(1) / un, -u(1) / un, u(0) / un;
  const RealVector w = rot * v;
  RealMatrix o = rot;
  if (w(1) < 0.0) o.row(1) *= -1.0;

  return PureCanonicalization{o, canonical_pure_state(A)};
}

CanonicalQubitForm canonicalize_qubit_mixed(const DensityMatrix& rho) {
  require_qubit(rho.dim(), "canonicalize_qubit_mixed");
  const ComplexMatrix& m = rho.matrix();
  const double rx = 2.0 * m(0, 1).real();
  const double ry = -2.0 * m(0, 1).imag();
  const double rz = m(0, 0).real() - m(1, 1).real();

  // Conjugating by R(theta) rotates (r_z, r_x) by 2 theta and leaves r_y;
  // diag(1, -1) flips both r_x and r_y.
  const double beta = std::atan2(rx, rz);
  const double target = ry >= 0.0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
  const double theta = (target - beta) / 2.0;
  RealMatrix o(2, 2);
  o << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  if (ry < 0.0) o.row(1) *= -1.0;

  const ComplexMatrix c = o.cast<Complex>() * m * o.transpose().cast<Complex>();
  CanonicalQubitForm out;
  out.x = std::max(0.0, c(0, 1).real());
  out.y = std::max(0.0, -c(0, 1).imag());
  out.transform = o;
  return out;
}

DensityMatrix direct_sum(double p, const DensityMatrix& rho1,
                         const DensityMatrix& rho2) {
  if (!(p > 0.0 && p < 1.0)) {
    std::ostringstream msg;
    msg << "direct_sum: p must be in (0, 1), got " << p;
    throw ValidationError(msg.str());
  }
  const int d1 = rho1.dim();
  const int d2 = rho2.dim();
  if (d1 + d2 > kMaxDim) throw ValidationError("direct_sum: result too large");
  ComplexMatrix m = ComplexMatrix::Zero(d1 + d2, d1 + d2);
  m.topLeftCorner(d1, d1) = p * rho1.matrix();
  m.bottomRightCorner(d2, d2) = (1.0 - p) * rho2.matrix();
  return DensityMatrix(m);
}

DensityMatrix conjugate(const DensityMatrix& rho, const RealMatrix& o) {
  if (o.rows() != rho.dim() || o.cols() != rho.dim()) {
    throw ValidationError("conjugate: dimension mismatch");
  }
  const ComplexMatrix oc = o.cast<Complex>();
  return DensityMatrix(hermitian_part(oc * rho.matrix() * oc.transpose()));
}

PureState random_pure(int dim, std::uint64_t seed) {
  require_dim(dim, "random_pure");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexVector amps(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    amps(i) = Complex(re, im);
  }
  amps /= amps.norm();
  return PureState(amps);
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  require_dim(dim, "random_density");
  if (rank < 1 || rank > dim) {
    std::ostringstream msg;
    msg << "random_density: rank must be in [1, " << dim << "], got " << rank;
    throw ValidationError(msg.str());
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ComplexMatrix g(dim, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(hermitian_part(m));
}

DensityMatrix random_real_density(int dim, std::uint64_t seed) {
  require_dim(dim, "random_real_density");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  RealMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = normal(rng);
  }
  RealMatrix m = g * g.transpose();
  m /= m.trace();
  return DensityMatrix(m.cast<Complex>());
}

RealMatrix random_orthogonal(int dim, std::uint64_t seed) {
  require_dim(dim, "random_orthogonal");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  RealMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  }
  return q;
}

}  // namespace imag
