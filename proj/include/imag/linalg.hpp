#pragma once

#include <complex>

#include <Eigen/Dense>

namespace imag {

/// Largest supported Hilbert-space dimension. Matrices live on the stack.
inline constexpr int kMaxDim = 16;

using Complex = std::complex<double>;

using ComplexMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                    Eigen::ColMajor, kMaxDim, kMaxDim>;
using ComplexVector =
    Eigen::Matrix<Complex, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using RealMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                 Eigen::ColMajor, kMaxDim, kMaxDim>;
using RealVector =
    Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;

/// Entry-wise Hermiticity tolerance for matrices tagged Hermitian.
inline constexpr double kHermitianTol = 1e-12;
/// Eigenvalues at or below this are outside the support of a PSD matrix.
inline constexpr double kRankTol = 1e-10;
/// Eigenvalues in [-kNegativeEigTol, 0) are round-off and clamp to zero.
inline constexpr double kNegativeEigTol = 1e-10;

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagTol = 1e-13;

/// Spectral decomposition M = V diag(eigenvalues) V^dagger.
struct HermitianEig {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns
};

/// max_{mn} |M_mn|
double max_abs(const ComplexMatrix& m);

/// max_{mn} |M_mn - conj(M_nm)|
double hermiticity_defect(const ComplexMatrix& m);

/// Hermitian within `tol`, scaled by max(1, max_abs(m)).
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);

/// Cyclic complex Jacobi eigensolver.
///
/// Throws ValidationError if `m` is not square or not Hermitian within
/// kHermitianTol (relative to its largest entry), and NumericalError if the
/// off-diagonal mass has not dropped below kJacobiOffDiagTol after
/// kJacobiMaxSweeps sweeps.
HermitianEig hermitian_eig(const ComplexMatrix& m);

/// Support pseudo-power of a PSD Hermitian matrix: eigenvalues above kRankTol
/// are raised to `p`, the rest map to zero. Works for negative `p` on
/// rank-deficient input.
///
/// Eigenvalues below -kNegativeEigTol * max(1, |lambda|_max) are rejected
/// with a ValidationError.
ComplexMatrix matrix_power(const ComplexMatrix& m, double p);
ComplexMatrix matrix_power(const HermitianEig& eig, double p);

/// tr(AB) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// (M + M^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

}  // namespace imag
