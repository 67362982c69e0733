#pragma once

#include <cstdint>

#include "imag/linalg.hpp"

namespace imag {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNormTol = 1e-12;
/// Default tolerance for "all entries real" tests on states and channels.
inline constexpr double kRealTol = 1e-9;

/// A validated density operator: Hermitian, unit trace, positive
/// semidefinite.
class DensityMatrix {
 public:
  /// Validates all three invariants; throws ValidationError naming the
  /// first one that fails. The stored matrix is the Hermitian part of `m`.
  explicit DensityMatrix(const ComplexMatrix& m);

  /// Skips validation. Only for matrices that are density operators by
  /// construction (e.g. L L^T / tr(L L^T)).
  static DensityMatrix from_trusted(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  struct Trusted {};
  DensityMatrix(const ComplexMatrix& m, Trusted) : mat_(m) {}

  ComplexMatrix mat_;
};

class PureState {
 public:
  /// Throws ValidationError unless sum |amp|^2 = 1 within kNormTol.
  explicit PureState(const ComplexVector& amps);

  const ComplexVector& amplitudes() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }

  ComplexMatrix projector() const;
  DensityMatrix density() const;

 private:
  ComplexVector amps_;
};

/// O rho O^T = [[1/2, x - iy], [x + iy, 1/2]] with x, y >= 0.
struct CanonicalQubitForm {
  double x = 0.0;
  double y = 0.0;
  RealMatrix transform;
};

struct PureCanonicalization {
  RealMatrix transform;  // real orthogonal O
  PureState state;       // sqrt((1+A)/2)|0> + i sqrt((1-A)/2)|1>
};

/// All entries of rho have |Im| <= tol.
bool is_real_state(const DensityMatrix& rho, double tol = kRealTol);

/// A = |sum_j psi_j^2| = |<psi*|psi>|.
double imaginarity_parameter(const PureState& psi);

/// sqrt((1+A)/2)|0> + i sqrt((1-A)/2)|1>. Throws unless A in [0, 1].
PureState canonical_pure_state(double A);

/// Qubit pure state with diagonal 1/2 and off-diagonal x - iy, where
/// y = sqrt(1/4 - x^2). Throws unless x in [0, 1/2].
DensityMatrix canonical_mixed_form_pure(double x);

/// Real orthogonal O with O|psi> equal to canonical_pure_state(A) up to a
/// global phase. Qubits only.
PureCanonicalization canonicalize_pure(const PureState& psi);

/// Bloch-rotation construction of the diagonal-1/2 canonical form.
/// Qubits only.
CanonicalQubitForm canonicalize_qubit_mixed(const DensityMatrix& rho);

/// p rho1 (+) (1-p) rho2, block diagonal. Throws unless p in (0, 1).
DensityMatrix direct_sum(double p, const DensityMatrix& rho1,
                         const DensityMatrix& rho2);

/// O rho O^T for real orthogonal O.
DensityMatrix conjugate(const DensityMatrix& rho, const RealMatrix& o);

// Seeded samplers. Same seed, same output.
PureState random_pure(int dim, std::uint64_t seed);
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);
DensityMatrix random_real_density(int dim, std::uint64_t seed);
/// Haar-distributed real orthogonal matrix (QR of a real Gaussian matrix
/// with the sign of R's diagonal fixed).
RealMatrix random_orthogonal(int dim, std::uint64_t seed);

}  // namespace imag
