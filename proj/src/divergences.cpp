#include "imag/divergences.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const char* where) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream msg;
    msg << where << ": dimension mismatch (" << rho.dim() << " vs "
        << sigma.dim() << ")";
    throw ValidationError(msg.str());
  }
}

// The sandwiched inner matrix squares small eigenvalues of rho, so its
// support cut sits at the round-off floor instead of kRankTol. The inner
// exponent is alpha >= 1/2, so round-off below the cut contributes < 1e-7.
constexpr double kSandwichRankTol = 1e-15;

double powered_eigenvalue(double lambda, double p, double scale,
                          double rank_tol) {
  if (lambda < -kNegativeEigTol * scale) {
    std::ostringstream msg;
    msg << "kernel: negative eigenvalue " << lambda
        << " in a matrix that must be positive semidefinite";
    throw ValidationError(msg.str());
  }
  return lambda > rank_tol * scale ? std::pow(lambda, p) : 0.0;
}

// sum_k f(lambda_k) <v_k| W |v_k>  =  tr(W f(M))  for Hermitian M.
// With W empty this is tr f(M).
Complex weighted_trace_power(const ComplexMatrix& m, double p,
                             const ComplexMatrix* weight,
                             double rank_tol = kRankTol) {
  const HermitianEig eig = hermitian_eig(m);
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  Complex total = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double f = powered_eigenvalue(eig.eigenvalues(k), p, scale, rank_tol);
    if (f == 0.0) continue;
    if (weight == nullptr) {
      total += f;
    } else {
      const auto v = eig.eigenvectors.col(k);
      total += f * v.dot(*weight * v);
    }
  }
  return total;
}

double checked_real(Complex value, const char* where) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    std::ostringstream msg;
    msg << where << ": non-finite kernel value";
    throw NumericalError(msg.str());
  }
  if (std::abs(value.imag()) > kKernelImagTol * std::max(1.0, std::abs(value.real()))) {
    std::ostringstream msg;
    msg << where << ": kernel has imaginary part " << value.imag();
    throw NumericalError(msg.str());
  }
  return value.real();
}

}  // namespace

Alpha::Alpha(double value) : value_(value) {
  if (!(value >= 0.5 && value < 1.0)) {
    std::ostringstream msg;
    msg << "alpha must be in [1/2, 1), got " << value;
    throw ValidationError(msg.str());
  }
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Tsallis: return "T";
    case Family::Sandwiched: return "S";
    case Family::Operator: return "O";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'T': return Family::Tsallis;
      case 'S': return Family::Sandwiched;
      case 'O': return Family::Operator;
      default: break;
    }
  }
  throw ValidationError("unknown measure family '" + std::string(text) +
                        "' (expected T, S or O)");
}

KernelEvaluator::KernelEvaluator(Family family, const DensityMatrix& rho,
                                 Alpha alpha)
    : family_(family), alpha_(alpha), rho_(rho.matrix()) {
  const double a = alpha.value();
  const HermitianEig eig = hermitian_eig(rho_);
  switch (family) {
    case Family::Tsallis:
      weight_ = matrix_power(eig, a);
      break;
    case Family::Sandwiched:
      sandwich_ = matrix_power(eig, (1.0 - a) / (2.0 * a));
      break;
    case Family::Operator:
      weight_ = rho_;
      sandwich_ = matrix_power(eig, -0.5);
      break;
  }
}

double KernelEvaluator::operator()(const DensityMatrix& sigma) const {
  if (sigma.dim() != dim()) {
    throw ValidationError("kernel: dimension mismatch between rho and sigma");
  }
  const double a = alpha_.value();
  switch (family_) {
    case Family::Tsallis:
      return checked_real(
          weighted_trace_power(sigma.matrix(), 1.0 - a, &weight_),
          "tsallis_kernel");
    case Family::Sandwiched: {
      const ComplexMatrix inner =
          hermitian_part(sandwich_ * sigma.matrix() * sandwich_);
      return checked_real(
          weighted_trace_power(inner, a, nullptr, kSandwichRankTol),
                          "sandwiched_kernel");
    }
    case Family::Operator: {
      // tr[rho^(1/2) f(M) rho^(1/2)] = tr[rho f(M)] by cyclicity.
      const ComplexMatrix inner =
          hermitian_part(sandwich_ * sigma.matrix() * sandwich_);
      return checked_real(weighted_trace_power(inner, 1.0 - a, &weight_),
                          "operator_kernel");
    }
  }
  throw ValidationError("kernel: unknown family");
}

double tsallis_kernel(const DensityMatrix& rho, const DensityMatrix& sigma,
                      Alpha alpha) {
  require_same_dim(rho, sigma, "tsallis_kernel");
  return KernelEvaluator(Family::Tsallis, rho, alpha)(sigma);
}

double sandwiched_kernel(const DensityMatrix& rho, const DensityMatrix& sigma,
                         Alpha alpha) {
  require_same_dim(rho, sigma, "sandwiched_kernel");
  return KernelEvaluator(Family::Sandwiched, rho, alpha)(sigma);
}

double operator_kernel(const DensityMatrix& rho, const DensityMatrix& sigma,
                       Alpha alpha) {
  require_same_dim(rho, sigma, "operator_kernel");
  return KernelEvaluator(Family::Operator, rho, alpha)(sigma);
}

double kernel(Family family, const DensityMatrix& rho,
              const DensityMatrix& sigma, Alpha alpha) {
  require_same_dim(rho, sigma, "kernel");
  return KernelEvaluator(family, rho, alpha)(sigma);
}

double tsallis_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma, Alpha alpha) {
  return (1.0 - tsallis_kernel(rho, sigma, alpha)) / (1.0 - alpha.value());
}

double sandwiched_renyi(const DensityMatrix& sigma, const DensityMatrix& rho,
                        Alpha alpha) {
  const double k = sandwiched_kernel(rho, sigma, alpha);
  if (k <= 0.0) return std::numeric_limits<double>::infinity();
  return std::log(k) / (alpha.value() - 1.0);
}

double tsallis_operator_entropy_trace(const DensityMatrix& rho,
                                      const DensityMatrix& sigma, Alpha alpha) {
  return (operator_kernel(rho, sigma, alpha) - 1.0) / (alpha.value() - 1.0);
}

}  // namespace imag
