#pragma once

#include <string_view>

#include "imag/linalg.hpp"
#include "imag/states.hpp"

namespace imag {

/// Order parameter restricted to [1/2, 1).
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const { return value_; }

 private:
  double value_;
};

/// Which trace kernel / imaginarity measure.
enum class Family {
  Tsallis,     // tr(rho^a sigma^(1-a))
  Sandwiched,  // tr[(rho^((1-a)/2a) sigma rho^((1-a)/2a))^a]
  Operator,    // tr[rho^(1/2) (rho^(-1/2) sigma rho^(-1/2))^(1-a) rho^(1/2)]
};

/// "T", "S", "O"
std::string_view to_string(Family family);
/// Accepts "T"/"S"/"O" (case-insensitive); throws ValidationError otherwise.
Family parse_family(std::string_view text);

/// Kernels take their real part after checking |Im| <= 1e-9 * max(1, |Re|).
inline constexpr double kKernelImagTol = 1e-9;

double tsallis_kernel(const DensityMatrix& rho, const DensityMatrix& sigma,
                      Alpha alpha);
double sandwiched_kernel(const DensityMatrix& rho, const DensityMatrix& sigma,
                         Alpha alpha);
double operator_kernel(const DensityMatrix& rho, const DensityMatrix& sigma,
                       Alpha alpha);
double kernel(Family family, const DensityMatrix& rho,
              const DensityMatrix& sigma, Alpha alpha);

/// D_a(rho||sigma) = (1 - tr(rho^a sigma^(1-a))) / (1 - a)
double tsallis_relative_entropy(const DensityMatrix& rho,
                                const DensityMatrix& sigma, Alpha alpha);

/// F_a(sigma||rho) = ln sandwiched_kernel(rho, sigma) / (a - 1); +infinity
/// when the kernel vanishes.
double sandwiched_renyi(const DensityMatrix& sigma, const DensityMatrix& rho,
                        Alpha alpha);

/// tr T_a(rho||sigma) = (operator_kernel - 1) / (a - 1)
double tsallis_operator_entropy_trace(const DensityMatrix& rho,
                                      const DensityMatrix& sigma, Alpha alpha);

/// A kernel with every rho-dependent matrix power computed once, for
/// repeated evaluation against many sigma.
class KernelEvaluator {
 public:
  KernelEvaluator(Family family, const DensityMatrix& rho, Alpha alpha);

  double operator()(const DensityMatrix& sigma) const;

  Family family() const { return family_; }
  Alpha alpha() const { return alpha_; }
  int dim() const { return static_cast<int>(rho_.rows()); }

 private:
  Family family_;
  Alpha alpha_;
  ComplexMatrix rho_;
  ComplexMatrix weight_;  // Tsallis: rho^a.  Operator: rho.
  ComplexMatrix sandwich_;  // Sandwiched: rho^((1-a)/2a).  Operator: rho^(-1/2).
};

}  // namespace imag
