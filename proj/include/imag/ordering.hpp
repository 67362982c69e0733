#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imag/measures.hpp"

namespace imag {

/// Differences at or below this count as ties, compatible with either order.
inline constexpr double kOrderTieTol = 1e-9;

struct OrderViolation {
  std::string label;             // which pair of measures / which check
  std::vector<double> state1;    // coordinates of the first state
  std::vector<double> state2;
  double a1 = 0.0, a2 = 0.0;     // first measure (or value before)
  double b1 = 0.0, b2 = 0.0;     // second measure (or value after)
};

struct OrderReport {
  std::string proposition;
  long long pairs_tested = 0;
  std::vector<OrderViolation> violations;
  std::uint64_t seed = 0;

  bool holds() const { return violations.empty(); }
};

/// Biconditional sign test over every pair (i, j). Coordinates in the report
/// are the indices. Throws ValidationError on length mismatch or fewer than
/// one value (a single value is vacuously ordered).
OrderReport same_order(const std::vector<double>& values_a,
                       const std::vector<double>& values_b,
                       double tol = kOrderTieTol);

/// T, S and O closed forms in x ordered alike over `x_grid`.
OrderReport check_proposition3(const std::vector<double>& x_grid, Alpha alpha,
                               double tol = kOrderTieTol);

/// For each family, the order of n seeded canonical pure states (x uniform in
/// [0, 1/2]) is unchanged by the bit-flip channel with parameter m.
OrderReport check_proposition4(int n_samples, double m, Alpha alpha,
                               std::uint64_t seed, double tol = kOrderTieTol);

/// Literature derivatives in x.
double printed_derivative_canonical_x(double x, const MeasureKind& kind);
/// Partial derivative in x at fixed y of the bit-flip image.
double printed_derivative_after_bitflip(double x, double y, double m,
                                        const MeasureKind& kind);

inline constexpr double kMonotoneTol = 1e-9;
inline constexpr double kDerivativeRelTol = 1e-4;

struct DerivativeSample {
  double x = 0.0;
  std::optional<double> m;       // empty: before the channel
  double finite_difference = 0.0;  // at fixed y for the bit-flip rows
  double analytic = 0.0;
  double relative_error = 0.0;
  /// Along y = sqrt(1/4 - x^2); equals finite_difference before the channel.
  double constrained_difference = 0.0;
  bool ok = true;
};

struct MonotonicityReport {
  MeasureKind kind;
  std::vector<DerivativeSample> samples;
  bool holds() const;
};

/// Finite differences of the x closed form and of the bit-flip form for each
/// m in `ms` at every point of `grid` (in [0, 1/2)). Central differences with
/// step h, one-sided where the stencil would leave [0, 1/2].
MonotonicityReport monotonicity_check(const MeasureKind& kind,
                                      const std::vector<double>& grid,
                                      double h = 1e-6,
                                      const std::vector<double>& ms = {0.1, 0.3,
                                                                       0.7});

/// n points strictly inside (0, 1/2): 0.5 i / (n + 1).
std::vector<double> interior_x_grid(int n);

}  // namespace imag
