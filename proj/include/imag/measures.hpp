#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "imag/divergences.hpp"
#include "imag/optimizer.hpp"
#include "imag/states.hpp"

namespace imag {

struct MeasureKind {
  Family family;
  Alpha alpha;
};

enum class Method { Definitional, PureRestricted, ClosedForm, GridOracle };

/// "definitional", "pure-restricted", "closed-form", "grid-oracle"
std::string_view to_string(Method method);
Method parse_method(std::string_view text);

struct MeasureResult {
  double value = 0.0;
  Method method = Method::Definitional;
  std::optional<DensityMatrix> optimal_sigma;
  double kernel_value = 0.0;
};

/// Values below this are an error; values in [-tol, 0) clamp to 0.
inline constexpr double kMeasureNegativeTol = 1e-9;

/// T: 1 - k^(1/a).  S: (k^(1/(1-a)) - 1)/(a - 1).  O: (k^(1/a) - 1)/(a - 1).
double kernel_to_measure(const MeasureKind& kind, double kernel_value);

/// Minimum of the divergence over all real states, via kernel maximization.
MeasureResult measure_definitional(const DensityMatrix& rho,
                                   const MeasureKind& kind,
                                   const OptConfig& cfg);

/// Same transform, kernel maximized over pure real states only.
MeasureResult measure_pure_restricted(const DensityMatrix& rho,
                                      const MeasureKind& kind,
                                      const OptConfig& cfg);

/// Brute-force scan over every real qubit state. Qubits only.
MeasureResult measure_grid_oracle(const DensityMatrix& rho,
                                  const MeasureKind& kind,
                                  int resolution = 256);

MeasureResult measure(const DensityMatrix& rho, const MeasureKind& kind,
                      Method method, const OptConfig& cfg);

/// Pure-qubit closed forms in W = (1 + A)/2:
/// T: 1 - W^(1/a).  S: (W^(a/(1-a)) - 1)/(a - 1).  O: (W^((1-a)/a) - 1)/(a - 1).
double closed_form_pure(double A, const MeasureKind& kind);

/// Same expressions with W = x + 1/2, x the canonical off-diagonal real part.
double closed_form_canonical_x(double x, const MeasureKind& kind);

/// Measure of the bit-flip image of the canonical pure state (x, y).
/// X11 = sqrt((1-2m)^2 y^2 + x^2) and W = (1 + x/X11)/2, with
/// T: 1 - W^(1/a), S: (W^(a/(1-a)) - 1)/(a - 1), O: (W^((1-a)/a) - 1)/(a - 1).
/// Requires x, y >= 0 and x^2 + y^2 = 1/4 within 1e-9.
double closed_form_after_bitflip(double x, double y, double m,
                                 const MeasureKind& kind);

/// closed_form_after_bitflip without the x^2 + y^2 = 1/4 constraint, for
/// partial derivatives in x at fixed y. Requires x, y >= 0, not both 0
/// unless m = 1/2.
double closed_form_after_bitflip_unconstrained(double x, double y, double m,
                                               const MeasureKind& kind);

/// The operator-family expression in the literature form
///   -2^(-1/a) [X11 (2^(1/a) + 2 (x/X11 + 1)^(1/a)) - 2^(1/a) x]
///     / ((a - 1)(X11 + x)).
/// Kept for comparison only: it does not vanish on real states.
double closed_form_after_bitflip_printed_operator(double x, double y, double m,
                                                  Alpha alpha);

struct InequalityGaps {
  double delta1 = 0.0;  // S - O
  double delta2 = 0.0;  // O - T
};

InequalityGaps inequality_gaps(double A, Alpha alpha);

/// Side-by-side values for the canonical pure state of parameter A.
struct DiscrepancyRow {
  double A = 0.0;
  MeasureKind kind;
  double definitional = 0.0;
  double pure_restricted = 0.0;
  double closed_form = 0.0;
  double definitional_minus_closed = 0.0;
  double pure_minus_closed = 0.0;
};

DiscrepancyRow discrepancy_report(double A, const MeasureKind& kind,
                                  const OptConfig& cfg);

}  // namespace imag
