#include "imag/measures.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

constexpr double kConstraintTol = 1e-9;

void require_range(double v, double lo, double hi, const char* name,
                   const char* where) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream msg;
    msg << where << ": " << name << " must be in [" << lo << ", " << hi
        << "], got " << v;
    throw ValidationError(msg.str());
  }
}

// The three transforms written in terms of W, where the kernel is a power
// of W for the canonical qubit states.
double closed_form_in_w(double w, const MeasureKind& kind) {
  const double a = kind.alpha.value();
  switch (kind.family) {
    case Family::Tsallis: return 1.0 - std::pow(w, 1.0 / a);
    case Family::Sandwiched:
      return (std::pow(w, a / (1.0 - a)) - 1.0) / (a - 1.0);
    case Family::Operator:
      return (std::pow(w, (1.0 - a) / a) - 1.0) / (a - 1.0);
  }
  throw ValidationError("closed form: unknown family");
}

double clamp_measure(double value, const char* where) {
  if (!std::isfinite(value) || value < -kMeasureNegativeTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << where << ": measure value " << value << " is below -"
        << kMeasureNegativeTol;
    throw NumericalError(msg.str());
  }
  return value < 0.0 ? 0.0 : value;
}

MeasureResult finish(const MeasureKind& kind, Method method, OptResult opt,
                     const char* where) {
  MeasureResult r;
  r.method = method;
  r.kernel_value = opt.value;
  r.value = clamp_measure(kernel_to_measure(kind, opt.value), where);
  r.optimal_sigma = std::move(opt.sigma);
  return r;
}

double x_over_x11(double x, double y, double m, bool constrained) {
  const double hi = constrained ? 0.5 : std::numeric_limits<double>::max();
  require_range(x, 0.0, hi, "x", "closed_form_after_bitflip");
  require_range(y, 0.0, hi, "y", "closed_form_after_bitflip");
  require_range(m, 0.0, 1.0, "m", "closed_form_after_bitflip");
  if (constrained && std::abs(x * x + y * y - 0.25) > kConstraintTol) {
    std::ostringstream msg;
    msg << "closed_form_after_bitflip: x^2 + y^2 = " << x * x + y * y
        << ", expected 1/4";
    throw ValidationError(msg.str());
  }
  const double c = 1.0 - 2.0 * m;
  const double x11 = std::sqrt(c * c * y * y + x * x);
  // x = 0 and m = 1/2 together leave the maximally mixed state.
  if (x11 == 0.0) return 1.0;
  return x / x11;
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Definitional: return "definitional";
    case Method::PureRestricted: return "pure-restricted";
    case Method::ClosedForm: return "closed-form";
    case Method::GridOracle: return "grid-oracle";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::Definitional, Method::PureRestricted,
                   Method::ClosedForm, Method::GridOracle}) {
    if (text == to_string(m)) return m;
  }
  throw ValidationError("unknown method '" + std::string(text) + "'");
}

double kernel_to_measure(const MeasureKind& kind, double k) {
  const double a = kind.alpha.value();
  if (k < 0.0) k = 0.0;
  switch (kind.family) {
    case Family::Tsallis: return 1.0 - std::pow(k, 1.0 / a);
    case Family::Sandwiched:
      return (std::pow(k, 1.0 / (1.0 - a)) - 1.0) / (a - 1.0);
    case Family::Operator: return (std::pow(k, 1.0 / a) - 1.0) / (a - 1.0);
  }
  throw ValidationError("kernel_to_measure: unknown family");
}

MeasureResult measure_definitional(const DensityMatrix& rho,
                                   const MeasureKind& kind,
                                   const OptConfig& cfg) {
  const KernelEvaluator k(kind.family, rho, kind.alpha);
  // The real part of rho is itself a free state and a natural start.
  const RealMatrix hint = rho.matrix().real();
  return finish(kind, Method::Definitional,
                maximize_over_real_states(std::cref(k), rho.dim(), cfg,
                                          std::span(&hint, 1)),
                "measure_definitional");
}

MeasureResult measure_pure_restricted(const DensityMatrix& rho,
                                      const MeasureKind& kind,
                                      const OptConfig& cfg) {
  const KernelEvaluator k(kind.family, rho, kind.alpha);
  const RealMatrix re = rho.matrix().real();
  const HermitianEig eig = hermitian_eig(re.cast<Complex>());
  const RealVector top = eig.eigenvectors.col(rho.dim() - 1).real();
  std::vector<RealVector> hints;
  if (top.squaredNorm() > 1e-6) hints.push_back(top);
  return finish(kind, Method::PureRestricted,
                maximize_over_pure_real_states(std::cref(k), rho.dim(), cfg,
                                               hints),
                "measure_pure_restricted");
}

MeasureResult measure_grid_oracle(const DensityMatrix& rho,
                                  const MeasureKind& kind, int resolution) {
  if (rho.dim() != 2) {
    throw UnsupportedDimension("measure_grid_oracle: qubits only");
  }
  const KernelEvaluator k(kind.family, rho, kind.alpha);
  return finish(kind, Method::GridOracle,
                grid_oracle_qubit(std::cref(k), resolution),
                "measure_grid_oracle");
}

MeasureResult measure(const DensityMatrix& rho, const MeasureKind& kind,
                      Method method, const OptConfig& cfg) {
  switch (method) {
    case Method::Definitional: return measure_definitional(rho, kind, cfg);
    case Method::PureRestricted: return measure_pure_restricted(rho, kind, cfg);
    case Method::GridOracle: return measure_grid_oracle(rho, kind);
    case Method::ClosedForm: break;
  }
  throw ValidationError(
      "measure: closed forms take A or x, not a density matrix");
}

double closed_form_pure(double A, const MeasureKind& kind) {
  require_range(A, 0.0, 1.0, "A", "closed_form_pure");
  return closed_form_in_w((1.0 + A) / 2.0, kind);
}

double closed_form_canonical_x(double x, const MeasureKind& kind) {
  require_range(x, 0.0, 0.5, "x", "closed_form_canonical_x");
  return closed_form_in_w(x + 0.5, kind);
}

double closed_form_after_bitflip(double x, double y, double m,
                                 const MeasureKind& kind) {
  const double r = x_over_x11(x, y, m, true);
  return closed_form_in_w((r + 1.0) / 2.0, kind);
}

double closed_form_after_bitflip_unconstrained(double x, double y, double m,
                                               const MeasureKind& kind) {
  const double r = x_over_x11(x, y, m, false);
  return closed_form_in_w((r + 1.0) / 2.0, kind);
}

double closed_form_after_bitflip_printed_operator(double x, double y, double m,
                                                  Alpha alpha) {
  const double r = x_over_x11(x, y, m, true);
  const double a = alpha.value();
  const double c = 1.0 - 2.0 * m;
  const double x11 = std::sqrt(c * c * y * y + x * x);
  const double p = std::pow(2.0, 1.0 / a);
  return -std::pow(2.0, -1.0 / a) *
         (x11 * (p + 2.0 * std::pow(r + 1.0, 1.0 / a)) - p * x) /
         ((a - 1.0) * (x11 + x));
}

InequalityGaps inequality_gaps(double A, Alpha alpha) {
  const double t = closed_form_pure(A, {Family::Tsallis, alpha});
  const double s = closed_form_pure(A, {Family::Sandwiched, alpha});
  const double o = closed_form_pure(A, {Family::Operator, alpha});
  return {s - o, o - t};
}

DiscrepancyRow discrepancy_report(double A, const MeasureKind& kind,
                                  const OptConfig& cfg) {
  const DensityMatrix rho = canonical_pure_state(A).density();
  DiscrepancyRow row{A, kind};
  row.definitional = measure_definitional(rho, kind, cfg).value;
  row.pure_restricted = measure_pure_restricted(rho, kind, cfg).value;
  row.closed_form = closed_form_pure(A, kind);
  row.definitional_minus_closed = row.definitional - row.closed_form;
  row.pure_minus_closed = row.pure_restricted - row.closed_form;
  return row;
}

}  // namespace imag
