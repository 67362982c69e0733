#include "imag/decay.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

double checked_sqrt(double arg, const char* what, ChannelKind channel,
                    double A, double param) {
  if (arg < -kSqrtClampTol || !std::isfinite(arg)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": negative square-root argument " << arg << " (channel "
        << to_string(channel) << ", A = " << A << ", " << parameter_name(channel)
        << " = " << param << ")";
    throw NumericalError(msg.str());
  }
  return arg <= 0.0 ? 0.0 : std::sqrt(arg);
}

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << "decay: " << name << " must be in [0, 1], got " << v;
    throw ValidationError(msg.str());
  }
}

void put(std::ostream& out, double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  out << s.str();
}

}  // namespace

STCoefficients st_coefficients(ChannelKind channel, double A, double param) {
  require_unit(A, "A");
  require_unit(param, "channel parameter");
  const double A2 = A * A;
  switch (channel) {
    case ChannelKind::BitFlip: {
      const double m = param;
      const double c = 1.0 - 2.0 * m;
      const double s = A2 * c * c - 2.0 * (m - 1.0) * m;
      const double t = A * c *
                       checked_sqrt(A2 * c * c - 4.0 * (m - 1.0) * m,
                                    "st_coefficients", channel, A, param);
      return {s, t};
    }
    case ChannelKind::PhaseDamping: {
      const double n = param;
      const double s = n - A2 * (n - 2.0);
      const double t = 2.0 * checked_sqrt(-A2 * A2 * n + A2 * n + A2 * A2,
                                          "st_coefficients", channel, A, param);
      return {s, t};
    }
    case ChannelKind::AmplitudeDamping: {
      const double p = param;
      const double s = A2 * (p - 2.0) * (p - 1.0) - 2.0 * A * (p - 1.0) * p +
                       p * p + p;
      const double u = -A * p + A + p;
      const double t = 2.0 * checked_sqrt((p - A2 * (p - 1.0)) * u * u,
                                          "st_coefficients", channel, A, param);
      return {s, t};
    }
  }
  throw ValidationError("st_coefficients: unknown channel");
}

double decay_formula_alpha34(ChannelKind channel, double A, double param,
                             Family family) {
  const STCoefficients st = st_coefficients(channel, A, param);
  const double r1 = checked_sqrt(st.s - st.t, "decay_formula_alpha34", channel,
                                 A, param);
  const double r2 = checked_sqrt(st.s + st.t, "decay_formula_alpha34", channel,
                                 A, param);
  const double sq2 = std::sqrt(2.0);
  const double A1 = A + 1.0;
  const auto p = [](double b, double e) { return std::pow(b, e); };

  switch (channel) {
    case ChannelKind::BitFlip:
      switch (family) {
        case Family::Tsallis:
          return 0.25 * (p(2.0, 2.0 / 3.0) * p((r1 + r2) / sq2 + 1.0, 4.0 / 3.0) -
                         p(2.0, 2.0 / 3.0) * p(A1, 4.0 / 3.0));
        case Family::Sandwiched:
          return 0.5 * p((r1 + r2) / sq2 + 1.0, 3.0) - 0.5 * p(A1, 3.0);
        case Family::Operator:
          return p(2.0, 4.0 / 3.0) * std::cbrt(sq2 * r1 + sq2 * r2 + 2.0) -
                 p(2.0, 5.0 / 3.0) * std::cbrt(A1);
      }
      break;
    case ChannelKind::PhaseDamping:
      switch (family) {
        case Family::Tsallis:
          return 0.125 * (p(2.0, 1.0 / 3.0) * p(r1 + r2 + 2.0, 4.0 / 3.0) -
                          p(2.0, 5.0 / 3.0) * p(A1, 4.0 / 3.0));
        case Family::Sandwiched:
          return p(r1 + r2 + 2.0, 3.0) / 16.0 - 0.5 * p(A1, 3.0);
        case Family::Operator:
          return p(2.0, 4.0 / 3.0) * std::cbrt(r1 + r2 + 2.0) -
                 p(2.0, 5.0 / 3.0) * std::cbrt(A1);
      }
      break;
    case ChannelKind::AmplitudeDamping:
      switch (family) {
        case Family::Tsallis:
          return (p(r1 + r2 + 2.0, 4.0 / 3.0) -
                  2.0 * p(2.0, 1.0 / 3.0) * p(A1, 4.0 / 3.0)) /
                 p(2.0, 8.0 / 3.0);
        case Family::Sandwiched:
          return p(r1 + r2 + 2.0, 3.0) / 16.0 - 0.5 * p(A1, 3.0);
        case Family::Operator:
          return p(2.0, 4.0 / 3.0) * std::cbrt(r1 + r2 + 2.0) -
                 p(2.0, 5.0 / 3.0) * std::cbrt(A1);
      }
      break;
  }
  throw ValidationError("decay_formula_alpha34: unknown channel or family");
}

DecayPoint decay_definitional(double A, ChannelKind channel, double param,
                              const MeasureKind& kind, const OptConfig& cfg,
                              DecayColumns columns) {
  DecayPoint pt;
  pt.A = A;
  pt.channel_param = param;
  pt.channel_kind = channel;
  pt.measure_kind = kind;
  const DensityMatrix before = canonical_pure_state(A).density();
  const DensityMatrix after = channel_transformed_state(channel, A, param);
  if (columns.definitional) {
    pt.delta_definitional = measure_definitional(before, kind, cfg).value -
                            measure_definitional(after, kind, cfg).value;
  }
  if (columns.pure_restricted) {
    pt.delta_pure_restricted =
        measure_pure_restricted(before, kind, cfg).value -
        measure_pure_restricted(after, kind, cfg).value;
  }
  if (kind.alpha.value() == 0.75) {
    pt.delta_formula = decay_formula_alpha34(channel, A, param, kind.family);
  }
  return pt;
}

std::vector<DecayPoint> sweep(ChannelKind channel, const MeasureKind& kind,
                              const std::vector<double>& A_grid,
                              const std::vector<double>& param_grid,
                              const OptConfig& cfg, DecayColumns columns) {
  if (A_grid.empty() || param_grid.empty()) {
    throw ValidationError("sweep: grids must be nonempty");
  }
  std::vector<DecayPoint> out;
  out.reserve(A_grid.size() * param_grid.size());
  for (double A : A_grid) {
    for (double q : param_grid) {
      try {
        out.push_back(decay_definitional(A, channel, q, kind, cfg, columns));
      } catch (const Error& e) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "sweep failed at A = " << A << ", " << parameter_name(channel)
            << " = " << q << ": " << e.what();
        throw NumericalError(msg.str());
      }
    }
  }
  return out;
}

std::vector<double> uniform_grid(int n) {
  if (n < 1) throw ValidationError("uniform_grid: need at least one point");
  std::vector<double> g(n, 0.0);
  for (int i = 1; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
  return g;
}

void write_decay_csv(std::ostream& out, const std::vector<DecayPoint>& points,
                     DecayColumns columns) {
  out << "channel,measure,alpha,A,param,delta_formula,delta_pure_restricted,"
         "delta_definitional\n";
  for (const auto& pt : points) {
    out << to_string(pt.channel_kind) << ',' << to_string(pt.measure_kind.family)
        << ',';
    put(out, pt.measure_kind.alpha.value());
    out << ',';
    put(out, pt.A);
    out << ',';
    put(out, pt.channel_param);
    out << ',';
    if (pt.delta_formula) put(out, *pt.delta_formula);
    out << ',';
    if (columns.pure_restricted) put(out, pt.delta_pure_restricted);
    out << ',';
    if (columns.definitional) put(out, pt.delta_definitional);
    out << '\n';
  }
}

}  // namespace imag
