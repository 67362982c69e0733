#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "imag/channels.hpp"
#include "imag/measures.hpp"

namespace imag {

/// Square-root arguments below -kSqrtClampTol are an error; those in
/// [-kSqrtClampTol, 0) clamp to 0.
inline constexpr double kSqrtClampTol = 1e-9;

struct STCoefficients {
  double s = 0.0;
  double t = 0.0;
};

/// BF: s = A^2 (1-2m)^2 - 2(m-1)m,  t = A(1-2m) sqrt(A^2 (1-2m)^2 - 4(m-1)m)
/// PD: s = n - A^2 (n-2),           t = 2 sqrt(-A^4 n + A^2 n + A^4)
/// AD: s = A^2 (p-2)(p-1) - 2A(p-1)p + p^2 + p,
///     t = 2 sqrt((p - A^2 (p-1)) (-A p + A + p)^2)
STCoefficients st_coefficients(ChannelKind channel, double A, double param);

/// Decay M(rho_A) - M(channel(rho_A)) at alpha = 3/4 from the literature
/// expressions in r1 = sqrt(s - t), r2 = sqrt(s + t). `family` picks T, S
/// or O.
double decay_formula_alpha34(ChannelKind channel, double A, double param,
                             Family family);

struct DecayPoint {
  double A = 0.0;
  double channel_param = 0.0;
  ChannelKind channel_kind = ChannelKind::BitFlip;
  MeasureKind measure_kind{Family::Tsallis, Alpha(0.75)};
  std::optional<double> delta_formula;  // only at alpha = 3/4
  double delta_definitional = 0.0;
  double delta_pure_restricted = 0.0;
};

/// Which columns a sweep computes. The formula column is free; the
/// optimizer columns dominate the run time.
struct DecayColumns {
  bool definitional = true;
  bool pure_restricted = true;
};

DecayPoint decay_definitional(double A, ChannelKind channel, double param,
                              const MeasureKind& kind, const OptConfig& cfg,
                              DecayColumns columns = {});

/// Cartesian table, A-major then param. A failing point aborts with its
/// coordinates in the message.
std::vector<DecayPoint> sweep(ChannelKind channel, const MeasureKind& kind,
                              const std::vector<double>& A_grid,
                              const std::vector<double>& param_grid,
                              const OptConfig& cfg, DecayColumns columns = {});

/// n equally spaced points on [0, 1]; n = 1 gives {0}.
std::vector<double> uniform_grid(int n);

/// Header plus one row per point, 17 significant digits. Columns not
/// computed (and the formula away from alpha = 3/4) are left empty.
void write_decay_csv(std::ostream& out, const std::vector<DecayPoint>& points,
                     DecayColumns columns = {});

}  // namespace imag
