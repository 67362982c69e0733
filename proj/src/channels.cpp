#include "imag/channels.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

void require_unit_interval(double v, const char* name, const char* where) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << where << ": " << name << " must be in [0, 1], got " << v;
    throw ValidationError(msg.str());
  }
}

std::string label_for(ChannelKind kind, double param) {
  std::ostringstream s;
  s.precision(17);
  s << to_string(kind) << ':' << parameter_name(kind) << '=' << param;
  return s.str();
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bf";
    case ChannelKind::PhaseDamping: return "pd";
    case ChannelKind::AmplitudeDamping: return "ad";
  }
  return "?";
}

std::string_view parameter_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "m";
    case ChannelKind::PhaseDamping: return "n";
    case ChannelKind::AmplitudeDamping: return "p";
  }
  return "?";
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, std::string label)
    : kraus_(std::move(kraus)), label_(std::move(label)) {
  if (kraus_.empty()) throw ValidationError("KrausChannel: empty Kraus list");
  const auto d = kraus_.front().rows();
  for (const auto& k : kraus_) {
    if (k.rows() != d || k.cols() != d || d < 1) {
      throw ValidationError(
          "KrausChannel: Kraus operators must be square with equal dims");
    }
  }
}

double completeness_defect(const KrausChannel& ch) {
  const int d = ch.dim();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus()) sum += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(d, d));
}

bool validate_cptp(const KrausChannel& ch, double tol) {
  return completeness_defect(ch) <= tol;
}

bool is_real_channel(const KrausChannel& ch, double tol) {
  for (const auto& k : ch.kraus()) {
    if (k.imag().cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "apply: channel dim " << ch.dim() << " != state dim " << rho.dim();
    throw ValidationError(msg.str());
  }
  const int d = rho.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(hermitian_part(out));
}

KrausChannel bit_flip(double m) {
  require_unit_interval(m, "m", "bit_flip");
  ComplexMatrix e0(2, 2), e1(2, 2);
  const double a = std::sqrt(m);
  const double b = std::sqrt(1.0 - m);
  e0 << a, 0, 0, a;
  e1 << 0, b, b, 0;
  return KrausChannel({e0, e1}, label_for(ChannelKind::BitFlip, m));
}

KrausChannel phase_damping(double n) {
  require_unit_interval(n, "n", "phase_damping");
  ComplexMatrix e0(2, 2), e1(2, 2);
  e0 << 1, 0, 0, std::sqrt(1.0 - n);
  e1 << 0, 0, 0, std::sqrt(n);
  return KrausChannel({e0, e1}, label_for(ChannelKind::PhaseDamping, n));
}

KrausChannel amplitude_damping(double p) {
  require_unit_interval(p, "p", "amplitude_damping");
  ComplexMatrix e0(2, 2), e1(2, 2);
  e0 << 1, 0, 0, std::sqrt(1.0 - p);
  e1 << 0, std::sqrt(p), 0, 0;
  return KrausChannel({e0, e1}, label_for(ChannelKind::AmplitudeDamping, p));
}

KrausChannel named_channel(ChannelKind kind, double param) {
  switch (kind) {
    case ChannelKind::BitFlip: return bit_flip(param);
    case ChannelKind::PhaseDamping: return phase_damping(param);
    case ChannelKind::AmplitudeDamping: return amplitude_damping(param);
  }
  throw ValidationError("named_channel: unknown channel kind");
}

DensityMatrix channel_transformed_state(ChannelKind kind, double A,
                                        double param) {
  require_unit_interval(A, "A", "channel_transformed_state");
  require_unit_interval(param, parameter_name(kind).data(),
                        "channel_transformed_state");
  const Complex i(0.0, 1.0);
  const double c = std::sqrt(1.0 - A * A);
  ComplexMatrix r(2, 2);
  switch (kind) {
    case ChannelKind::BitFlip: {
      const double m = param;
      r << A * (m - 0.5) + 0.5, 0.5 * i * c * (1.0 - 2.0 * m),
          0.5 * i * c * (2.0 * m - 1.0), 0.5 * (-2.0 * A * m + A + 1.0);
      break;
    }
    case ChannelKind::PhaseDamping: {
      const double n = param;
      r << (A + 1.0) / 2.0, -0.5 * i * c * std::sqrt(1.0 - n),
          0.5 * i * c * std::sqrt(1.0 - n), (1.0 - A) / 2.0;
      break;
    }
    case ChannelKind::AmplitudeDamping: {
      const double p = param;
      r << 0.5 * (A * (-p) + A + p + 1.0), -0.5 * i * c * std::sqrt(1.0 - p),
          0.5 * i * c * std::sqrt(1.0 - p), 0.5 * (A - 1.0) * (p - 1.0);
      break;
    }
  }
  return DensityMatrix(r);
}

KrausChannel random_real_channel(int dim, int n_kraus, std::uint64_t seed) {
  if (dim < 1 || dim > kMaxDim) {
    throw ValidationError("random_real_channel: dim out of range");
  }
  if (n_kraus < 1) {
    throw ValidationError("random_real_channel: n_kraus must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(n_kraus * dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < n_kraus * dim; ++i) g(i, j) = normal(rng);
  }
  // Thin Q has orthonormal columns: sum_j K_j^T K_j = Q^T Q = I.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(n_kraus * dim, dim);

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_kraus);
  for (int j = 0; j < n_kraus; ++j) {
    kraus.emplace_back(q.block(j * dim, 0, dim, dim).cast<Complex>());
  }
  std::ostringstream label;
  label << "random-real(d=" << dim << ",k=" << n_kraus << ",seed=" << seed
        << ")";
  return KrausChannel(std::move(kraus), label.str());
}

}  // namespace imag
