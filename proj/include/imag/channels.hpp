#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "imag/linalg.hpp"
#include "imag/states.hpp"

namespace imag {

inline constexpr double kCompletenessTol = 1e-9;

/// The three named qubit channels: bit flip, phase damping, amplitude
/// damping.
enum class ChannelKind { BitFlip, PhaseDamping, AmplitudeDamping };

/// "bf", "pd", "ad"
std::string_view to_string(ChannelKind kind);
/// Parameter name used in spec strings: "m", "n", "p".
std::string_view parameter_name(ChannelKind kind);

/// A channel in Kraus form. Construction checks that the list is non-empty
/// and all operators share one square dimension; completeness is checked
/// separately by validate_cptp.
class KrausChannel {
 public:
  KrausChannel(std::vector<ComplexMatrix> kraus, std::string label);

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(kraus_.front().rows()); }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::string label_;
};

/// || sum_j K_j^dagger K_j - I ||_max
double completeness_defect(const KrausChannel& ch);
bool validate_cptp(const KrausChannel& ch, double tol = kCompletenessTol);
bool is_real_channel(const KrausChannel& ch, double tol = kRealTol);

/// sum_j K_j rho K_j^dagger. The result is validated as a density matrix,
/// so a non-trace-preserving channel raises ValidationError.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

KrausChannel bit_flip(double m);
KrausChannel phase_damping(double n);
KrausChannel amplitude_damping(double p);
KrausChannel named_channel(ChannelKind kind, double param);

/// Closed-form image of canonical_pure_state(A) under the named channel.
DensityMatrix channel_transformed_state(ChannelKind kind, double A,
                                        double param);

/// Real isometry sliced into `n_kraus` real Kraus blocks.
KrausChannel random_real_channel(int dim, int n_kraus, std::uint64_t seed);

}  // namespace imag
