#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "imag/states.hpp"

namespace imag {

struct OptConfig {
  int restarts = 16;
  int max_evals = 20000;  // per restart
  double tol = 1e-11;     // simplex function-value spread
  std::uint64_t seed = 0;
};

/// Validates `restarts >= 1`, `max_evals >= 1`, `tol > 0`.
void validate(const OptConfig& cfg);

/// Objective over density matrices; maximized.
using StateObjective = std::function<double(const DensityMatrix&)>;

struct OptResult {
  DensityMatrix sigma;
  double value = 0.0;
  int evaluations = 0;
  int best_restart = 0;
};

/// Unconstrained Nelder-Mead minimization (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). A vertex may evaluate to +infinity, which
/// rejects it. Stops when the function-value spread of the simplex is at
/// most `tol` or the evaluation budget is spent; then restarts the simplex
/// around the best vertex until a restart no longer improves by more than
/// `tol`.
struct SimplexResult {
  std::vector<double> point;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

SimplexResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& f,
    std::vector<double> start, double step, int max_evals, double tol);

/// Maximizes `objective` over all real density matrices of dimension `dim`
/// via sigma = L L^T / tr(L L^T), L lower triangular. Restart 0 starts at
/// L = I; the others at I plus seeded Gaussian perturbations. Each real
/// PSD matrix in `hints` adds one more start at that state.
///
/// Throws NumericalError if the objective returns a non-finite value.
OptResult maximize_over_real_states(const StateObjective& objective, int dim,
                                    const OptConfig& cfg,
                                    std::span<const RealMatrix> hints = {});

/// Same contract restricted to rank-one sigma = v v^T / |v|^2, v real.
/// Hints are start vectors.
OptResult maximize_over_pure_real_states(const StateObjective& objective,
                                         int dim, const OptConfig& cfg,
                                         std::span<const RealVector> hints = {});

/// Exhaustive scan over every real qubit state
/// sigma(theta, q) = R(theta) diag(q, 1-q) R(theta)^T on a
/// resolution x resolution grid of [0, pi) x [0, 1], followed by one
/// refinement scan of the same resolution over the best cell's neighbours.
OptResult grid_oracle_qubit(const StateObjective& objective, int resolution);

}  // namespace imag
