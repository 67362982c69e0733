#include "imag/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDegenerateTrace = 1e-12;
constexpr double kTieTol = 1e-12;
constexpr double kInitialStep = 0.3;
constexpr double kPerturbation = 0.5;
constexpr int kSimplexRestarts = 6;
constexpr double kHintRidge = 1e-9;

int triangular_size(int dim) { return dim * (dim + 1) / 2; }

std::optional<DensityMatrix> state_from_cholesky(std::span<const double> x,
                                                 int dim) {
  RealMatrix l = RealMatrix::Zero(dim, dim);
  int k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j <= i; ++j) l(i, j) = x[k++];
  }
  RealMatrix s = l * l.transpose();
  const double tr = s.trace();
  if (!(tr > kDegenerateTrace)) return std::nullopt;
  s /= tr;
  return DensityMatrix::from_trusted(s.cast<Complex>());
}

std::optional<DensityMatrix> state_from_vector(std::span<const double> x,
                                               int dim) {
  RealVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = x[i];
  const double n2 = v.squaredNorm();
  if (!(n2 > kDegenerateTrace)) return std::nullopt;
  const RealMatrix s = v * v.transpose() / n2;
  return DensityMatrix::from_trusted(s.cast<Complex>());
}

double checked_objective(const StateObjective& objective,
                         const DensityMatrix& sigma) {
  const double value = objective(sigma);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "objective returned " << value << " at sigma =\n"
        << sigma.matrix().real();
    throw NumericalError(msg.str());
  }
  return value;
}

using StateMap =
    std::optional<DensityMatrix> (*)(std::span<const double>, int);

OptResult multistart(const StateObjective& objective, int dim,
                     StateMap to_state,
                     const std::vector<std::vector<double>>& starts,
                     const OptConfig& cfg) {
  const auto negated = [&](std::span<const double> x) {
    const auto sigma = to_state(x, dim);
    if (!sigma) return kInf;
    return -checked_objective(objective, *sigma);
  };

  std::vector<SimplexResult> runs;
  runs.reserve(starts.size());
  int total_evals = 0;
  for (const auto& start : starts) {
    runs.push_back(nelder_mead_minimize(negated, start, kInitialStep,
                                        cfg.max_evals, cfg.tol));
    total_evals += runs.back().evaluations;
  }

  double best = kInf;
  for (const auto& r : runs) best = std::min(best, r.value);
  if (!std::isfinite(best)) {
    throw NumericalError("optimizer: every restart ended at a degenerate point");
  }
  std::size_t chosen = 0;
  while (runs[chosen].value > best + kTieTol) ++chosen;

  const auto sigma = to_state(runs[chosen].point, dim);
  return OptResult{*sigma, checked_objective(objective, *sigma), total_evals,
                   static_cast<int>(chosen)};
}

}  // namespace

void validate(const OptConfig& cfg) {
  if (cfg.restarts < 1) throw ValidationError("OptConfig: restarts must be >= 1");
  if (cfg.max_evals < 1) throw ValidationError("OptConfig: max_evals must be >= 1");
  if (!(cfg.tol > 0.0)) throw ValidationError("OptConfig: tol must be > 0");
}

SimplexResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& f,
    std::vector<double> start, double step, int max_evals, double tol) {
  const std::size_t n = start.size();
  if (n == 0) throw ValidationError("nelder_mead_minimize: empty start point");

  SimplexResult result{start, f(start), 1, false};
  int evals = 1;

  for (int round = 0; round < kSimplexRestarts && evals < max_evals; ++round) {
    std::vector<std::vector<double>> simplex(n + 1, result.point);
    std::vector<double> values(n + 1, result.value);
    for (std::size_t i = 0; i < n && evals < max_evals; ++i) {
      simplex[i + 1][i] += step;
      values[i + 1] = f(simplex[i + 1]);
      ++evals;
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    bool converged = false;
    while (evals < max_evals) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return values[a] < values[b];
      });
      const std::size_t best = order.front();
      const std::size_t worst = order.back();
      const std::size_t second = order[n - 1];
      if (std::isfinite(values[worst]) && values[worst] - values[best] <= tol) {
        converged = true;
        break;
      }

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t i = 0; i <= n; ++i) {
        if (i == worst) continue;
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
      }
      for (auto& c : centroid) c /= static_cast<double>(n);

      for (std::size_t j = 0; j < n; ++j) {
        trial[j] = centroid[j] + (centroid[j] - simplex[worst][j]);
      }
      const double f_reflect = f(trial);
      ++evals;

      if (f_reflect < values[best]) {
        for (std::size_t j = 0; j < n; ++j) {
          trial2[j] = centroid[j] + 2.0 * (centroid[j] - simplex[worst][j]);
        }
        const double f_expand = f(trial2);
        ++evals;
        if (f_expand < f_reflect) {
          simplex[worst] = trial2;
          values[worst] = f_expand;
        } else {
          simplex[worst] = trial;
          values[worst] = f_reflect;
        }
        continue;
      }
      if (f_reflect < values[second]) {
        simplex[worst] = trial;
        values[worst] = f_reflect;
        continue;
      }

      // Contraction: outside if the reflection beat the worst vertex.
      const bool outside = f_reflect < values[worst];
      for (std::size_t j = 0; j < n; ++j) {
        trial2[j] = outside ? centroid[j] + 0.5 * (trial[j] - centroid[j])
                            : centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
      }
      const double f_contract = f(trial2);
      ++evals;
      if (f_contract < (outside ? f_reflect : values[worst])) {
        simplex[worst] = trial2;
        values[worst] = f_contract;
        continue;
      }

      for (std::size_t i = 0; i <= n; ++i) {
        if (i == best) continue;
        for (std::size_t j = 0; j < n; ++j) {
          simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
        }
        values[i] = f(simplex[i]);
        ++evals;
      }
    }

    const auto it = std::min_element(values.begin(), values.end());
    const std::size_t idx = static_cast<std::size_t>(it - values.begin());
    const double improvement = result.value - *it;
    if (*it < result.value) {
      result.point = simplex[idx];
      result.value = *it;
    }
    result.converged = converged;
    if (converged && round > 0 && !(improvement > tol)) break;
  }
  result.evaluations = evals;
  return result;
}

OptResult maximize_over_real_states(const StateObjective& objective, int dim,
                                    const OptConfig& cfg,
                                    std::span<const RealMatrix> hints) {
  validate(cfg);
  if (dim < 1 || dim > kMaxDim) {
    throw ValidationError("maximize_over_real_states: dim out of range");
  }
  const int n = triangular_size(dim);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, kPerturbation);

  std::vector<std::vector<double>> starts;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x(n, 0.0);
    int k = 0;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j <= i; ++j, ++k) {
        x[k] = (i == j ? 1.0 : 0.0) + (r == 0 ? 0.0 : normal(rng));
      }
    }
    starts.push_back(std::move(x));
  }
  for (const auto& h : hints) {
    if (h.rows() != dim || h.cols() != dim) {
      throw ValidationError("maximize_over_real_states: hint has wrong shape");
    }
    // Ridge keeps the factorization defined on rank-deficient hints.
    const RealMatrix shifted =
        h + kHintRidge * RealMatrix::Identity(dim, dim);
    Eigen::LLT<RealMatrix> llt(shifted);
    if (llt.info() != Eigen::Success) {
      throw ValidationError("maximize_over_real_states: hint is not PSD");
    }
    const RealMatrix l = llt.matrixL();
    std::vector<double> x(n);
    int k = 0;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j <= i; ++j) x[k++] = l(i, j);
    }
    starts.push_back(std::move(x));
  }
  return multistart(objective, dim, &state_from_cholesky, starts, cfg);
}

OptResult maximize_over_pure_real_states(const StateObjective& objective,
                                         int dim, const OptConfig& cfg,
                                         std::span<const RealVector> hints) {
  validate(cfg);
  if (dim < 1 || dim > kMaxDim) {
    throw ValidationError("maximize_over_pure_real_states: dim out of range");
  }
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal;

  std::vector<std::vector<double>> starts;
  for (int r = 0; r < cfg.restarts; ++r) {
    std::vector<double> x(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    if (r > 0) {
      for (auto& xi : x) xi = normal(rng);
    }
    starts.push_back(std::move(x));
  }
  for (const auto& h : hints) {
    if (h.size() != dim) {
      throw ValidationError("maximize_over_pure_real_states: hint has wrong size");
    }
    starts.emplace_back(h.data(), h.data() + dim);
  }
  return multistart(objective, dim, &state_from_vector, starts, cfg);
}

OptResult grid_oracle_qubit(const StateObjective& objective, int resolution) {
  if (resolution < 64) {
    throw ValidationError("grid_oracle_qubit: resolution must be >= 64");
  }
  const auto state_at = [](double theta, double q) {
    RealMatrix r(2, 2);
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    RealMatrix d = RealMatrix::Zero(2, 2);
    d(0, 0) = q;
    d(1, 1) = 1.0 - q;
    const RealMatrix s = r * d * r.transpose();
    return DensityMatrix::from_trusted(s.cast<Complex>());
  };

  double best_value = -kInf;
  double best_theta = 0.0;
  double best_q = 0.0;
  int evals = 0;
  const auto scan = [&](double theta_lo, double theta_step, double q_lo,
                        double q_hi) {
    const double q_step = (q_hi - q_lo) / (resolution - 1);
    for (int i = 0; i < resolution; ++i) {
      const double theta = theta_lo + theta_step * i;
      for (int j = 0; j < resolution; ++j) {
        const double q = std::clamp(q_lo + q_step * j, 0.0, 1.0);
        const double v = checked_objective(objective, state_at(theta, q));
        ++evals;
        if (v > best_value) {
          best_value = v;
          best_theta = theta;
          best_q = q;
        }
      }
    }
  };

  const double dtheta = std::numbers::pi / resolution;
  const double dq = 1.0 / (resolution - 1);
  scan(0.0, dtheta, 0.0, 1.0);

  const double theta_c = best_theta;
  const double q_c = best_q;
  scan(theta_c - dtheta, 2.0 * dtheta / (resolution - 1),
       std::max(0.0, q_c - dq), std::min(1.0, q_c + dq));

  return OptResult{state_at(best_theta, best_q), best_value, evals, 0};
}

}  // namespace imag
