#include "imag/ordering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "imag/error.hpp"

namespace imag {

namespace {

int tie_sign(double d, double tol) {
  if (std::abs(d) <= tol) return 0;
  return d > 0.0 ? 1 : -1;
}

bool compatible(double da, double db, double tol) {
  const int sa = tie_sign(da, tol);
  const int sb = tie_sign(db, tol);
  return sa == 0 || sb == 0 || sa == sb;
}

constexpr std::array<Family, 3> kFamilies = {Family::Tsallis, Family::Sandwiched,
                                             Family::Operator};

}  // namespace

OrderReport same_order(const std::vector<double>& a,
                       const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << "same_order: length mismatch (" << a.size() << " vs " << b.size()
        << ")";
    throw ValidationError(msg.str());
  }
  if (a.empty()) throw ValidationError("same_order: no values");
  OrderReport r;
  r.proposition = "same-order";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      ++r.pairs_tested;
      if (!compatible(a[i] - a[j], b[i] - b[j], tol)) {
        r.violations.push_back({"", {static_cast<double>(i)},
                                {static_cast<double>(j)}, a[i], a[j], b[i], b[j]});
      }
    }
  }
  return r;
}

OrderReport check_proposition3(const std::vector<double>& x_grid, Alpha alpha,
                               double tol) {
  OrderReport r;
  r.proposition = "prop3";
  if (x_grid.empty()) throw ValidationError("check_proposition3: empty grid");
  std::array<std::vector<double>, 3> values;
  for (std::size_t f = 0; f < 3; ++f) {
    for (double x : x_grid) {
      values[f].push_back(closed_form_canonical_x(x, {kFamilies[f], alpha}));
    }
  }
  for (std::size_t f = 0; f < 3; ++f) {
    for (std::size_t g = f + 1; g < 3; ++g) {
      const OrderReport sub = same_order(values[f], values[g], tol);
      r.pairs_tested += sub.pairs_tested;
      for (auto v : sub.violations) {
        v.label = std::string(to_string(kFamilies[f])) + "/" +
                  std::string(to_string(kFamilies[g]));
        v.state1 = {x_grid[static_cast<std::size_t>(v.state1[0])]};
        v.state2 = {x_grid[static_cast<std::size_t>(v.state2[0])]};
        r.violations.push_back(std::move(v));
      }
    }
  }
  return r;
}

OrderReport check_proposition4(int n_samples, double m, Alpha alpha,
                               std::uint64_t seed, double tol) {
  if (n_samples < 2) {
    throw ValidationError("check_proposition4: need at least two samples");
  }
  if (!(m >= 0.0 && m <= 1.0)) {
    throw ValidationError("check_proposition4: m must be in [0, 1]");
  }
  OrderReport r;
  r.proposition = "prop4";
  r.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 0.5);
  std::vector<double> xs(n_samples), ys(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    xs[i] = unif(rng);
    ys[i] = std::sqrt(std::max(0.0, 0.25 - xs[i] * xs[i]));
  }

  for (Family fam : kFamilies) {
    const MeasureKind kind{fam, alpha};
    std::vector<double> before(n_samples), after(n_samples);
    for (int i = 0; i < n_samples; ++i) {
      before[i] = closed_form_canonical_x(xs[i], kind);
      after[i] = closed_form_after_bitflip(xs[i], ys[i], m, kind);
    }
    const OrderReport sub = same_order(before, after, tol);
    r.pairs_tested += sub.pairs_tested;
    for (auto v : sub.violations) {
      const auto i = static_cast<std::size_t>(v.state1[0]);
      const auto j = static_cast<std::size_t>(v.state2[0]);
      v.label = std::string(to_string(fam));
      v.state1 = {xs[i], ys[i], m};
      v.state2 = {xs[j], ys[j], m};
      r.violations.push_back(std::move(v));
    }
  }
  return r;
}

double printed_derivative_canonical_x(double x, const MeasureKind& kind) {
  const double a = kind.alpha.value();
  const double w = x + 0.5;
  switch (kind.family) {
    case Family::Tsallis: return -std::pow(w, 1.0 / a - 1.0) / a;
    case Family::Sandwiched:
      return -2.0 * a * std::pow(w, a / (1.0 - a)) /
             ((a - 1.0) * (a - 1.0) * (2.0 * x + 1.0));
    case Family::Operator:
      return -4.0 * std::pow(w, 1.0 / a) /
             (a * (2.0 * x + 1.0) * (2.0 * x + 1.0));
  }
  throw ValidationError("printed_derivative_canonical_x: unknown family");
}

double printed_derivative_after_bitflip(double x, double y, double m,
                                        const MeasureKind& kind) {
  const double a = kind.alpha.value();
  const double c2y2 = (1.0 - 2.0 * m) * (1.0 - 2.0 * m) * y * y;
  const double x11 = std::sqrt(c2y2 + x * x);
  const double r = x / x11 + 1.0;
  switch (kind.family) {
    case Family::Tsallis:
      return std::pow(2.0, -1.0 / a) * (x - x11) * std::pow(r, 1.0 / a) /
             (a * (c2y2 + x * x));
    case Family::Sandwiched:
      return -std::pow(2.0, a / (a - 1.0)) * a * (x11 - x) *
             std::pow(r, a / (1.0 - a)) / ((a - 1.0) * (a - 1.0) * (c2y2 + x * x));
    case Family::Operator:
      return std::pow(2.0, (a - 1.0) / a) * (x - x11) * std::pow(r, 1.0 / a) /
             (a * (x * (x11 + x) + c2y2));
  }
  throw ValidationError("printed_derivative_after_bitflip: unknown family");
}

bool MonotonicityReport::holds() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](const DerivativeSample& s) { return s.ok; });
}

std::vector<double> interior_x_grid(int n) {
  if (n < 1) throw ValidationError("interior_x_grid: need at least one point");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 0.5 * (i + 1) / (n + 1);
  return g;
}

MonotonicityReport monotonicity_check(const MeasureKind& kind,
                                      const std::vector<double>& grid, double h,
                                      const std::vector<double>& ms) {
  if (!(h > 0.0 && h < 0.25)) {
    throw ValidationError("monotonicity_check: step must be in (0, 1/4)");
  }
  MonotonicityReport rep{kind, {}};

  // Central where the stencil fits in [0, 1/2], one-sided otherwise.
  const auto diff = [h](const auto& f, double x) {
    const double lo = std::max(0.0, x - h);
    const double hi = std::min(0.5, x + h);
    return (f(hi) - f(lo)) / (hi - lo);
  };
  const auto rel = [](double fd, double an) {
    return std::abs(fd - an) / std::max(std::abs(an), 1e-300);
  };
  const auto y_of = [](double x) { return std::sqrt(std::max(0.0, 0.25 - x * x)); };

  for (double x : grid) {
    if (!(x >= 0.0 && x < 0.5)) {
      throw ValidationError("monotonicity_check: grid points must be in [0, 1/2)");
    }
    DerivativeSample s;
    s.x = x;
    s.finite_difference =
        diff([&](double t) { return closed_form_canonical_x(t, kind); }, x);
    s.constrained_difference = s.finite_difference;
    s.analytic = printed_derivative_canonical_x(x, kind);
    s.relative_error = rel(s.finite_difference, s.analytic);
    s.ok = s.finite_difference <= kMonotoneTol &&
           s.relative_error <= kDerivativeRelTol;
    rep.samples.push_back(s);

    const double y = y_of(x);
    for (double m : ms) {
      DerivativeSample p;
      p.x = x;
      p.m = m;
      p.finite_difference = diff(
          [&](double t) {
            return closed_form_after_bitflip_unconstrained(t, y, m, kind);
          },
          x);
      p.constrained_difference = diff(
          [&](double t) { return closed_form_after_bitflip(t, y_of(t), m, kind); },
          x);
      p.analytic = printed_derivative_after_bitflip(x, y, m, kind);
      p.relative_error = rel(p.finite_difference, p.analytic);
      p.ok = p.finite_difference <= kMonotoneTol &&
             p.constrained_difference <= kMonotoneTol &&
             p.relative_error <= kDerivativeRelTol;
      rep.samples.push_back(p);
    }
  }
  return rep;
}

}  // namespace imag
