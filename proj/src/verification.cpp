#include "imag/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "imag/channels.hpp"
#include "imag/error.hpp"

namespace imag {

namespace {

using nlohmann::json;

constexpr double kM1RealTol = 1e-7;
constexpr double kM1ImagFloor = 1e-4;
constexpr double kM1MaxA = 0.9;
constexpr double kM2Tol = 1e-6;
constexpr double kM5Tol = 1e-4;
constexpr double kPureTol = 1e-6;
constexpr double kDefinitionalTol = 1e-5;
constexpr double kOracleTol = 1e-4;
constexpr double kGapTol = 1e-12;
constexpr double kFormulaZeroTol = 1e-9;
constexpr double kArgmaxTieTol = 1e-9;
constexpr double kCrossAgreeTol = 1e-4;
constexpr double kDecayFloor = -1e-6;

// splitmix64 step: decorrelated per-sample seeds from one user seed.
std::uint64_t derive(std::uint64_t seed, std::uint64_t tag, std::uint64_t i) {
  std::uint64_t z = seed ^ (tag * 0x9E3779B97F4A7C15ULL) ^ (i * 0xBF58476D1CE4E5B9ULL);
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string fam(Family f) { return std::string(to_string(f)); }

void check_le(SuiteResult& r, const std::string& name, double got, double bound,
              double tol, json coords) {
  ++r.checks_run;
  if (!(got <= bound + tol)) {
    r.failures.push_back({name, std::move(coords), bound, got, tol});
  }
}

void check_ge(SuiteResult& r, const std::string& name, double got, double bound,
              double tol, json coords) {
  ++r.checks_run;
  if (!(got >= bound - tol)) {
    r.failures.push_back({name, std::move(coords), bound, got, tol});
  }
}

void check_close(SuiteResult& r, const std::string& name, double got,
                 double expected, double tol, json coords) {
  ++r.checks_run;
  if (!(std::abs(got - expected) <= tol)) {
    r.failures.push_back({name, std::move(coords), expected, got, tol});
  }
}

DensityMatrix random_pure_qubit_bounded_a(std::uint64_t seed, double* A_out) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, kM1MaxA);
  const double A = unif(rng);
  *A_out = A;
  const RealMatrix o = random_orthogonal(2, derive(seed, 1, 0));
  return conjugate(canonical_pure_state(A).density(), o);
}

KrausChannel phase_gate() {
  ComplexMatrix s(2, 2);
  s << 1.0, 0.0, 0.0, Complex(0.0, 1.0);
  return KrausChannel({s}, "phase-gate");
}

}  // namespace

SuiteResult run_axiom_suite(const AxiomConfig& cfg) {
  if (cfg.n_samples < 10) {
    throw ValidationError("run_axiom_suite: n_samples must be >= 10");
  }
  validate(cfg.opt);
  SuiteResult r;
  r.name = cfg.self_test ? "axioms-self-test" : "axioms";
  std::vector<MeasureKind> kinds;
  for (double a : cfg.alphas) {
    for (Family f : cfg.families) kinds.push_back({f, Alpha(a)});
  }
  const auto coords = [&](const char* check, int i, const MeasureKind& k) {
    return json{{"check", check},
                {"seed", cfg.seed},
                {"sample", i},
                {"family", fam(k.family)},
                {"alpha", k.alpha.value()}};
  };

  if (!cfg.self_test) {
    // M1: zero exactly on real states, positive elsewhere.
    const int half = cfg.n_samples / 2;
    for (int i = 0; i < half; ++i) {
      const int dim = 2 + i % 2;
      const DensityMatrix rho = random_real_density(dim, derive(cfg.seed, 11, i));
      for (const auto& k : kinds) {
        auto c = coords("M1-real", i, k);
        c["dim"] = dim;
        check_le(r, "M1-real", measure_definitional(rho, k, cfg.opt).value, 0.0,
                 kM1RealTol, c);
      }
    }
    for (int i = 0; i < half; ++i) {
      double A = 0.0;
      const DensityMatrix rho =
          random_pure_qubit_bounded_a(derive(cfg.seed, 12, i), &A);
      for (const auto& k : kinds) {
        auto c = coords("M1-imaginary", i, k);
        c["A"] = A;
        check_ge(r, "M1-imaginary", measure_definitional(rho, k, cfg.opt).value,
                 kM1ImagFloor, 0.0, c);
      }
    }
  }

  // M2: no increase under real channels.
  for (int i = 0; i < cfg.n_samples; ++i) {
    const std::uint64_t s_state = derive(cfg.seed, 21, i);
    const std::uint64_t s_chan = derive(cfg.seed, 22, i);
    const int n_kraus = 1 + i % 3;
    const DensityMatrix rho = cfg.self_test ? random_real_density(2, s_state)
                                            : random_density(2, 2, s_state);
    const KrausChannel ch =
        cfg.self_test ? phase_gate() : random_real_channel(2, n_kraus, s_chan);
    const DensityMatrix out = apply(ch, rho);
    for (const auto& k : kinds) {
      const double before = measure_definitional(rho, k, cfg.opt).value;
      const double after = measure_definitional(out, k, cfg.opt).value;
      auto c = coords("M2", i, k);
      c["channel"] = ch.label();
      check_le(r, "M2", after, before, kM2Tol, c);
    }
  }

  if (!cfg.self_test) {
    // M5: additivity over direct sums.
    const double ps[] = {0.25, 0.5, 0.75};
    const int instances = cfg.n_samples / 4;
    for (int i = 0; i < instances; ++i) {
      const double p = ps[i % 3];
      const Alpha alpha(cfg.alphas[(i / 3) % cfg.alphas.size()]);
      const DensityMatrix r1 = random_density(2, 2, derive(cfg.seed, 51, i));
      const DensityMatrix r2 = random_density(2, 2, derive(cfg.seed, 52, i));
      const DensityMatrix sum = direct_sum(p, r1, r2);
      for (Family f : cfg.families) {
        const MeasureKind k{f, alpha};
        const double joint = measure_definitional(sum, k, cfg.opt).value;
        const double parts = p * measure_definitional(r1, k, cfg.opt).value +
                             (1.0 - p) * measure_definitional(r2, k, cfg.opt).value;
        auto c = coords("M5", i, k);
        c["p"] = p;
        check_close(r, "M5", joint, parts, kM5Tol, c);
      }
    }
  }
  return r;
}

SuiteResult run_theorem2_suite(const Theorem2Config& cfg) {
  if (cfg.A_grid.empty() || cfg.alphas.empty()) {
    throw ValidationError("run_theorem2_suite: grids must be nonempty");
  }
  validate(cfg.opt);
  SuiteResult r;
  r.name = "theorem2";
  json tsallis = json::array();
  json oracle = json::array();
  for (double a : cfg.alphas) {
    for (double A : cfg.A_grid) {
      const DensityMatrix rho = canonical_pure_state(A).density();
      for (Family f : {Family::Tsallis, Family::Sandwiched, Family::Operator}) {
        const MeasureKind k{f, Alpha(a)};
        const json c{{"A", A}, {"alpha", a}, {"family", fam(f)}};
        const double closed = closed_form_pure(A, k);
        const double pure = measure_pure_restricted(rho, k, cfg.opt).value;
        const double def = measure_definitional(rho, k, cfg.opt).value;
        check_close(r, "closed-vs-pure-restricted", pure, closed, kPureTol, c);
        if (f == Family::Tsallis) {
          tsallis.push_back({{"A", A},
                             {"alpha", a},
                             {"definitional", def},
                             {"closed_form", closed},
                             {"closed_minus_definitional", closed - def}});
        } else {
          check_close(r, "closed-vs-definitional", def, closed,
                      kDefinitionalTol, c);
        }
        if (cfg.oracle_resolution > 0) {
          const double orc =
              measure_grid_oracle(rho, k, cfg.oracle_resolution).value;
          check_close(r, "oracle-vs-definitional", orc, def, kOracleTol, c);
          if (f != Family::Tsallis) {
            check_close(r, "oracle-vs-closed", orc, closed, kOracleTol, c);
          }
          oracle.push_back({{"A", A},
                            {"alpha", a},
                            {"family", fam(f)},
                            {"oracle", orc},
                            {"definitional", def}});
        }
      }
    }
  }
  r.tables["tsallis_discrepancy"] = tsallis;
  if (cfg.oracle_resolution > 0) r.tables["grid_oracle"] = oracle;
  return r;
}

std::vector<double> fig1_alpha_grid() {
  std::vector<double> g;
  for (int i = 0; i < 10; ++i) g.push_back(0.5 + 0.05 * i);
  return g;
}

SuiteResult run_fig1_suite(const std::vector<double>& A_grid,
                           const std::vector<double>& alphas) {
  if (A_grid.empty() || alphas.empty()) {
    throw ValidationError("run_fig1_suite: grids must be nonempty");
  }
  SuiteResult r;
  r.name = "fig1";
  double min1 = INFINITY, min2 = INFINITY;
  for (double a : alphas) {
    for (double A : A_grid) {
      const InequalityGaps g = inequality_gaps(A, Alpha(a));
      const json c{{"A", A}, {"alpha", a}};
      check_ge(r, "gap-S-minus-O", g.delta1, 0.0, kGapTol, c);
      check_ge(r, "gap-O-minus-T", g.delta2, 0.0, kGapTol, c);
      if (a == 0.5) check_close(r, "gap-S-minus-O-at-half", g.delta1, 0.0, kGapTol, c);
      min1 = std::min(min1, g.delta1);
      min2 = std::min(min2, g.delta2);
    }
  }
  r.tables["min_gap_S_minus_O"] = min1;
  r.tables["min_gap_O_minus_T"] = min2;
  return r;
}

SuiteResult run_fig2_suite(const Fig2Config& cfg) {
  if (cfg.A_grid.empty() || cfg.param_points < 3) {
    throw ValidationError("run_fig2_suite: need A values and >= 3 parameter points");
  }
  SuiteResult r;
  r.name = "fig2";
  const Family families[] = {Family::Tsallis, Family::Sandwiched, Family::Operator};
  const ChannelKind channels[] = {ChannelKind::BitFlip, ChannelKind::PhaseDamping,
                                  ChannelKind::AmplitudeDamping};

  // Endpoint zeros.
  for (double A : cfg.A_grid) {
    for (Family f : families) {
      const auto zero = [&](ChannelKind ch, double q) {
        const json c{{"channel", std::string(to_string(ch))},
                     {"family", fam(f)},
                     {"A", A},
                     {"param", q}};
        check_close(r, "formula-endpoint-zero", decay_formula_alpha34(ch, A, q, f),
                    0.0, kFormulaZeroTol, c);
      };
      zero(ChannelKind::BitFlip, 0.0);
      zero(ChannelKind::BitFlip, 1.0);
      zero(ChannelKind::PhaseDamping, 0.0);
      zero(ChannelKind::AmplitudeDamping, 0.0);
    }
  }

  // Location of the maximum over the channel parameter.
  const std::vector<double> pg = uniform_grid(cfg.param_points);
  const double step = pg[1] - pg[0];
  json argmax = json::array();
  for (Family f : families) {
    bool pd_off_half = false;
    for (double A : cfg.A_grid) {
      for (ChannelKind ch : {ChannelKind::BitFlip, ChannelKind::PhaseDamping,
                             ChannelKind::AmplitudeDamping}) {
        std::vector<double> v;
        for (double q : pg) v.push_back(decay_formula_alpha34(ch, A, q, f));
        const auto it = std::max_element(v.begin(), v.end());
        const double best = *it;
        const double at = pg[static_cast<std::size_t>(it - v.begin())];
        double near_half = -INFINITY;
        for (std::size_t i = 0; i < pg.size(); ++i) {
          if (std::abs(pg[i] - 0.5) <= step + 1e-12) near_half = std::max(near_half, v[i]);
        }
        argmax.push_back({{"channel", std::string(to_string(ch))},
                          {"family", fam(f)},
                          {"A", A},
                          {"argmax", at},
                          {"max", best}});
        if (ch == ChannelKind::BitFlip &&
            std::find(cfg.argmax_rows.begin(), cfg.argmax_rows.end(), A) !=
                cfg.argmax_rows.end()) {
          check_ge(r, "bitflip-max-at-half", near_half, best, kArgmaxTieTol,
                   {{"family", fam(f)}, {"A", A}, {"grid_step", step}});
        }
        if (ch == ChannelKind::PhaseDamping && best > kArgmaxTieTol &&
            std::abs(at - 0.5) > step / 2) {
          pd_off_half = true;
        }
      }
    }
    ++r.checks_run;
    if (!pd_off_half) {
      r.failures.push_back({"phase-damping-max-not-at-half",
                            {{"family", fam(f)}},
                            1.0,
                            0.0,
                            0.0});
    }
  }
  r.tables["argmax"] = argmax;

  if (cfg.cross_points > 0) {
    validate(cfg.opt);
    const std::vector<double> grid = uniform_grid(cfg.cross_points);
    json cross = json::array();
    for (Family f : families) {
      const MeasureKind k{f, Alpha(0.75)};
      std::vector<double> pure0, def0;
      for (double A : grid) {
        const DensityMatrix rho = canonical_pure_state(A).density();
        pure0.push_back(measure_pure_restricted(rho, k, cfg.opt).value);
        def0.push_back(cfg.cross_definitional
                           ? measure_definitional(rho, k, cfg.opt).value
                           : 0.0);
      }
      for (ChannelKind ch : channels) {
        double max_pure = 0.0, max_def = 0.0, min_def = INFINITY;
        json deviations = json::array();
        json negative = json::array();
        for (std::size_t ia = 0; ia < grid.size(); ++ia) {
          const double A = grid[ia];
          for (double q : grid) {
            const DensityMatrix out = channel_transformed_state(ch, A, q);
            const double formula = decay_formula_alpha34(ch, A, q, f);
            const double dp = pure0[ia] - measure_pure_restricted(out, k, cfg.opt).value;
            const double dpure = std::abs(formula - dp);
            max_pure = std::max(max_pure, dpure);
            double dd = 0.0;
            if (cfg.cross_definitional) {
              dd = def0[ia] - measure_definitional(out, k, cfg.opt).value;
              max_def = std::max(max_def, std::abs(formula - dd));
              min_def = std::min(min_def, dd);
              const json c{{"channel", std::string(to_string(ch))},
                           {"family", fam(f)},
                           {"A", A},
                           {"param", q}};
              if (f == Family::Operator) {
                if (dd < kDecayFloor) negative.push_back({A, q, dd});
              } else {
                check_ge(r, "decay-definitional-nonnegative", dd, 0.0, -kDecayFloor, c);
              }
            }
            if (dpure > kCrossAgreeTol) deviations.push_back({A, q, formula, dp, dd});
          }
        }
        json row{{"channel", std::string(to_string(ch))},
                 {"family", fam(f)},
                 {"max_abs_formula_minus_pure_restricted", max_pure},
                 {"agrees_with_pure_restricted", max_pure <= kCrossAgreeTol},
                 {"deviations_columns",
                  {"A", "param", "delta_formula", "delta_pure_restricted",
                   "delta_definitional"}},
                 {"deviations", deviations}};
        if (cfg.cross_definitional) {
          row["max_abs_formula_minus_definitional"] = max_def;
          row["agrees_with_definitional"] = max_def <= kCrossAgreeTol;
          row["min_delta_definitional"] = min_def;
          if (f == Family::Operator) row["negative_definitional_decay"] = negative;
        }
        cross.push_back(row);
      }
    }
    r.tables["cross_check"] = cross;
  }
  return r;
}

SuiteResult run_prop3_suite(const OrderingConfig& cfg) {
  SuiteResult r;
  r.name = "prop3";
  std::vector<double> grid = uniform_grid(cfg.grid_points);
  for (auto& x : grid) x *= 0.5;
  const std::vector<double> interior = interior_x_grid(cfg.derivative_points);
  double worst_rel = 0.0;
  for (double a : cfg.alphas) {
    const OrderReport rep = check_proposition3(grid, Alpha(a));
    r.checks_run += rep.pairs_tested;
    for (const auto& v : rep.violations) {
      r.failures.push_back({"same-order-" + v.label,
                            {{"alpha", a}, {"x1", v.state1}, {"x2", v.state2}},
                            v.a1 - v.a2,
                            v.b1 - v.b2,
                            kOrderTieTol});
    }
    for (Family f : {Family::Tsallis, Family::Sandwiched, Family::Operator}) {
      const MonotonicityReport m = monotonicity_check({f, Alpha(a)}, interior);
      for (const auto& s : m.samples) {
        ++r.checks_run;
        worst_rel = std::max(worst_rel, s.relative_error);
        if (!s.ok) {
          json c{{"alpha", a}, {"family", fam(f)}, {"x", s.x},
                 {"finite_difference", s.finite_difference},
                 {"constrained_difference", s.constrained_difference}};
          if (s.m) c["m"] = *s.m;
          r.failures.push_back({"derivative", c, s.analytic, s.finite_difference,
                                kDerivativeRelTol});
        }
      }
    }
  }
  r.tables["max_derivative_relative_error"] = worst_rel;
  return r;
}

SuiteResult run_prop4_suite(const OrderingConfig& cfg) {
  SuiteResult r;
  r.name = "prop4";
  for (double a : cfg.alphas) {
    for (double m : cfg.ms) {
      const OrderReport rep =
          check_proposition4(cfg.n_samples, m, Alpha(a), cfg.seed);
      r.checks_run += rep.pairs_tested;
      for (const auto& v : rep.violations) {
        r.failures.push_back({"order-after-bitflip-" + v.label,
                              {{"alpha", a},
                               {"m", m},
                               {"seed", cfg.seed},
                               {"state1", v.state1},
                               {"state2", v.state2}},
                              v.a1 - v.a2,
                              v.b1 - v.b2,
                              kOrderTieTol});
      }
    }
  }
  return r;
}

nlohmann::json to_json(const SuiteResult& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"check", f.check},
                        {"coordinates", f.coordinates},
                        {"expected", f.expected},
                        {"got", f.got},
                        {"tolerance", f.tolerance}});
  }
  return {{"suite", r.name},
          {"checks_run", r.checks_run},
          {"passed", r.passed()},
          {"failures", failures},
          {"tables", r.tables}};
}

nlohmann::json to_json(const OrderReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"label", x.label},
                 {"state1", x.state1},
                 {"state2", x.state2},
                 {"values", {x.a1, x.a2, x.b1, x.b2}}});
  }
  return {{"proposition", r.proposition},
          {"pairs", r.pairs_tested},
          {"violations", v},
          {"seed", r.seed}};
}

}  // namespace imag
