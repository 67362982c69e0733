#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "imag/decay.hpp"
#include "imag/error.hpp"
#include "imag/io.hpp"
#include "imag/measures.hpp"
#include "imag/verification.hpp"

namespace imag {

namespace {

constexpr int kScreenDigits = 12;
constexpr int kFileDigits = 17;

struct Options {
  double alpha = 0.75;
  std::vector<std::string> families;
  std::string method = "definitional";
  std::optional<double> A;
  std::optional<double> x;
  std::string state;
  std::string channel;
  int grid_a = 11;
  int grid_p = 11;
  int samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  std::string format;
  std::vector<std::string> suites;
  std::optional<double> m;
  int oracle = 0;
  bool self_test = false;
  bool no_definitional = false;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

OptConfig opt_config(const Options& o) {
  OptConfig cfg;
  cfg.seed = o.seed;
  if (o.tol) cfg.tol = *o.tol;
  if (const char* env = std::getenv("IMAG_RESTARTS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw UsageError(std::string("IMAG_RESTARTS must be a positive integer, got '") +
                       env + "'");
    }
    cfg.restarts = static_cast<int>(v);
  }
  validate(cfg);
  return cfg;
}

std::vector<Family> families_of(const Options& o) {
  if (o.families.empty()) {
    return {Family::Tsallis, Family::Sandwiched, Family::Operator};
  }
  std::vector<Family> out;
  for (const auto& f : o.families) out.push_back(parse_family(f));
  return out;
}

// Output goes to --out when given, otherwise to the screen stream.
void emit(const Options& o, std::ostream& screen, const std::string& text) {
  if (o.out.empty()) {
    screen << text;
  } else {
    write_text_file(o.out, text);
  }
}

int cmd_measure(const Options& o, std::ostream& out) {
  const int sources = (o.A ? 1 : 0) + (o.x ? 1 : 0) + (o.state.empty() ? 0 : 1);
  if (sources != 1) {
    throw UsageError("measure: give exactly one of --A, --x, --state");
  }
  const Alpha alpha(o.alpha);
  const auto fams = families_of(o);
  std::vector<Method> methods;
  const bool all = o.method == "all";
  if (all) {
    methods = {Method::ClosedForm, Method::Definitional, Method::PureRestricted};
  } else {
    methods = {parse_method(o.method)};
  }
  const OptConfig cfg = opt_config(o);

  // Everything is validated; now build the state.
  std::optional<DensityMatrix> rho;
  std::optional<double> closed_A;  // closed forms take A, or x via x = A/2
  std::optional<double> closed_x;
  if (o.A) {
    rho = canonical_pure_state(*o.A).density();
    closed_A = *o.A;
  } else if (o.x) {
    rho = canonical_mixed_form_pure(*o.x);
    closed_x = *o.x;
  } else {
    const LoadedState s = load_state_file(o.state);
    rho = s.rho;
    if (s.pure && rho->dim() == 2) {
      // For pure rho, tr(rho rho^T) = |sum_j psi_j^2|^2.
      const double t = (rho->matrix() * rho->matrix().transpose()).trace().real();
      closed_A = std::min(1.0, std::sqrt(std::max(0.0, t)));
    }
  }

  std::ostringstream s;
  s.precision(kScreenDigits);
  for (Family f : fams) {
    const MeasureKind k{f, alpha};
    std::optional<double> closed;
    if (closed_A) closed = closed_form_pure(*closed_A, k);
    if (closed_x) closed = closed_form_canonical_x(*closed_x, k);
    for (Method m : methods) {
      double value = 0.0;
      if (m == Method::ClosedForm) {
        if (!closed) {
          if (all) continue;
          throw UsageError(
              "measure: closed forms need --A, --x or a pure qubit state");
        }
        value = *closed;
      } else {
        value = measure(*rho, k, m, cfg).value;
      }
      s << to_string(f) << ' ' << to_string(m) << ' ' << value;
      if (all && closed) s << " diff " << value - *closed;
      s << '\n';
    }
  }
  emit(o, out, s.str());
  return 0;
}

int cmd_decay(const Options& o, std::ostream& out) {
  if (o.channel.empty()) throw UsageError("decay: --channel is required");
  ChannelKind kind;
  std::optional<double> fixed;
  const std::string head = o.channel.substr(0, o.channel.find(':'));
  if (head == "bf") {
    kind = ChannelKind::BitFlip;
  } else if (head == "pd") {
    kind = ChannelKind::PhaseDamping;
  } else if (head == "ad") {
    kind = ChannelKind::AmplitudeDamping;
  } else {
    throw UsageError("decay: --channel must be bf, pd or ad (optionally with "
                     "a fixed parameter, e.g. bf:m=0.3)");
  }
  if (o.channel.find(':') != std::string::npos) {
    const KrausChannel ch = parse_channel_spec(o.channel);
    fixed = std::stod(ch.label().substr(ch.label().find('=') + 1));
  }
  if (o.grid_a < 1 || o.grid_p < 1) throw UsageError("decay: grids need >= 1 point");
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format != "csv" && format != "json") {
    throw UsageError("decay: --format must be csv or json");
  }
  const Alpha alpha(o.alpha);
  const auto fams = families_of(o);
  const OptConfig cfg = opt_config(o);
  DecayColumns cols;
  cols.definitional = !o.no_definitional;

  const std::vector<double> a_grid = uniform_grid(o.grid_a);
  const std::vector<double> p_grid =
      fixed ? std::vector<double>{*fixed} : uniform_grid(o.grid_p);
  std::vector<DecayPoint> points;
  for (Family f : fams) {
    auto part = sweep(kind, {f, alpha}, a_grid, p_grid, cfg, cols);
    points.insert(points.end(), part.begin(), part.end());
  }

  std::ostringstream s;
  if (format == "csv") {
    write_decay_csv(s, points, cols);
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : points) {
      nlohmann::json row{{"channel", std::string(to_string(p.channel_kind))},
                         {"measure", std::string(to_string(p.measure_kind.family))},
                         {"alpha", p.measure_kind.alpha.value()},
                         {"A", p.A},
                         {"param", p.channel_param},
                         {"delta_formula", nullptr},
                         {"delta_pure_restricted", p.delta_pure_restricted}};
      if (p.delta_formula) row["delta_formula"] = *p.delta_formula;
      if (cols.definitional) row["delta_definitional"] = p.delta_definitional;
      rows.push_back(row);
    }
    s << rows.dump(2) << '\n';
  }
  emit(o, out, s.str());
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> known = {"axioms", "theorem2", "fig1",
                                                 "fig2",   "prop3",    "prop4"};
  std::vector<std::string> suites;
  for (const auto& name : o.suites.empty() ? std::vector<std::string>{"all"}
                                           : o.suites) {
    if (name == "all") {
      suites.insert(suites.end(), known.begin(), known.end());
    } else if (std::find(known.begin(), known.end(), name) != known.end()) {
      suites.push_back(name);
    } else {
      throw UsageError("verify: unknown suite '" + name +
                       "' (expected axioms, theorem2, fig1, fig2, prop3, prop4, all)");
    }
  }
  if (!o.format.empty() && o.format != "json") {
    throw UsageError("verify: reports are JSON only");
  }
  if (o.m && !(*o.m >= 0.0 && *o.m <= 1.0)) {
    throw UsageError("verify: --m must be in [0, 1]");
  }
  if (o.samples < 0) throw UsageError("verify: --samples must be positive");
  const OptConfig cfg = opt_config(o);

  nlohmann::json report = nlohmann::json::array();
  bool ok = true;
  for (const auto& name : suites) {
    SuiteResult r;
    if (name == "axioms") {
      AxiomConfig c;
      c.seed = o.seed;
      c.opt = cfg;
      c.self_test = o.self_test;
      if (o.samples > 0) c.n_samples = o.samples;
      r = run_axiom_suite(c);
    } else if (name == "theorem2") {
      Theorem2Config c;
      c.opt = cfg;
      c.oracle_resolution = o.oracle;
      r = run_theorem2_suite(c);
    } else if (name == "fig1") {
      r = run_fig1_suite(uniform_grid(21), fig1_alpha_grid());
    } else if (name == "fig2") {
      Fig2Config c;
      c.opt = cfg;
      c.cross_definitional = !o.no_definitional;
      r = run_fig2_suite(c);
    } else {
      OrderingConfig c;
      c.seed = o.seed;
      if (o.samples > 0) c.n_samples = o.samples;
      if (o.m) c.ms = {*o.m};
      r = name == "prop3" ? run_prop3_suite(c) : run_prop4_suite(c);
    }
    ok = ok && r.passed();
    err << name << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks_run
        << " checks, " << r.failures.size() << " failures)\n";
    report.push_back(to_json(r));
  }

  std::ostringstream s;
  s.precision(kFileDigits);
  s << report.dump(2) << '\n';
  emit(o, out, s.str());
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Imaginarity measures from Tsallis and Renyi divergences", "imagctl"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "order parameter in [1/2, 1)");
    c->add_option("--family", o.families, "T, S or O (repeatable; default all)");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--tol", o.tol, "optimizer simplex tolerance");
    c->add_option("--out", o.out, "output file (default stdout)");
    c->add_option("--format", o.format, "csv or json");
  };

  auto* measure = app.add_subcommand("measure", "measure one state");
  common(measure);
  measure->add_option("--method", o.method,
                      "definitional, pure-restricted, closed-form, grid-oracle or all");
  measure->add_option("--A", o.A, "canonical pure qubit with imaginarity parameter A");
  measure->add_option("--x", o.x, "canonical pure qubit with off-diagonal real part x");
  measure->add_option("--state", o.state, "JSON state file");

  auto* decay = app.add_subcommand("decay", "decay sweep under a qubit channel");
  common(decay);
  decay->add_option("--channel", o.channel, "bf, pd or ad; bf:m=<v> fixes the parameter");
  decay->add_option("--grid-a", o.grid_a, "points on the A grid");
  decay->add_option("--grid-p", o.grid_p, "points on the channel-parameter grid");
  decay->add_flag("--no-definitional", o.no_definitional,
                  "skip the full optimization column");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", o.suites,
                     "axioms, theorem2, fig1, fig2, prop3, prop4 or all (repeatable)");
  verify->add_option("--samples", o.samples, "sample count for axioms / prop4");
  verify->add_option("--m", o.m, "single bit-flip parameter for prop4");
  verify->add_option("--oracle", o.oracle, "grid-oracle resolution for theorem2 (0: off)");
  verify->add_flag("--self-test", o.self_test,
                   "axioms: use a complex phase gate, which must be flagged");
  verify->add_flag("--no-definitional", o.no_definitional,
                   "fig2: skip the full optimization column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*measure) return cmd_measure(o, out);
    if (*decay) return cmd_decay(o, out);
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace imag
