#pragma once

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ppt/analysis/order_scan.hpp"
#include "ppt/analysis/radius.hpp"
#include "ppt/analysis/structure.hpp"
#include "ppt/analysis/tail.hpp"
#include "ppt/closed_form.hpp"
#include "ppt/error.hpp"
#include "ppt/io/format.hpp"
#include "ppt/io/json.hpp"
#include "ppt/io/parse.hpp"
#include "ppt/oracle/precision.hpp"
#include "ppt/oracle/shooting.hpp"
#include "ppt/series/energy.hpp"
#include "ppt/series/model.hpp"
#include "ppt/series/solve_tau.hpp"
#include "ppt/series/wave.hpp"

namespace ppt::cli {

enum ExitCode { ok = 0, usage = 1, computation = 2, verification = 3 };

class usage_error : public error {
 public:
  using error::error;
};

namespace detail {

using io::json;

struct Output {
  std::string format = "text";
  std::string path;
};

struct Shooting {
  std::optional<double> x_max;
  std::optional<double> step;
  std::optional<double> tol;

  void apply(oracle::ShootingConfig& c) const {
    if (x_max) c.x_max = *x_max;
    if (step) c.step = *step;
    if (tol) c.tol = *tol;
  }
};

inline void add_output(CLI::App* cmd, Output& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
  cmd->add_option("--output,-o", o.path, "write to this file instead of stdout");
}

inline void add_shooting(CLI::App* cmd, Shooting& s) {
  cmd->add_option("--x-max", s.x_max, "shooting start point");
  cmd->add_option("--step", s.step, "RK4 step");
  cmd->add_option("--tol", s.tol, "bisection tolerance");
}

inline void emit(const std::string& text, const Output& o, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
  } else {
    io::write_atomic(o.path, text);
  }
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string num(double x) { return real_to_string(x, 17); }

// Shortest round-trip form for human-readable text.
inline std::string brief(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

inline Rational parse_arg(const std::string& text, const char* what) {
  try {
    return io::parse_rational(text);
  } catch (const error&) {
    throw usage_error(std::string("invalid ") + what + ": '" + text + "'");
  }
}

/// a from exactly one of --mu / --a.
inline Rational strength_from(const std::string& mu, const std::string& a) {
  if (mu.empty() == a.empty()) throw usage_error("give exactly one of --mu or --a");
  if (!a.empty()) {
    const Rational av = parse_arg(a, "a");
    if (av <= Rational(1, 4)) throw usage_error("a must exceed 1/4 (mu > 0)");
    return av;
  }
  const Rational m = parse_arg(mu, "mu");
  if (m.sign() <= 0) throw usage_error("mu must be positive");
  return strength_param(m);
}

inline SolveOptions solve_options() {
  SolveOptions o;
  if (const char* env = std::getenv("PPT_MAX_SYMBOLIC_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0 || v > 64) throw usage_error("PPT_MAX_SYMBOLIC_ORDER must be an integer in [0, 64]");
    o.max_symbolic_order = static_cast<int>(v);
  }
  return o;
}

// ---- expand

struct ExpandArgs {
  std::string mu, a;
  bool symbolic = false;
  int order = 2;
  Output output;
};

inline int expand(const ExpandArgs& args, std::ostream& out) {
  std::ostringstream text;
  if (args.symbolic) {
    if (!args.mu.empty() || !args.a.empty()) throw usage_error("--symbolic takes neither --mu nor --a");
    const SymbolicTau tau = solve_tau_symbolic(args.order, solve_options());
    if (args.output.format == "json") {
      text << dump(io::to_json(tau));
    } else {
      for (int j = 0; j <= tau.order(); ++j)
        text << "tau^(" << j << ") = " << io::format_rational_function(tau.moment(j)) << "\n";
    }
  } else {
    const Rational a = strength_from(args.mu, args.a);
    const NumericTau tau = solve_tau_numeric(a, args.order, solve_options());
    if (args.output.format == "json") {
      json j = io::to_json(tau);
      j["mu"] = mu_from_strength(a).to_string();
      text << dump(j);
    } else {
      text << "a = " << a << "\n";
      text << "mu = " << mu_from_strength(a) << "\n";
      for (int j = 0; j <= tau.order(); ++j) text << "tau^(" << j << ") = " << tau.moment(j) << "\n";
    }
  }
  emit(text.str(), args.output, out);
  return ok;
}

// ---- energy

struct EnergyArgs {
  std::string mu, lambda = "0";
  int order = 5;
  bool oracle = false;
  std::string precision = "double";
  std::optional<double> tolerance;
  Shooting shooting;
  Output output;
};

inline int energy(const EnergyArgs& args, std::ostream& out, std::ostream& err) {
  ModelParams p;
  p.mu = parse_arg(args.mu, "mu");
  p.lambda = parse_arg(args.lambda, "lambda");
  validate(p);
  const NumericTau tau = solve_tau_numeric(strength_param(p.mu), args.order);
  const ExactEnergy exact = energy_exact(p, tau);
  const EnergyResult approx = energy_eval(p, tau);
  if (approx.outside_window) err << "warning: |lambda| >= 1 is far outside the perturbative regime\n";

  json j;
  j["mu"] = p.mu.to_string();
  j["lambda"] = p.lambda.to_string();
  j["order"] = args.order;
  j["kappa_series"] = approx.kappa;
  j["energy_series"] = approx.energy;
  j["kappa_series_exact"] = exact.kappa.to_string();
  j["energy_series_exact"] = exact.energy.to_string();

  int code = ok;
  if (args.oracle) {
    double kappa_o = 0, energy_o = 0, diff = 0;
    if (args.precision == "quad") {
      oracle::ShootingConfig c = oracle::high_precision_config(p);
      args.shooting.apply(c);
      const auto r = oracle::find_kappa<quad>(p, c);
      kappa_o = static_cast<double>(r.kappa);
      energy_o = static_cast<double>(r.energy);
      diff = static_cast<double>(abs(to_real<quad>(exact.energy) - r.energy));
    } else {
      oracle::ShootingConfig c = oracle::default_shooting_config(p);
      args.shooting.apply(c);
      const auto r = oracle::find_kappa<double>(p, c);
      kappa_o = r.kappa;
      energy_o = r.energy;
      diff = std::abs(approx.energy - r.energy);
    }
    j["kappa_oracle"] = kappa_o;
    j["energy_oracle"] = energy_o;
    j["abs_diff"] = diff;
    if (args.tolerance) {
      const bool pass = diff <= *args.tolerance;
      j["tolerance"] = *args.tolerance;
      j["pass"] = pass;
      if (!pass) code = verification;
    }
  } else if (args.tolerance) {
    throw usage_error("--tolerance needs --oracle");
  }

  std::ostringstream text;
  if (args.output.format == "json") {
    text << dump(j);
  } else {
    text << "kappa_series = " << brief(approx.kappa) << "\n";
    text << "E_series = " << brief(approx.energy) << "\n";
    if (args.oracle) {
      text << "kappa_oracle = " << brief(j["kappa_oracle"].get<double>()) << "\n";
      text << "E_oracle = " << brief(j["energy_oracle"].get<double>()) << "\n";
      text << "abs_diff = " << brief(j["abs_diff"].get<double>()) << "\n";
      if (args.tolerance) text << (code == ok ? "PASS" : "FAIL") << " (tolerance " << brief(*args.tolerance) << ")\n";
    }
  }
  emit(text.str(), args.output, out);
  return code;
}

// ---- wavefunction

struct WaveArgs {
  std::string mu, lambda = "0";
  int order = 5;
  int n_max = 8;
  double from = 0.0, to = 5.0;
  int points = 101;
  double norm_x = 1.0;
  bool oracle = false;
  Shooting shooting;
  Output output;
};

inline int wavefunction(const WaveArgs& args, std::ostream& out) {
  ModelParams p;
  p.mu = parse_arg(args.mu, "mu");
  p.lambda = parse_arg(args.lambda, "lambda");
  validate(p);
  if (args.points < 2 || !(args.from >= 0.0) || !(args.to > args.from)) throw usage_error("need points >= 2 and 0 <= from < to");
  const NumericTau tau = solve_tau_numeric(strength_param(p.mu), args.order);
  const WaveSeries<Rational> wave = wave_coefficients(tau, args.n_max);

  std::vector<double> xs(static_cast<std::size_t>(args.points));
  for (int i = 0; i < args.points; ++i) xs[i] = args.from + (args.to - args.from) * i / (args.points - 1);
  std::vector<double> series(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) series[i] = wavefunction_eval(xs[i], p, wave, args.n_max + 1);

  std::vector<double> reference;
  if (args.oracle) {
    oracle::ShootingConfig c = oracle::default_shooting_config(p);
    args.shooting.apply(c);
    const auto eig = oracle::find_kappa<double>(p, c);
    std::vector<double> at = xs;
    at.push_back(args.norm_x);
    std::vector<double> prof = oracle::Shooter<double>(p, c).profile(eig.kappa, at);
    const double scale = wavefunction_eval(args.norm_x, p, wave, args.n_max + 1) / prof.back();
    prof.pop_back();
    for (double& v : prof) v *= scale;
    reference = std::move(prof);
  }

  std::ostringstream text;
  text << (args.oracle ? "x,psi_series,psi_oracle,abs_diff\n" : "x,psi_series\n");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    text << num(xs[i]) << "," << num(series[i]);
    if (args.oracle) text << "," << num(reference[i]) << "," << num(std::abs(series[i] - reference[i]));
    text << "\n";
  }
  emit(text.str(), args.output, out);
  return ok;
}

// ---- unperturbed

struct UnperturbedArgs {
  std::string mu;
  int level = 0;
  int parity = 0;
  Output output;
};

inline int unperturbed(const UnperturbedArgs& args, std::ostream& out) {
  const Rational mu = parse_arg(args.mu, "mu");
  UnperturbedState s;
  try {
    s = unperturbed_state(mu, args.level, args.parity);
  } catch (const domain_error& e) {
    throw usage_error(e.what());
  }
  std::ostringstream text;
  if (args.output.format == "json") {
    json j;
    j["mu"] = mu.to_string();
    j["level"] = args.level;
    j["parity"] = args.parity;
    j["kappa"] = s.kappa0.to_string();
    j["energy"] = (-(s.kappa0 * s.kappa0)).to_string();
    json c = json::array();
    for (const auto& v : s.coeffs) c.push_back(v.to_string());
    j["coefficients"] = std::move(c);
    text << dump(j);
  } else {
    text << "kappa = " << s.kappa0 << "\n";
    text << "E = " << -(s.kappa0 * s.kappa0) << "\n";
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) text << "c_" << n << " = " << s.coeffs[n] << "\n";
  }
  emit(text.str(), args.output, out);
  return ok;
}

// ---- verify

struct VerifyArgs {
  std::string mu = "2";
  int order = 5;
  std::string lambdas = "0.02,0.01,0.005,0.0025";
  bool check = false;
  bool serial = false;
  Output output;
};

inline std::vector<Rational> parse_list(const std::string& list) {
  std::vector<Rational> v;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) v.push_back(parse_arg(item, "lambda"));
  if (v.empty()) throw usage_error("empty lambda list");
  return v;
}

inline int verify(const VerifyArgs& args, std::ostream& out) {
  const Rational mu = parse_arg(args.mu, "mu");
  if (mu.sign() <= 0) throw usage_error("mu must be positive");
  const auto lambdas = parse_list(args.lambdas);
  for (const auto& l : lambdas)
    if (abs(l) > Rational(1, 20)) throw usage_error("lambda outside |lambda| <= 0.05");
  const analysis::OrderScan scan = analysis::order_error_scan(mu, lambdas, args.order, !args.serial);

  const double lo = args.order + 0.5, hi = args.order + 1.5;
  const bool pass = scan.slope_valid && scan.slope >= lo && scan.slope <= hi;

  std::ostringstream text;
  if (args.output.format == "json") {
    json j;
    j["mu"] = mu.to_string();
    j["order"] = args.order;
    json rows = json::array();
    for (const auto& r : scan.rows) {
      json row;
      row["lambda"] = r.lambda.to_string();
      row["energy_series"] = r.energy_series.to_double();
      row["energy_oracle"] = real_to_string(r.energy_oracle, 34);
      row["abs_diff"] = r.abs_delta;
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    if (scan.slope_valid) j["slope"] = scan.slope;
    if (args.check) j["pass"] = pass;
    text << dump(j);
  } else if (args.output.format == "csv") {
    text << "lambda,energy_series,energy_oracle,abs_diff\n";
    for (const auto& r : scan.rows)
      text << num(r.lambda.to_double()) << "," << num(r.energy_series.to_double()) << ","
           << real_to_string(r.energy_oracle, 34) << "," << num(r.abs_delta) << "\n";
  } else {
    for (const auto& r : scan.rows)
      text << "lambda = " << r.lambda << "  E_series = " << brief(r.energy_series.to_double())
           << "  |delta| = " << brief(r.abs_delta) << "\n";
    if (scan.slope_valid) text << "slope = " << brief(scan.slope) << "\n";
    if (args.check) text << (pass ? "PASS" : "FAIL") << " (slope window [" << lo << ", " << hi << "])\n";
  }
  emit(text.str(), args.output, out);
  return args.check && !pass ? verification : ok;
}

// ---- analyze

struct AnalyzeArgs {
  std::string mu, a;
  int order = 5;
  bool tail = false;
  bool structure = false;
  std::string radius;
  double epsilon = 0.0;
  int n_lo = 1000, n_hi = 10000;
  bool check = false;
  Output output;
};

inline const char* method_name(analysis::RadiusMethod m) {
  return m == analysis::RadiusMethod::ratio ? "ratio" : "root";
}

inline int analyze(const AnalyzeArgs& args, std::ostream& out) {
  const bool none = !args.tail && !args.structure && args.radius.empty();
  const bool do_tail = args.tail || none;
  const bool do_structure = args.structure || none;
  bool pass = true;
  json j;
  std::ostringstream text;

  if (do_tail) {
    const Rational a = args.mu.empty() && args.a.empty() ? strength_param(Rational(2)) : strength_from(args.mu, args.a);
    const double mu = mu_from_strength(a).to_double();
    const double exponent = analysis::tail_fit(args.epsilon, mu, args.n_lo, args.n_hi);
    const bool ok_tail = exponent >= -1.6 && exponent <= -1.4;
    pass = pass && ok_tail;
    j["tail"] = {{"mu", mu_from_strength(a).to_string()}, {"epsilon", args.epsilon}, {"n_lo", args.n_lo},
                 {"n_hi", args.n_hi}, {"exponent", exponent}};
    text << "tail exponent (mu = " << mu_from_strength(a) << ", epsilon = " << brief(args.epsilon) << ", n in ["
         << args.n_lo << ", " << args.n_hi << "]) = " << brief(exponent) << "\n";
  }

  if (do_structure) {
    if (args.order < 2) throw usage_error("structure needs --order >= 2");
    const SymbolicTau tau = solve_tau_symbolic(args.order, solve_options());
    json reports = json::array();
    for (int k = 2; k <= args.order; ++k) {
      const auto r = analysis::structure_check(tau.moment(k), k);
      pass = pass && r.matches_ansatz();
      json ex;
      for (const auto& [name, e] : r.denominator_exponents) ex[name] = e;
      reports.push_back({{"K", k},
                         {"prefactor_pow2", r.prefactor_pow2},
                         {"numerator_extra", io::integer_list(r.numerator_extra)},
                         {"denominator_exponents", ex},
                         {"degree_L", r.degree_L},
                         {"expected_degree_L", r.expected_degree_L},
                         {"numerator_divisible", r.numerator_divisible},
                         {"denominator_pattern", r.denominator_pattern},
                         {"prefactor_power_of_two", r.prefactor_power_of_two},
                         {"degree_law", r.degree_law},
                         {"integral_coefficients", r.integral_coefficients}});
      text << "K = " << k << ": M = " << r.prefactor_pow2 << ", deg D = " << r.degree_L << " (expected "
           << r.expected_degree_L << "), denominator";
      for (const auto& [name, e] : r.denominator_exponents) text << " " << name << "^" << e;
      text << ", " << (r.matches_ansatz() ? "matches" : "MISMATCH") << "\n";
      text << "  D = " << io::format_polynomial(r.numerator_extra) << "\n";
    }
    j["structure"] = std::move(reports);
  }

  if (!args.radius.empty()) {
    const Rational a = strength_from(args.mu, args.a);
    const auto m = args.radius == "ratio" ? analysis::RadiusMethod::ratio : analysis::RadiusMethod::root;
    if (args.order < 6) throw usage_error("radius estimation needs --order >= 6");
    const auto r = analysis::radius_estimate(solve_tau_numeric(a, args.order), m);
    json seq = json::array();
    for (std::size_t i = 0; i < r.orders.size(); ++i) seq.push_back({{"k", r.orders[i]}, {"estimate", r.estimates[i]}});
    j["radius"] = {{"a", a.to_string()}, {"method", method_name(m)}, {"sequence", seq}, {"skipped", r.skipped}};
    text << "radius estimates (" << method_name(m) << ", a = " << a << "):\n";
    for (std::size_t i = 0; i < r.orders.size(); ++i) text << "  k = " << r.orders[i] << ": " << brief(r.estimates[i]) << "\n";
    for (int k : r.skipped) text << "  k = " << k << ": skipped (zero coefficient)\n";
  }

  if (args.check) {
    j["pass"] = pass;
    text << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(args.output.format == "json" ? dump(j) : text.str(), args.output, out);
  return args.check && !pass ? verification : ok;
}

}  // namespace detail

/// Parses argv, runs one subcommand and returns its exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Perturbation expansion of the sech^4-perturbed Poschl-Teller well", "ppt"};
  app.require_subcommand(1);

  ExpandArgs ex;
  auto* c_expand = app.add_subcommand("expand", "tau moments, symbolic in a or at fixed a");
  c_expand->add_option("--mu", ex.mu, "well depth mu (exact: 2, 5/2, 1.5)");
  c_expand->add_option("--a", ex.a, "strength parameter a = (2 mu + 1)/4");
  c_expand->add_flag("--symbolic", ex.symbolic, "rational functions of a");
  c_expand->add_option("--order,-K", ex.order, "expansion order")->check(CLI::NonNegativeNumber)->capture_default_str();
  add_output(c_expand, ex.output, {"text", "json"});

  EnergyArgs en;
  auto* c_energy = app.add_subcommand("energy", "ground-state kappa and energy");
  c_energy->add_option("--mu", en.mu)->required();
  c_energy->add_option("--lambda", en.lambda)->capture_default_str();
  c_energy->add_option("--order,-K", en.order)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_energy->add_flag("--oracle", en.oracle, "compare with the shooting solver");
  c_energy->add_option("--precision", en.precision, "oracle arithmetic")
      ->check(CLI::IsMember({"double", "quad"}))
      ->capture_default_str();
  c_energy->add_option("--tolerance", en.tolerance, "fail (exit 3) if |E_series - E_oracle| exceeds this");
  add_shooting(c_energy, en.shooting);
  add_output(c_energy, en.output, {"text", "json"});

  WaveArgs wv;
  auto* c_wave = app.add_subcommand("wavefunction", "ground-state wave function samples as CSV");
  c_wave->add_option("--mu", wv.mu)->required();
  c_wave->add_option("--lambda", wv.lambda)->capture_default_str();
  c_wave->add_option("--order,-K", wv.order)->check(CLI::PositiveNumber)->capture_default_str();
  c_wave->add_option("--n-max", wv.n_max)->check(CLI::PositiveNumber)->capture_default_str();
  c_wave->add_option("--from", wv.from)->capture_default_str();
  c_wave->add_option("--to", wv.to)->capture_default_str();
  c_wave->add_option("--points", wv.points)->capture_default_str();
  c_wave->add_option("--norm-x", wv.norm_x, "oracle is scaled to the series here")->capture_default_str();
  c_wave->add_flag("--oracle", wv.oracle);
  add_shooting(c_wave, wv.shooting);
  add_output(c_wave, wv.output, {"csv"});

  UnperturbedArgs un;
  auto* c_unp = app.add_subcommand("unperturbed", "exact lambda = 0 state");
  c_unp->add_option("--mu", un.mu)->required();
  c_unp->add_option("--level,-N", un.level)->capture_default_str();
  c_unp->add_option("--parity,-p", un.parity)->capture_default_str();
  add_output(c_unp, un.output, {"text", "json"});

  VerifyArgs vf;
  auto* c_verify = app.add_subcommand("verify", "energy error against the oracle over several lambda");
  c_verify->add_option("--mu", vf.mu)->capture_default_str();
  c_verify->add_option("--order,-K", vf.order)->check(CLI::PositiveNumber)->capture_default_str();
  c_verify->add_option("--lambdas", vf.lambdas, "comma-separated")->capture_default_str();
  c_verify->add_flag("--check", vf.check, "exit 3 unless the log-log slope is within [K+0.5, K+1.5]");
  c_verify->add_flag("--serial", vf.serial, "one row at a time");
  add_output(c_verify, vf.output, {"text", "json", "csv"});

  AnalyzeArgs an;
  auto* c_an = app.add_subcommand("analyze", "tail, radius and structure diagnostics");
  c_an->add_option("--mu", an.mu);
  c_an->add_option("--a", an.a);
  c_an->add_option("--order,-K", an.order)->check(CLI::NonNegativeNumber)->capture_default_str();
  c_an->add_flag("--tail", an.tail);
  c_an->add_flag("--structure", an.structure);
  c_an->add_option("--radius", an.radius, "ratio or root")->check(CLI::IsMember({"ratio", "root"}));
  c_an->add_option("--epsilon", an.epsilon)->capture_default_str();
  c_an->add_option("--n-lo", an.n_lo)->capture_default_str();
  c_an->add_option("--n-hi", an.n_hi)->capture_default_str();
  c_an->add_flag("--check", an.check, "exit 3 if a selected report fails");
  add_output(c_an, an.output, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    if (c_expand->parsed()) return expand(ex, out);
    if (c_energy->parsed()) return energy(en, out, err);
    if (c_wave->parsed()) return wavefunction(wv, out);
    if (c_unp->parsed()) return unperturbed(un, out);
    if (c_verify->parsed()) return verify(vf, out);
    if (c_an->parsed()) return analyze(an, out);
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const order_guard_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return computation;
  }
  return usage;
}

}  // namespace ppt::cli
