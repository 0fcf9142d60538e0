// wigner-ck: one binary exposing every engine that computes the second-order
// correlation function of Wigner characteristic polynomials, plus the
// limit-law convergence study, with JSON/CSV/table output.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "wck/asymptotics.hpp"
#include "wck/contour.hpp"
#include "wck/errors.hpp"
#include "wck/genfun.hpp"
#include "wck/moments.hpp"
#include "wck/montecarlo.hpp"
#include "wck/oracle.hpp"
#include "wck/recursion.hpp"
#include "wck/report.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kLog10E = 0.43429448190325182765;

// Numeric flags accept either an exact "p/q" literal or a decimal.
double parse_real_flag(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    return wck::parse_rational(text).get_d();
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("not a number (want decimal or p/q): " + text);
  }
  return value;
}

std::complex<double> parse_complex_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real_flag(text), 0.0};
  if (text.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("not a complex literal (want re,im): " + text);
  }
  return {parse_real_flag(text.substr(0, comma)),
          parse_real_flag(text.substr(comma + 1))};
}

std::string format_complex(std::complex<double> z) {
  return wck::format_double(z.real()) + "," + wck::format_double(z.imag());
}

wck::Rational factorial_rational(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return wck::Rational(f);
}

double log10_factorial(long n) {
  return std::lgamma(static_cast<double>(n) + 1.0) * kLog10E;
}

ordered_json scaled_json(const wck::ScaledFields& fields) {
  return ordered_json{{"log10_abs", fields.log10_abs},
                      {"sign_or_phase", fields.sign_or_phase}};
}

wck::ScaledFields rational_fields(const wck::Rational& q) {
  if (sgn(q) == 0) return {-std::numeric_limits<double>::infinity(), 0.0};
  return {wck::log10_abs(q), sgn(q) > 0 ? 1.0 : -1.0};
}

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
};

void attach_output_options(CLI::App* sub, OutputOptions& opts, bool allow_csv) {
  const std::string choices = allow_csv ? "json, csv, or table" : "json or table";
  sub->add_option("--format", opts.format, "Output format: " + choices)
      ->default_val("json")
      ->check(allow_csv ? CLI::IsMember({"json", "csv", "table"})
                        : CLI::IsMember({"json", "table"}));
  sub->add_option("--out", opts.out_path,
                  "Write output to this file instead of stdout");
}

void write_output(const OutputOptions& opts, const std::string& content) {
  if (opts.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + opts.out_path);
  file << content;
}

std::string render_key_values(const ordered_json& config, const ordered_json& body) {
  std::string out;
  for (const auto& [key, value] : config.items()) {
    out += "config." + key + ": " +
           (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  std::function<void(const std::string&, const ordered_json&)> walk =
      [&](const std::string& prefix, const ordered_json& node) {
        if (node.is_object()) {
          for (const auto& [key, value] : node.items()) {
            walk(prefix.empty() ? key : prefix + "." + key, value);
          }
        } else if (node.is_array()) {
          for (std::size_t i = 0; i < node.size(); ++i) {
            walk(prefix + "[" + std::to_string(i) + "]", node[i]);
          }
        } else {
          out += prefix + ": " +
                 (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
        }
      };
  walk("", body);
  return out;
}

void emit_report(const OutputOptions& opts, const ordered_json& config,
                 const ordered_json& body) {
  if (opts.format == "table") {
    write_output(opts, render_key_values(config, body));
    return;
  }
  ordered_json doc;
  doc["config"] = config;
  for (const auto& [key, value] : body.items()) doc[key] = value;
  write_output(opts, doc.dump(2) + "\n");
}

// ---------------------------------------------------------------- recursion

struct RecursionOptions {
  long n = 0;
  std::string mu = "0";
  std::string nu = "0";
  std::string b = "3";
  std::string engine = "collapsed";
  bool exact = false;
  bool complex_mode = false;
  OutputOptions out;
};

int run_recursion(const RecursionOptions& opt) {
  const wck::Engine engine = wck::parse_engine(opt.engine);
  const wck::Rational b = wck::parse_rational(opt.b);
  ordered_json config{{"subcommand", "recursion"}, {"n", opt.n}};
  ordered_json body;
  body["n"] = opt.n;
  body["engine"] = opt.engine;
  const double lf = log10_factorial(opt.n);

  if (opt.exact) {
    const wck::Rational mu = wck::parse_rational(opt.mu);
    const wck::Rational nu = wck::parse_rational(opt.nu);
    config["mu"] = wck::to_string(mu);
    config["nu"] = wck::to_string(nu);
    config["mode"] = "exact";
    wck::CorrelationQuery<wck::Rational> q{opt.n, mu, nu, b};
    const wck::Rational c = wck::correlation_at(q, engine);
    const wck::Rational f = c * factorial_rational(opt.n);
    body["c_of_n"] = wck::to_string(c);
    auto fields = rational_fields(f);
    body["f"] = ordered_json{{"exact", wck::to_string(f)},
                             {"log10_abs", fields.log10_abs},
                             {"sign_or_phase", fields.sign_or_phase}};
  } else if (opt.complex_mode) {
    const std::complex<double> mu = parse_complex_flag(opt.mu);
    const std::complex<double> nu = parse_complex_flag(opt.nu);
    config["mu"] = format_complex(mu);
    config["nu"] = format_complex(nu);
    config["mode"] = "complex";
    wck::CorrelationQuery<wck::ScaledComplex> q{opt.n, wck::scaled_from(mu),
                                                wck::scaled_from(nu), b};
    const wck::ScaledComplex c = wck::correlation_at(q, engine);
    auto c_fields = wck::scaled_fields(c);
    body["c_of_n"] = scaled_json(c_fields);
    body["f"] = scaled_json({c_fields.log10_abs + lf, c_fields.sign_or_phase});
  } else {
    const double mu = parse_real_flag(opt.mu);
    const double nu = parse_real_flag(opt.nu);
    config["mu"] = wck::format_double(mu);
    config["nu"] = wck::format_double(nu);
    config["mode"] = "real";
    wck::CorrelationQuery<wck::ScaledReal> q{opt.n, wck::scaled_from_real(mu),
                                             wck::scaled_from_real(nu), b};
    const wck::ScaledReal c = wck::correlation_at(q, engine);
    auto c_fields = wck::scaled_fields(c);
    body["c_of_n"] = scaled_json(c_fields);
    body["f"] = scaled_json({c_fields.log10_abs + lf, c_fields.sign_or_phase});
  }
  config["b"] = wck::to_string(b);
  config["engine"] = opt.engine;
  config["format"] = opt.out.format;
  emit_report(opt.out, config, body);
  return 0;
}

// ------------------------------------------------------------------- genfun

struct GenfunOptions {
  long order = 0;
  std::string mu = "0";
  std::string nu = "0";
  std::string b = "3";
  bool exact = false;
  OutputOptions out;
};

int run_genfun(const GenfunOptions& opt) {
  const wck::Rational b = wck::parse_rational(opt.b);
  ordered_json config{{"subcommand", "genfun"}, {"order", opt.order}};
  ordered_json coefficients = ordered_json::array();

  if (opt.exact) {
    const wck::Rational mu = wck::parse_rational(opt.mu);
    const wck::Rational nu = wck::parse_rational(opt.nu);
    config["mu"] = wck::to_string(mu);
    config["nu"] = wck::to_string(nu);
    config["mode"] = "exact";
    const auto series = wck::egf_coefficients(opt.order, mu, nu, b);
    for (const auto& c : series.a) coefficients.push_back(wck::to_string(c));
  } else {
    const double mu = parse_real_flag(opt.mu);
    const double nu = parse_real_flag(opt.nu);
    config["mu"] = wck::format_double(mu);
    config["nu"] = wck::format_double(nu);
    config["mode"] = "real";
    const auto series = wck::egf_coefficients(opt.order, wck::scaled_from_real(mu),
                                              wck::scaled_from_real(nu), b);
    for (const auto& c : series.a) coefficients.push_back(scaled_json(wck::scaled_fields(c)));
  }
  config["b"] = wck::to_string(b);
  config["format"] = opt.out.format;
  ordered_json body;
  body["order"] = opt.order;
  body["coefficients"] = coefficients;
  emit_report(opt.out, config, body);
  return 0;
}

// ------------------------------------------------------------------ contour

struct ContourOptions {
  long n = 0;
  std::string mu = "0";
  std::string nu = "0";
  std::string b = "3";
  double tolerance = 1e-10;
  OutputOptions out;
};

int run_contour(const ContourOptions& opt) {
  const wck::Rational b = wck::parse_rational(opt.b);
  const double mu = parse_real_flag(opt.mu);
  const double nu = parse_real_flag(opt.nu);
  const auto spec = wck::make_contour_spec(opt.n, opt.tolerance);
  const wck::ScaledReal c = wck::contour_correlation(spec, mu, nu, b);
  const auto c_fields = wck::scaled_fields(c);

  ordered_json config{{"subcommand", "contour"},
                      {"n", opt.n},
                      {"mu", wck::format_double(mu)},
                      {"nu", wck::format_double(nu)},
                      {"b", wck::to_string(b)},
                      {"tolerance", opt.tolerance},
                      {"format", opt.out.format}};
  ordered_json body;
  body["n"] = opt.n;
  body["radius"] = spec.radius;
  body["c_of_n"] = scaled_json(c_fields);
  body["f"] = scaled_json({c_fields.log10_abs + log10_factorial(opt.n),
                           c_fields.sign_or_phase});
  emit_report(opt.out, config, body);
  return 0;
}

// ------------------------------------------------------------------- oracle

struct OracleOptions {
  long n = 1;
  std::string mu = "0";
  std::string nu = "0";
  std::string b = "3";
  std::string m3 = "0";
  OutputOptions out;
};

int run_oracle(const OracleOptions& opt) {
  const wck::Rational mu = wck::parse_rational(opt.mu);
  const wck::Rational nu = wck::parse_rational(opt.nu);
  const wck::Rational b = wck::parse_rational(opt.b);
  const wck::Rational m3 = wck::parse_rational(opt.m3);
  const wck::MomentProfile profile(m3, b);
  const wck::Rational f = wck::brute_force_correlation(opt.n, mu, nu, profile);
  const wck::Rational c = f / factorial_rational(opt.n);

  ordered_json config{{"subcommand", "oracle"},     {"n", opt.n},
                      {"mu", wck::to_string(mu)},   {"nu", wck::to_string(nu)},
                      {"b", wck::to_string(b)},     {"m3", wck::to_string(m3)},
                      {"format", opt.out.format}};
  const auto fields = rational_fields(f);
  ordered_json body;
  body["n"] = opt.n;
  body["c_of_n"] = wck::to_string(c);
  body["f"] = ordered_json{{"exact", wck::to_string(f)},
                           {"log10_abs", fields.log10_abs},
                           {"sign_or_phase", fields.sign_or_phase}};
  emit_report(opt.out, config, body);
  return 0;
}

// --------------------------------------------------------------- montecarlo

struct MonteCarloOptions {
  long n = 1;
  std::string mu = "0";
  std::string nu = "0";
  std::string dist = "gaussian";
  long samples = 10000;
  std::uint64_t seed = 1;
  int threads = 0;
  bool compare_recursion = false;
  OutputOptions out;
};

int run_montecarlo(const MonteCarloOptions& opt) {
  const wck::DistributionTag tag = wck::parse_distribution(opt.dist);
  const double mu = parse_real_flag(opt.mu);
  const double nu = parse_real_flag(opt.nu);
  const auto est =
      wck::estimate_correlation(opt.n, mu, nu, tag, opt.samples, opt.seed, opt.threads);

  ordered_json config{{"subcommand", "montecarlo"},
                      {"n", opt.n},
                      {"mu", wck::format_double(mu)},
                      {"nu", wck::format_double(nu)},
                      {"dist", wck::to_string(tag)},
                      {"samples", opt.samples},
                      {"seed", opt.seed},
                      {"threads", opt.threads},
                      {"compare_recursion", opt.compare_recursion},
                      {"format", opt.out.format}};
  ordered_json body;
  body["mean"] = est.mean;
  body["std_error"] = est.std_error;
  body["n_samples"] = est.n_samples;
  if (opt.compare_recursion) {
    const wck::MomentProfile profile = wck::profile_of(tag);
    wck::CorrelationQuery<wck::ScaledReal> q{opt.n, wck::scaled_from_real(mu),
                                             wck::scaled_from_real(nu),
                                             profile.fourth_moment_b};
    const double c = wck::scaled_to(wck::correlation_at(q, wck::Engine::collapsed));
    double factorial = 1.0;
    for (long i = 2; i <= opt.n; ++i) factorial *= static_cast<double>(i);
    const double reference = c * factorial;
    body["reference"] = reference;
    body["deviation_in_se"] = (est.mean - reference) / est.std_error;
  }
  emit_report(opt.out, config, body);
  return 0;
}

// -------------------------------------------------------------------- limit

struct LimitOptions {
  std::string xi = "0";
  std::string mu = "0";
  std::string nu = "0";
  std::string b = "3";
  std::vector<long> n_list;
  bool proposition = false;
  std::string eta_re = "0";
  std::string eta_im = "0";
  std::string xi_offset = "0";
  std::string engine = "collapsed";
  bool csv = false;
  bool json = false;
  OutputOptions out;
};

int run_limit(const LimitOptions& opt) {
  wck::LimitQuery q;
  q.form = opt.proposition ? wck::LimitForm::proposition : wck::LimitForm::theorem;
  q.xi = parse_real_flag(opt.xi);
  q.mu = parse_real_flag(opt.mu);
  q.nu = parse_real_flag(opt.nu);
  q.eta = {parse_real_flag(opt.eta_re), parse_real_flag(opt.eta_im)};
  q.b = wck::parse_rational(opt.b);
  q.xi_offset = parse_real_flag(opt.xi_offset);

  OutputOptions out = opt.out;
  if (opt.csv) out.format = "csv";
  if (opt.json) out.format = "json";

  ordered_json config{{"subcommand", "limit"},
                      {"form", opt.proposition ? "proposition" : "theorem"},
                      {"xi", wck::format_double(q.xi)},
                      {"mu", wck::format_double(q.mu)},
                      {"nu", wck::format_double(q.nu)},
                      {"eta", format_complex(q.eta)},
                      {"xi_offset", wck::format_double(q.xi_offset)},
                      {"b", wck::to_string(q.b)},
                      {"n_list", opt.n_list},
                      {"engine", opt.engine},
                      {"format", out.format}};

  const auto rows = wck::convergence_study(q, opt.n_list, wck::parse_engine(opt.engine));

  if (out.format == "csv") {
    write_output(out, "# config: " + config.dump() + "\n" + wck::emit_csv(rows));
    return 0;
  }
  if (out.format == "table") {
    std::string text;
    for (const auto& [key, value] : config.items()) {
      text += "config." + key + ": " +
              (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    write_output(out, text + wck::format_table(rows));
    return 0;
  }
  ordered_json rows_json = ordered_json::array();
  for (const auto& row : rows) {
    rows_json.push_back(ordered_json{{"n", row.n},
                                     {"lhs_re", row.lhs.real()},
                                     {"lhs_im", row.lhs.imag()},
                                     {"rhs_re", row.rhs.real()},
                                     {"rhs_im", row.rhs.imag()},
                                     {"error", row.error},
                                     {"error_is_absolute", row.error_is_absolute}});
  }
  ordered_json body;
  body["rows"] = rows_json;
  emit_report(out, config, body);
  return 0;
}

// --------------------------------------------------------------- crosscheck

struct CrosscheckOptions {
  long n_max = 6;
  OutputOptions out;
};

int run_crosscheck(const CrosscheckOptions& opt) {
  const std::array<wck::Rational, 4> shifts = {wck::Rational(0), wck::Rational(1, 2),
                                               wck::Rational(-1, 3), wck::Rational(2)};
  const std::array<wck::Rational, 4> fourth_moments = {
      wck::Rational(1), wck::Rational(5, 2), wck::Rational(3), wck::Rational(13, 4)};
  long points = 0;
  for (long n = 1; n <= opt.n_max; ++n) {
    const wck::Rational fact = factorial_rational(n);
    for (const auto& mu : shifts) {
      for (const auto& nu : shifts) {
        for (const auto& b : fourth_moments) {
          const wck::MomentProfile profile(wck::Rational(0), b);
          const wck::Rational f_oracle = wck::brute_force_correlation(n, mu, nu, profile);
          wck::CorrelationQuery<wck::Rational> q{n, mu, nu, b};
          const wck::Rational c_coupled = wck::correlation_at(q, wck::Engine::coupled);
          const wck::Rational c_collapsed =
              wck::correlation_at(q, wck::Engine::collapsed);
          const wck::Rational c_egf = wck::egf_sequence(q).value();
          const bool agree = c_coupled == c_collapsed && c_collapsed == c_egf &&
                             c_coupled * fact == f_oracle;
          if (!agree) {
            throw wck::NumericalError(
                "engine disagreement at N=" + std::to_string(n) + " mu=" +
                wck::to_string(mu) + " nu=" + wck::to_string(nu) + " b=" +
                wck::to_string(b));
          }
          ++points;
        }
      }
    }
  }
  ordered_json config{{"subcommand", "crosscheck"},
                      {"n_max", opt.n_max},
                      {"format", opt.out.format}};
  ordered_json body;
  body["engines"] = ordered_json::array({"oracle", "coupled", "collapsed", "egf"});
  body["points_checked"] = points;
  body["result"] = "all engines agree";
  emit_report(opt.out, config, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wigner-ck: second-order correlation function of Wigner characteristic "
      "polynomials, by exact recursions, generating-function coefficients, "
      "contour quadrature, brute-force moment expansion, Monte Carlo sampling, "
      "and the asymptotic limit law"};
  app.require_subcommand(1);

  RecursionOptions rec_opt;
  auto* rec = app.add_subcommand(
      "recursion", "Evaluate c(N) = f(N)/N! by the coupled or collapsed recursion");
  rec->add_option("--n", rec_opt.n, "Matrix size N (>= 0)")->required();
  rec->add_option("--mu", rec_opt.mu, "First shift (p/q or decimal; re,im with --complex)");
  rec->add_option("--nu", rec_opt.nu, "Second shift (p/q or decimal; re,im with --complex)");
  rec->add_option("--b", rec_opt.b, "Fourth moment of the entry law (rational, >= 1)");
  rec->add_option("--engine", rec_opt.engine, "Recursion flavor: coupled or collapsed")
      ->check(CLI::IsMember({"coupled", "collapsed"}));
  auto* rec_exact = rec->add_flag("--exact", rec_opt.exact,
                                  "Exact rational arithmetic (mu, nu as p/q)");
  rec->add_flag("--complex", rec_opt.complex_mode,
                "Complex shifts mu, nu given as re,im")
      ->excludes(rec_exact);
  attach_output_options(rec, rec_opt.out, false);

  GenfunOptions gen_opt;
  auto* gen = app.add_subcommand(
      "genfun", "Taylor coefficients c(0..M) of the generating function");
  gen->add_option("--order", gen_opt.order, "Highest coefficient order M (>= 0)")
      ->required();
  gen->add_option("--mu", gen_opt.mu, "First shift (p/q or decimal)");
  gen->add_option("--nu", gen_opt.nu, "Second shift (p/q or decimal)");
  gen->add_option("--b", gen_opt.b, "Fourth moment of the entry law (rational, >= 1)");
  gen->add_flag("--exact", gen_opt.exact, "Exact rational arithmetic");
  attach_output_options(gen, gen_opt.out, false);

  ContourOptions con_opt;
  auto* con = app.add_subcommand(
      "contour", "Evaluate c(N) by contour quadrature of the generating function");
  con->add_option("--n", con_opt.n, "Matrix size N (>= 0)")->required();
  con->add_option("--mu", con_opt.mu, "First shift (p/q or decimal)");
  con->add_option("--nu", con_opt.nu, "Second shift (p/q or decimal)");
  con->add_option("--b", con_opt.b, "Fourth moment of the entry law (rational, >= 1)");
  con->add_option("--tol", con_opt.tolerance,
                  "Relative tolerance for node-doubling convergence");
  attach_output_options(con, con_opt.out, false);

  OracleOptions ora_opt;
  auto* ora = app.add_subcommand(
      "oracle", "Exact f(N) by brute-force expansion over permutation pairs (N <= 7)");
  ora->add_option("--n", ora_opt.n, "Matrix size N (1..7)")->required();
  ora->add_option("--mu", ora_opt.mu, "First shift (rational p/q)");
  ora->add_option("--nu", ora_opt.nu, "Second shift (rational p/q)");
  ora->add_option("--b", ora_opt.b, "Fourth moment of the entry law (rational, >= 1)");
  ora->add_option("--m3", ora_opt.m3,
                  "Third moment of the entry law (rational; result must not depend on it)");
  attach_output_options(ora, ora_opt.out, false);

  MonteCarloOptions mc_opt;
  auto* mc = app.add_subcommand(
      "montecarlo", "Estimate f(N) by sampling matrices from a catalog distribution");
  mc->add_option("--n", mc_opt.n, "Matrix size N (>= 1)")->required();
  mc->add_option("--mu", mc_opt.mu, "First shift (p/q or decimal)");
  mc->add_option("--nu", mc_opt.nu, "Second shift (p/q or decimal)");
  mc->add_option("--dist", mc_opt.dist,
                 "Entry distribution: gaussian, rademacher, uniform_sym, skewed_two_point")
      ->required();
  mc->add_option("--samples", mc_opt.samples, "Number of sampled matrices (>= 2)")
      ->required();
  mc->add_option("--seed", mc_opt.seed, "64-bit RNG seed");
  mc->add_option("--threads", mc_opt.threads,
                 "Worker threads (0 = WIGNER_CK_THREADS env or hardware count)");
  mc->add_flag("--compare-recursion", mc_opt.compare_recursion,
               "Also report the exact recursion value and the deviation in SE units");
  attach_output_options(mc, mc_opt.out, false);

  LimitOptions lim_opt;
  auto* lim = app.add_subcommand(
      "limit", "Convergence study of the scaled correlation toward the limit law");
  lim->add_option("--xi", lim_opt.xi, "Spectral location xi in (-2, 2) (p/q or decimal)");
  lim->add_option("--mu", lim_opt.mu, "First shift parameter of the limit statement");
  lim->add_option("--nu", lim_opt.nu, "Second shift parameter of the limit statement");
  lim->add_option("--b", lim_opt.b, "Fourth moment of the entry law (rational, >= 1)");
  lim->add_option("--n-list", lim_opt.n_list,
                  "Comma-separated strictly increasing matrix sizes, e.g. 256,1024,4096")
      ->required()
      ->delimiter(',');
  lim->add_flag("--proposition", lim_opt.proposition,
                "Use the complex-shift form around xi_N instead of the theorem form");
  lim->add_option("--eta-re", lim_opt.eta_re, "Real part of the complex shift eta");
  lim->add_option("--eta-im", lim_opt.eta_im, "Imaginary part of the complex shift eta");
  lim->add_option("--xi-offset", lim_opt.xi_offset,
                  "Offset o in xi_N = sqrt(N) xi + o/sqrt(N) (proposition form)");
  lim->add_option("--engine", lim_opt.engine, "Recursion flavor: coupled or collapsed")
      ->check(CLI::IsMember({"coupled", "collapsed"}));
  auto* lim_csv = lim->add_flag("--csv", lim_opt.csv, "Shorthand for --format csv");
  lim->add_flag("--json", lim_opt.json, "Shorthand for --format json")->excludes(lim_csv);
  attach_output_options(lim, lim_opt.out, true);

  CrosscheckOptions cc_opt;
  auto* cc = app.add_subcommand(
      "crosscheck",
      "Verify the oracle, both recursions, and the generating function agree exactly "
      "over the standard parameter grid");
  cc->add_option("--n-max", cc_opt.n_max, "Largest matrix size checked (1..7)")
      ->check(CLI::Range(1, 7));
  attach_output_options(cc, cc_opt.out, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rec->parsed()) return run_recursion(rec_opt);
    if (gen->parsed()) return run_genfun(gen_opt);
    if (con->parsed()) return run_contour(con_opt);
    if (ora->parsed()) return run_oracle(ora_opt);
    if (mc->parsed()) return run_montecarlo(mc_opt);
    if (lim->parsed()) return run_limit(lim_opt);
    if (cc->parsed()) return run_crosscheck(cc_opt);
  } catch (const wck::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
