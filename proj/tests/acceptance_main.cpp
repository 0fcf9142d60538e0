// Acceptance gate: ten end-to-end checks, one pass/fail line each.
// Usage: wck_acceptance [--criterion k]   (no argument runs all ten)

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "wck/asymptotics.hpp"
#include "wck/contour.hpp"
#include "wck/genfun.hpp"
#include "wck/moments.hpp"
#include "wck/montecarlo.hpp"
#include "wck/oracle.hpp"
#include "wck/recursion.hpp"

using namespace wck;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

struct CriterionResult {
  bool pass = false;
  std::string detail;
};

Rational factorial_rational(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Exact agreement of all four engines over the full small-N parameter grid.

CriterionResult criterion_1() {
  const std::array<Rational, 4> shifts = {Rational(0), Rational(1, 2), Rational(-1, 3),
                                          Rational(2)};
  const std::array<Rational, 4> fourth_moments = {Rational(1), Rational(5, 2),
                                                  Rational(3), Rational(13, 4)};
  long points = 0;
  for (long n = 1; n <= 6; ++n) {
    const Rational fact = factorial_rational(n);
    for (const auto& mu : shifts) {
      for (const auto& nu : shifts) {
        for (const auto& b : fourth_moments) {
          const MomentProfile profile(Rational(0), b);
          const Rational f_oracle = brute_force_correlation(n, mu, nu, profile);
          CorrelationQuery<Rational> q{n, mu, nu, b};
          const Rational c_coupled = correlation_at(q, Engine::coupled);
          const Rational c_collapsed = correlation_at(q, Engine::collapsed);
          const Rational c_egf = egf_sequence(q).value();
          if (!(c_coupled == c_collapsed && c_collapsed == c_egf &&
                c_coupled * fact == f_oracle)) {
            return {false, "engines disagree at N=" + std::to_string(n) + " mu=" +
                               to_string(mu) + " nu=" + to_string(nu) + " b=" +
                               to_string(b)};
          }
          ++points;
        }
      }
    }
  }
  return {true, "oracle, coupled, collapsed, and generating-function values "
                "identical in exact arithmetic at all " +
                    std::to_string(points) + " grid points"};
}

// ---------------------------------------------------------------------------
// 2. Collapsed recursion and generating function agree exactly to N = 60, and
//    the floating engines track the exact values to 1e-9.

CriterionResult criterion_2() {
  const std::array<std::array<Rational, 3>, 3> triples = {{
      {Rational(0), Rational(0), Rational(3)},
      {Rational(1, 2), Rational(-1, 3), Rational(13, 4)},
      {Rational(2), Rational(1), Rational(1)},
  }};
  const long n_top = 60;
  double worst_float = 0.0;
  for (const auto& t : triples) {
    CorrelationQuery<Rational> q{n_top, t[0], t[1], t[2]};
    const auto exact_seq = collapsed_recursion(q);
    const auto exact_egf = egf_coefficients(n_top, t[0], t[1], t[2]);
    for (long k = 0; k <= n_top; ++k) {
      if (!(exact_seq.c[static_cast<std::size_t>(k)] ==
            exact_egf.a[static_cast<std::size_t>(k)])) {
        return {false, "exact collapsed/generating-function mismatch at order " +
                           std::to_string(k) + " for mu=" + to_string(t[0]) + " nu=" +
                           to_string(t[1]) + " b=" + to_string(t[2])};
      }
    }
    const double reference = exact_seq.value().get_d();
    CorrelationQuery<ScaledReal> qf{n_top, scaled_from_real(t[0].get_d()),
                                    scaled_from_real(t[1].get_d()), t[2]};
    const double via_recursion = scaled_to(correlation_at(qf, Engine::collapsed));
    const double via_egf = scaled_to(egf_sequence(qf).value());
    for (double got : {via_recursion, via_egf}) {
      const double rel = std::fabs(got - reference) / std::fabs(reference);
      worst_float = std::max(worst_float, rel);
      if (!(rel <= 1e-9)) {
        return {false, "floating engine off by " + fmt(rel) + " at N=60 for mu=" +
                           to_string(t[0]) + " nu=" + to_string(t[1]) + " b=" +
                           to_string(t[2])};
      }
    }
  }
  return {true, "exact sequences identical through N=60 on 3 parameter triples; "
                "worst floating-point deviation " +
                    fmt(worst_float) + " <= 1e-09"};
}

// ---------------------------------------------------------------------------
// 3. Contour quadrature reproduces the recursion.

CriterionResult criterion_3() {
  const std::array<std::array<double, 2>, 2> shifts = {{{0.0, 0.0}, {1.0, -0.5}}};
  const std::array<Rational, 2> fourth_moments = {Rational(3), Rational(1)};
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (long n : {10L, 50L, 200L}) {
      const auto spec = make_contour_spec(n);
      const ScaledReal via_contour =
          contour_correlation(spec, shifts[i][0], shifts[i][1], fourth_moments[i]);
      CorrelationQuery<ScaledReal> q{n, scaled_from_real(shifts[i][0]),
                                     scaled_from_real(shifts[i][1]), fourth_moments[i]};
      const ScaledReal via_recursion = correlation_at(q, Engine::collapsed);
      const double ratio = scaled_to(sc_div(via_contour, via_recursion));
      const double rel = std::fabs(ratio - 1.0);
      worst = std::max(worst, rel);
      if (!(rel <= 1e-8)) {
        return {false, "contour differs from recursion by " + fmt(rel) + " at N=" +
                           std::to_string(n) + " mu=" + fmt(shifts[i][0]) + " nu=" +
                           fmt(shifts[i][1])};
      }
    }
  }
  return {true,
          "contour quadrature matches the recursion on all 6 cases; worst relative "
          "gap " + fmt(worst) + " <= 1e-08"};
}

// ---------------------------------------------------------------------------
// 4. Center-of-spectrum determinant constant 4/3.

CriterionResult criterion_4() {
  LimitQuery q;  // xi = mu = nu = 0, b = 3
  const auto rows = convergence_study(q, {256, 1024, 4096});
  if (!(rows[1].error < rows[0].error && rows[2].error < rows[1].error)) {
    return {false, "relative error not strictly decreasing: " + fmt(rows[0].error) +
                       ", " + fmt(rows[1].error) + ", " + fmt(rows[2].error)};
  }
  if (!(rows[2].error <= 0.02)) {
    return {false, "relative error " + fmt(rows[2].error) + " at N=4096 exceeds 2%"};
  }
  return {true, "scaled value " + fmt(rows[2].lhs.real()) + " vs 4/3, error " +
                    fmt(rows[2].error) + " <= 2e-02, decreasing over 256/1024/4096 (" +
                    fmt(rows[0].error) + " > " + fmt(rows[1].error) + " > " +
                    fmt(rows[2].error) + ")"};
}

// ---------------------------------------------------------------------------
// 5. The limit law at generic real parameters.

CriterionResult criterion_5() {
  LimitQuery q;
  q.xi = 0.5;
  q.mu = 0.5;
  q.nu = -0.5;
  const auto rows = convergence_study(q, {256, 1024, 4096});
  if (!(rows[1].error < rows[0].error && rows[2].error < rows[1].error)) {
    return {false, "relative error not strictly decreasing: " + fmt(rows[0].error) +
                       ", " + fmt(rows[1].error) + ", " + fmt(rows[2].error)};
  }
  if (!(rows[2].error <= 0.05)) {
    return {false, "relative error " + fmt(rows[2].error) + " at N=4096 exceeds 5%"};
  }
  return {true, "scaled value within " + fmt(rows[2].error) +
                    " of the limit at N=4096, decreasing over the triple (" +
                    fmt(rows[0].error) + " > " + fmt(rows[1].error) + " > " +
                    fmt(rows[2].error) + ")"};
}

// ---------------------------------------------------------------------------
// 6. The fourth-cumulant factor exp((b-3)/2).

CriterionResult criterion_6() {
  LimitQuery goe;  // b = 3
  LimitQuery minimal = goe;
  minimal.b = Rational(1);
  const double lhs_goe = scaled_lhs(4096, goe).real();
  const double lhs_minimal = scaled_lhs(4096, minimal).real();
  const double ratio = lhs_minimal / lhs_goe;
  const double target = std::exp(-1.0);
  const double rel = std::fabs(ratio - target) / target;
  if (!(rel <= 0.05)) {
    return {false, "b=1 to b=3 ratio " + fmt(ratio) + " differs from exp(-1) by " +
                       fmt(rel)};
  }
  return {true, "b=1/b=3 ratio " + fmt(ratio) + " vs exp(-1)=" + fmt(target) +
                    ", off by " + fmt(rel) + " <= 5e-02"};
}

// ---------------------------------------------------------------------------
// 7. The complex-shift form of the limit law.

CriterionResult criterion_7() {
  LimitQuery q;
  q.form = LimitForm::proposition;
  q.xi = 0.5;
  q.eta = {0.0, 1.0};
  const std::complex<double> lhs = scaled_lhs(4096, q);
  const std::complex<double> rhs = proposition_rhs(q);
  const double rel = std::abs(lhs - rhs) / std::abs(rhs);
  if (!(rel <= 0.05)) {
    return {false, "complex-shift value off by " + fmt(rel) + " at N=4096 (lhs " +
                       fmt(lhs.real()) + "+" + fmt(lhs.imag()) + "i, rhs " +
                       fmt(rhs.real()) + "+" + fmt(rhs.imag()) + "i)"};
  }
  return {true, "complex-shift value within " + fmt(rel) +
                    " of the limit at N=4096 (eta = i, xi = 1/2)"};
}

// ---------------------------------------------------------------------------
// 8. Kernel identities: independent series, pinned value, Bessel form.

CriterionResult criterion_8() {
  // independent 26-term series with directly computed factorials
  auto series_T = [](std::complex<double> x) {
    std::complex<double> sum = 0.0;
    const std::complex<double> x2 = x * x;
    std::complex<double> power = 1.0;
    double fact = 6.0;  // (2l+3)! at l = 0
    for (int l = 0; l <= 25; ++l) {
      const double sign = (l % 2 == 0) ? 1.0 : -1.0;
      sum += sign * static_cast<double>(l + 1) / fact * power;
      power *= x2;
      fact *= static_cast<double>(2 * l + 4) * static_cast<double>(2 * l + 5);
    }
    return sum;
  };

  double worst_disk = 0.0;
  for (int r = 1; r <= 20; ++r) {
    for (int a = 0; a < 24; ++a) {
      const std::complex<double> x =
          std::polar(0.05 * static_cast<double>(r), kPi * static_cast<double>(a) / 12.0);
      worst_disk = std::max(worst_disk, std::abs(kernel_T(x) - series_T(x)));
    }
  }
  if (!(worst_disk <= 1e-12)) {
    return {false, "series/closed-form gap " + fmt(worst_disk) + " on the unit disk"};
  }

  const double at_pi = kernel_T({kPi, 0}).real();
  const double pinned = 1.0 / (2.0 * kPi * kPi);
  if (!(std::fabs(at_pi - pinned) <= 1e-14)) {
    return {false, "T(pi) = " + fmt(at_pi) + " differs from 1/(2 pi^2)"};
  }

  double worst_bessel = 0.0;
  for (int i = 0; i <= 1990; ++i) {
    const double x = 0.1 + 0.01 * static_cast<double>(i);
    const double via_bessel =
        std::sqrt(kPi) * bessel_j_three_halves(x) / std::pow(2.0 * x, 1.5);
    worst_bessel = std::max(worst_bessel, std::fabs(kernel_T({x, 0}).real() - via_bessel));
  }
  if (!(worst_bessel <= 1e-12)) {
    return {false, "Bessel-form gap " + fmt(worst_bessel) + " on [0.1, 20]"};
  }
  return {true, "series gap " + fmt(worst_disk) + " on |x| <= 1, T(pi) exact to 1e-14, "
                "Bessel gap " + fmt(worst_bessel) + " on [0.1, 20]"};
}

// ---------------------------------------------------------------------------
// 9. The third moment of the entry law never reaches the output.

CriterionResult criterion_9() {
  const std::array<Rational, 3> third_moments = {Rational(0), Rational(3, 2),
                                                 Rational(-1)};
  const std::array<std::array<Rational, 3>, 2> cases = {{
      {Rational(1, 2), Rational(-1, 3), Rational(13, 4)},
      {Rational(2), Rational(0), Rational(5, 2)},
  }};
  long comparisons = 0;
  for (const auto& c : cases) {
    for (long n = 1; n <= 5; ++n) {
      const MomentProfile base(third_moments[0], c[2]);
      const Rational reference = brute_force_correlation(n, c[0], c[1], base);
      for (std::size_t k = 1; k < third_moments.size(); ++k) {
        const MomentProfile skewed(third_moments[k], c[2]);
        const Rational got = brute_force_correlation(n, c[0], c[1], skewed);
        if (!(got == reference)) {
          return {false, "oracle value changed with m3=" + to_string(third_moments[k]) +
                             " at N=" + std::to_string(n)};
        }
        ++comparisons;
      }
    }
  }
  return {true, "oracle output identical for m3 in {0, 3/2, -1} over " +
                    std::to_string(comparisons) + " exact comparisons (N <= 5)"};
}

// ---------------------------------------------------------------------------
// 10. Monte Carlo estimates agree with the exact recursion for every catalog
//     distribution, and are bit-identical across worker counts.

CriterionResult criterion_10() {
  const long n = 6;
  const double mu = 0.1;
  const double nu = 0.2;
  const long samples = 200000;
  const std::uint64_t seed = 2026;
  double worst_dev = 0.0;
  for (DistributionTag tag : kDistributionCatalog) {
    const MomentProfile profile = profile_of(tag);
    CorrelationQuery<ScaledReal> q{n, scaled_from_real(mu), scaled_from_real(nu),
                                   profile.fourth_moment_b};
    const double reference = scaled_to(correlation_at(q, Engine::collapsed)) * 720.0;
    const auto one = estimate_correlation(n, mu, nu, tag, samples, seed, 1);
    const auto four = estimate_correlation(n, mu, nu, tag, samples, seed, 4);
    if (one.mean != four.mean || one.std_error != four.std_error) {
      return {false, "estimate depends on the worker count for " + to_string(tag)};
    }
    const double dev = std::fabs(one.mean - reference) / one.std_error;
    worst_dev = std::max(worst_dev, dev);
    if (!(dev <= 4.0)) {
      return {false, to_string(tag) + " estimate " + fmt(one.mean) + " is " + fmt(dev) +
                         " standard errors from the exact value " + fmt(reference)};
    }
  }
  return {true, "all 4 catalog distributions within 4 standard errors of the exact "
                "recursion (worst " +
                    fmt(worst_dev) + " SE) and bit-identical across worker counts"};
}

}  // namespace

int main(int argc, char** argv) {
  long selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::strtol(argv[++i], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion k]   (k in 1..10)\n", argv[0]);
      return 2;
    }
  }
  if (selected < 0 || selected > 10) {
    std::fprintf(stderr, "criterion must lie in 1..10\n");
    return 2;
  }

  using Criterion = CriterionResult (*)();
  const std::array<Criterion, 10> criteria = {
      criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};

  bool all_pass = true;
  for (long k = 1; k <= 10; ++k) {
    if (selected != 0 && k != selected) continue;
    CriterionResult result;
    try {
      result = criteria[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %ld: %s (%s)\n", k, result.pass ? "PASS" : "FAIL",
                result.detail.c_str());
    all_pass = all_pass && result.pass;
  }
  return all_pass ? 0 : 1;
}
