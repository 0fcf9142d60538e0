#include "wck/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "wck/recursion.hpp"
#include "wck/scaled.hpp"

namespace wck {
namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// 1/(2l+3)! for l = 0..20
struct SeriesTable {
  double inv_fact[21];
  SeriesTable() {
    double fact = 6.0;  // 3!
    inv_fact[0] = 1.0 / fact;
    for (int l = 1; l <= 20; ++l) {
      fact *= (2.0 * l + 2.0) * (2.0 * l + 3.0);
      inv_fact[l] = 1.0 / fact;
    }
  }
};

const SeriesTable kSeries;

}  // namespace

std::complex<double> kernel_T(std::complex<double> x) {
  if (std::abs(x) < 0.5) {
    // sum_l (-1)^l (l+1) x^{2l} / (2l+3)!, truncation < 1e-16 at |x| = 1/2
    const std::complex<double> x2 = x * x;
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> pow(1.0, 0.0);
    for (int l = 0; l <= 20; ++l) {
      const double coeff = (l % 2 == 0 ? 1.0 : -1.0) * (l + 1) * kSeries.inv_fact[l];
      acc += coeff * pow;
      pow *= x2;
    }
    return acc;
  }
  const std::complex<double> x2 = x * x;
  const std::complex<double> x3 = x2 * x;
  return 0.5 * (std::sin(x) / x3 - std::cos(x) / x2);
}

double semicircle_density(double xi) {
  if (!(std::abs(xi) <= 2.0)) {
    throw std::domain_error("semicircle density is defined on [-2, 2]");
  }
  return std::sqrt(4.0 - xi * xi) / (2.0 * kPi);
}

double bessel_j_three_halves(double x) {
  if (!(x > 0)) throw std::domain_error("J_{3/2} closed form requires x > 0");
  return std::sqrt(2.0 / (kPi * x)) * (std::sin(x) / x - std::cos(x));
}

void validate(const LimitQuery& q) {
  if (!(std::abs(q.xi) < 2.0)) {
    throw std::invalid_argument("spectral point must satisfy |xi| < 2 strictly");
  }
  if (q.b < 1) throw std::invalid_argument("fourth moment must be >= 1");
}

double theorem_rhs(const LimitQuery& q) {
  validate(q);
  const double rho = semicircle_density(q.xi);
  const double two_pi_rho = 2.0 * kPi * rho;
  const double kernel = kernel_T({kPi * (q.mu - q.nu), 0.0}).real();
  return cumulant_factor(q.b) * std::exp(q.xi * (q.mu + q.nu) / (2.0 * rho)) *
         two_pi_rho * two_pi_rho * two_pi_rho * kernel;
}

std::complex<double> proposition_rhs(const LimitQuery& q) {
  validate(q);
  const double gap = 4.0 - q.xi * q.xi;
  return cumulant_factor(q.b) * std::pow(gap, 1.5) * kernel_T(std::sqrt(gap) * q.eta);
}

std::complex<double> scaled_lhs(long n, const LimitQuery& q, Engine engine) {
  validate(q);
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  if (engine != Engine::collapsed && engine != Engine::coupled) {
    throw std::invalid_argument("scaled lhs requires a recursion engine");
  }
  const double nd = static_cast<double>(n);
  const double sqrt_n = std::sqrt(nd);
  const double front = std::sqrt(2.0 * kPi / (nd * nd * nd));

  if (q.form == LimitForm::theorem) {
    const double rho = semicircle_density(q.xi);
    const double mu_n = sqrt_n * q.xi + q.mu / (sqrt_n * rho);
    const double nu_n = sqrt_n * q.xi + q.nu / (sqrt_n * rho);
    CorrelationQuery<ScaledReal> cq{n, scaled_from(mu_n), scaled_from(nu_n), q.b};
    ScaledReal c = correlation_at(cq, engine);
    ScaledReal out = c * scaled_exp(-nd * q.xi * q.xi / 2.0) * scaled_from(front);
    return {scaled_to(out), 0.0};
  }

  const double xi_n = sqrt_n * q.xi + q.xi_offset / sqrt_n;
  const std::complex<double> mu_n = xi_n + q.eta / sqrt_n;
  const std::complex<double> nu_n = xi_n - q.eta / sqrt_n;
  CorrelationQuery<ScaledComplex> cq{n, scaled_from(mu_n), scaled_from(nu_n), q.b};
  ScaledComplex c = correlation_at(cq, engine);
  ScaledComplex out = c * scaled_from(std::complex<double>(front, 0.0));
  ScaledReal damp = scaled_exp(-xi_n * xi_n / 2.0);
  out.mantissa *= damp.mantissa;
  out.exponent += damp.exponent;
  return scaled_to(normalize(out.mantissa, out.exponent));
}

std::vector<ConvergenceRow> convergence_study(const LimitQuery& q,
                                              const std::vector<long>& n_list,
                                              Engine engine) {
  validate(q);
  for (size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw std::invalid_argument("N list must be strictly ascending");
    }
  }
  const std::complex<double> rhs = q.form == LimitForm::theorem
                                       ? std::complex<double>(theorem_rhs(q), 0.0)
                                       : proposition_rhs(q);
  // an rhs this small only arises at a zero of T; relative error is
  // meaningless there, so fall back to absolute
  const bool rhs_vanishes = std::abs(rhs) < 1e-12;

  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (long n : n_list) {
    ConvergenceRow row;
    row.n = n;
    row.lhs = scaled_lhs(n, q, engine);
    row.rhs = rhs;
    row.error_is_absolute = rhs_vanishes;
    row.error = rhs_vanishes ? std::abs(row.lhs - rhs) : std::abs(row.lhs - rhs) / std::abs(rhs);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wck
