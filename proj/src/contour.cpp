#include "wck/contour.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace wck {
namespace {

constexpr long kMaxNodes = 1L << 20;
constexpr double kTau = 6.283185307179586476925286766559;  // 2 pi

struct Integrand {
  double radius;
  double half_xi_c_sq;  // xi_c^2 / 2
  double delta_sq;      // delta^2
  double b_star;
  long n;

  // bounded part of the integrand at node j of M, phase of z^{-N} included
  std::complex<double> node(long j, long m) const {
    const double theta = kTau * static_cast<double>(j) / static_cast<double>(m);
    const std::complex<double> z = std::polar(radius, theta);
    const std::complex<double> w = 1.0 - z;
    const std::complex<double> u = 1.0 + z;
    const std::complex<double> expo =
        -half_xi_c_sq * (w / u) - delta_sq / w + b_star * (z * z);
    const std::complex<double> g =
        std::exp(expo) / (std::pow(w, 2.5) * std::sqrt(u));
    // z^{-N} phase by exact integer arithmetic: e^{-i 2 pi (N j mod M) / M}
    const long k = (n * j) % m;
    const double phi = -kTau * static_cast<double>(k) / static_cast<double>(m);
    return g * std::polar(1.0, phi);
  }
};

// fixed-tree pairwise reduction: bit-stable for a given node count
std::complex<double> pairwise_sum(const Integrand& f, long lo, long hi, long m) {
  if (hi - lo <= 64) {
    std::complex<double> acc(0.0, 0.0);
    for (long j = lo; j < hi; ++j) acc += f.node(j, m);
    return acc;
  }
  const long mid = lo + (hi - lo) / 2;
  return pairwise_sum(f, lo, mid, m) + pairwise_sum(f, mid, hi, m);
}

double estimate(const Integrand& f, long m) {
  const std::complex<double> s = pairwise_sum(f, 0, m, m);
  return s.real() / static_cast<double>(m);
}

}  // namespace

ContourSpec make_contour_spec(long n, double tolerance) {
  if (n < 0) throw std::invalid_argument("matrix size must be non-negative");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  ContourSpec spec;
  spec.n = n;
  spec.radius = n >= 2 ? 1.0 - 1.0 / static_cast<double>(n) : 0.5;
  spec.node_count = std::max<long>(64, 64 * n);
  spec.tolerance = tolerance;
  return spec;
}

ScaledReal contour_correlation(const ContourSpec& spec, double mu, double nu,
                               const Rational& b) {
  if (spec.n < 0) throw std::invalid_argument("matrix size must be non-negative");
  if (!(spec.radius > 0.0 && spec.radius < 1.0)) {
    throw std::invalid_argument("contour radius must lie in (0, 1)");
  }
  if (spec.node_count < 16) throw std::invalid_argument("node count must be >= 16");
  if (!(spec.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (b < 1) throw std::invalid_argument("fourth moment must be >= 1");

  const double xi_c = 0.5 * (mu + nu);
  const double delta = 0.5 * (mu - nu);
  Rational b_star_rat = (b - 3) / 2;

  Integrand f;
  f.radius = spec.radius;
  f.half_xi_c_sq = 0.5 * xi_c * xi_c;
  f.delta_sq = delta * delta;
  f.b_star = b_star_rat.get_d();
  f.n = spec.n;

  // pulled-out prefactor: e^{xi_c^2/2 + delta^2} R^{-N}
  const double log_prefactor = f.half_xi_c_sq + f.delta_sq -
                               static_cast<double>(spec.n) * std::log(spec.radius);

  long m = spec.node_count;
  double prev = estimate(f, m);
  double before = prev;
  bool compared = false;
  while (true) {
    const long next = 2 * m;
    if (next > kMaxNodes) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "quadrature stalled after " << m << " nodes; ";
      if (compared) {
        msg << "last estimates " << before << " and " << prev;
      } else {
        msg << "node budget exhausted before two estimates could be compared; "
               "first estimate "
            << prev;
      }
      msg << " (tolerance " << spec.tolerance << ")";
      throw NumericalError(msg.str());
    }
    const double cur = estimate(f, next);
    const double scale = std::max(std::abs(cur), std::abs(prev));
    if (scale == 0.0 || std::abs(cur - prev) <= spec.tolerance * scale) {
      return scaled_from(cur) * scaled_exp(log_prefactor);
    }
    compared = true;
    before = prev;
    prev = cur;
    m = next;
  }
}

}  // namespace wck
