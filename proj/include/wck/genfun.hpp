#pragma once

#include <stdexcept>
#include <vector>

#include "wck/query.hpp"
#include "wck/recursion.hpp"

namespace wck {

// Truncated power series; coefficients a[0..order]. All operations take and
// return series of the same truncation order.
template <class S>
struct PowerSeries {
  std::vector<S> a;

  long order() const { return static_cast<long>(a.size()) - 1; }
};

template <class S>
PowerSeries<S> series_mul(const PowerSeries<S>& x, const PowerSeries<S>& y) {
  using T = scalar_traits<S>;
  if (x.a.size() != y.a.size()) {
    throw std::invalid_argument("series orders must match");
  }
  PowerSeries<S> out;
  out.a.assign(x.a.size(), T::zero());
  const size_t m = x.a.size();
  for (size_t i = 0; i < m; ++i) {
    if (T::is_zero(x.a[i])) continue;
    for (size_t j = 0; i + j < m; ++j) {
      out.a[i + j] = out.a[i + j] + x.a[i] * y.a[j];
    }
  }
  return out;
}

// exp of a series with zero constant term, via e' = p'·e:
// n e_n = sum_{k=1..n} k p_k e_{n-k}.
template <class S>
PowerSeries<S> series_exp(const PowerSeries<S>& p) {
  using T = scalar_traits<S>;
  if (!p.a.empty() && !T::is_zero(p.a[0])) {
    throw std::invalid_argument("series exp requires zero constant term");
  }
  PowerSeries<S> e;
  e.a.assign(p.a.size(), T::zero());
  if (e.a.empty()) return e;
  e.a[0] = T::one();
  const long m = p.order();
  for (long n = 1; n <= m; ++n) {
    S acc = T::zero();
    for (long k = 1; k <= n; ++k) {
      if (T::is_zero(p.a[static_cast<size_t>(k)])) continue;
      S term = T::from_int(k) * p.a[static_cast<size_t>(k)];
      acc = acc + term * e.a[static_cast<size_t>(n - k)];
    }
    e.a[static_cast<size_t>(n)] = T::div_int(acc, n);
  }
  return e;
}

// Taylor coefficients c(0..order) of
//   exp( mu nu x/(1-x^2) - (mu^2+nu^2)/2 x^2/(1-x^2) + (b-3)/2 x^2 )
//     / ( (1-x)^{5/2} (1+x)^{1/2} ),
// the exponential generating function of f(N)/N!.
template <class S>
PowerSeries<S> egf_coefficients(long order, const S& mu, const S& nu, const Rational& b) {
  using T = scalar_traits<S>;
  if (order < 0) throw std::invalid_argument("order must be non-negative");

  const size_t len = static_cast<size_t>(order) + 1;
  PowerSeries<S> p;
  p.a.assign(len, T::zero());
  const S mu_nu = mu * nu;
  const S half_sq = T::div_int(mu * mu + nu * nu, 2);
  // x/(1-x^2) = x + x^3 + x^5 + ...
  for (long k = 1; k <= order; k += 2) {
    p.a[static_cast<size_t>(k)] = p.a[static_cast<size_t>(k)] + mu_nu;
  }
  // x^2/(1-x^2) = x^2 + x^4 + ...
  for (long k = 2; k <= order; k += 2) {
    p.a[static_cast<size_t>(k)] = p.a[static_cast<size_t>(k)] - half_sq;
  }
  if (order >= 2) {
    Rational b_star = (b - 3) / 2;
    p.a[2] = p.a[2] + T::from_rational(b_star);
  }

  PowerSeries<S> result = series_exp(p);

  // (1-x)^{-5/2}: ratio (2k+3)/(2k); (1+x)^{-1/2}: ratio -(2k-1)/(2k)
  PowerSeries<S> g, h;
  g.a.assign(len, T::zero());
  h.a.assign(len, T::zero());
  g.a[0] = T::one();
  h.a[0] = T::one();
  for (long k = 1; k <= order; ++k) {
    g.a[static_cast<size_t>(k)] =
        T::div_int(g.a[static_cast<size_t>(k - 1)] * T::from_int(2 * k + 3), 2 * k);
    h.a[static_cast<size_t>(k)] =
        T::div_int(h.a[static_cast<size_t>(k - 1)] * T::from_int(-(2 * k - 1)), 2 * k);
  }
  result = series_mul(result, g);
  result = series_mul(result, h);
  return result;
}

template <class S>
CorrelationSequence<S> egf_sequence(const CorrelationQuery<S>& q) {
  validate(q);
  CorrelationSequence<S> seq;
  seq.engine_tag = Engine::egf;
  seq.c = egf_coefficients(q.n, q.mu, q.nu, q.b).a;
  detail::fill_s_window(seq, q.n);
  return seq;
}

}  // namespace wck
