#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "wck/query.hpp"

namespace wck {

// State of the six coupled sequences. f is the correlation function itself;
// the f11 family are the expectations with one row and one column removed
// from each determinant, and f10/f01 the mixed one-sided removals. f11B and
// f11C satisfy identical recursions and must coincide; they are kept separate
// so that coincidence stays observable.
template <class S>
struct CoupledState {
  std::vector<S> f, f11A, f11B, f11C, f10, f01;
};

namespace detail {

template <class S>
const S& seq_at(const std::vector<S>& v, long i, const S& zero) {
  return i < 0 ? zero : v[static_cast<size_t>(i)];
}

}  // namespace detail

template <class S>
CoupledState<S> coupled_state(const CorrelationQuery<S>& q) {
  using T = scalar_traits<S>;
  validate(q);
  const size_t len = static_cast<size_t>(q.n) + 1;
  const S zero = T::zero();

  CoupledState<S> st;
  st.f.assign(len, zero);
  st.f11A.assign(len, zero);
  st.f11B.assign(len, zero);
  st.f11C.assign(len, zero);
  st.f10.assign(len, zero);
  st.f01.assign(len, zero);

  const S two_plus_mu_nu = T::from_int(2) + q.mu * q.nu;
  const S mu_nu = q.mu * q.nu;
  const S b = T::from_rational(q.b);

  st.f[0] = T::one();
  for (long n = 1; n <= q.n; ++n) {
    const auto at = [&](const std::vector<S>& v, long i) -> const S& {
      return detail::seq_at(v, i, zero);
    };
    if (n >= 2) {
      const S inner = T::from_int(n - 2) * at(st.f, n - 3);
      const S pair = T::from_int((n - 2) * (n - 3));
      S a = mu_nu * at(st.f, n - 2);
      a = a + inner;
      a = a + pair * at(st.f11A, n - 2);
      a = a + q.nu * (T::from_int(n - 2) * at(st.f10, n - 2));
      a = a + q.mu * (T::from_int(n - 2) * at(st.f01, n - 2));
      st.f11A[n] = a;

      S bc = at(st.f, n - 2) + inner;
      st.f11B[n] = bc + pair * at(st.f11B, n - 2);
      st.f11C[n] = bc + pair * at(st.f11C, n - 2);
    }
    st.f10[n] = T::zero() - T::from_int(n - 1) * st.f01[n - 1] - q.nu * st.f[n - 1];
    st.f01[n] = T::zero() - T::from_int(n - 1) * st.f10[n - 1] - q.mu * st.f[n - 1];

    S fn = two_plus_mu_nu * st.f[n - 1];
    fn = fn + b * (T::from_int(n - 1) * at(st.f, n - 2));
    const S eleven = st.f11A[n - 1] + st.f11B[n - 1] + st.f11C[n - 1];
    fn = fn + T::from_int((n - 1) * (n - 2)) * eleven;
    fn = fn + q.nu * (T::from_int(n - 1) * st.f10[n - 1]);
    fn = fn + q.mu * (T::from_int(n - 1) * st.f01[n - 1]);
    st.f[n] = fn;
  }
  return st;
}

namespace detail {

// s(k) = c(k) + c(k-2) + ... recomputed by direct summation.
template <class S>
S even_lag_sum(const std::vector<S>& c, long k) {
  S acc = scalar_traits<S>::zero();
  for (long i = k; i >= 0; i -= 2) acc = acc + c[static_cast<size_t>(i)];
  return acc;
}

template <class S>
void fill_s_window(CorrelationSequence<S>& seq, long n) {
  seq.s_window[0] = even_lag_sum(seq.c, n);
  seq.s_window[1] = n >= 1 ? even_lag_sum(seq.c, n - 1) : scalar_traits<S>::zero();
}

template <class S>
bool bitwise_equal(const S& a, const S& b) {
  if constexpr (scalar_traits<S>::exact) {
    return a == b;
  } else {
    return a.mantissa == b.mantissa && a.exponent == b.exponent;
  }
}

}  // namespace detail

template <class S>
CorrelationSequence<S> coupled_recursion(const CorrelationQuery<S>& q) {
  using T = scalar_traits<S>;
  CoupledState<S> st = coupled_state(q);
  for (size_t n = 0; n < st.f11B.size(); ++n) {
    // identical recursions on identical inputs; a mismatch means a typo in
    // one of them, not roundoff
    if (!detail::bitwise_equal(st.f11B[n], st.f11C[n])) {
      throw std::logic_error("coupled recursion invariant violated: f11B != f11C");
    }
  }
  CorrelationSequence<S> seq;
  seq.engine_tag = Engine::coupled;
  seq.c.resize(st.f.size());
  S inv_fact = T::one();
  seq.c[0] = st.f[0];
  for (long n = 1; n <= q.n; ++n) {
    inv_fact = T::div_int(inv_fact, n);
    seq.c[static_cast<size_t>(n)] = st.f[static_cast<size_t>(n)] * inv_fact;
  }
  detail::fill_s_window(seq, q.n);
  return seq;
}

template <class S>
CorrelationSequence<S> collapsed_recursion(const CorrelationQuery<S>& q) {
  using T = scalar_traits<S>;
  validate(q);
  const S zero = T::zero();

  CorrelationSequence<S> seq;
  seq.engine_tag = Engine::collapsed;
  seq.c.assign(static_cast<size_t>(q.n) + 1, zero);
  seq.c[0] = T::one();

  const S mu_nu = q.mu * q.nu;
  const S mu2_plus_nu2 = q.mu * q.mu + q.nu * q.nu;
  const S b_minus_3 = T::from_rational(q.b - 3);

  // rolling even-lag sums entering step n: s1 = s(n-1), s2 = s(n-2), s3 = s(n-3)
  S s1 = seq.c[0];
  S s2 = zero;
  S s3 = zero;
  for (long n = 1; n <= q.n; ++n) {
    const auto at = [&](long i) -> const S& { return detail::seq_at(seq.c, i, zero); };
    S rhs = T::from_int(2) * at(n - 1);
    rhs = rhs + T::from_int(n + 1) * at(n - 2);
    rhs = rhs + mu_nu * (s1 + s3);
    rhs = rhs - mu2_plus_nu2 * s2;
    rhs = rhs + b_minus_3 * (at(n - 2) - at(n - 4));
    seq.c[static_cast<size_t>(n)] = T::div_int(rhs, n);

    const S sn = seq.c[static_cast<size_t>(n)] + s2;
    s3 = s2;
    s2 = s1;
    s1 = sn;
    if (!T::exact && n % 1024 == 0) {
      // bound drift of the rolling sums on long float runs
      s1 = detail::even_lag_sum(seq.c, n);
      s2 = detail::even_lag_sum(seq.c, n - 1);
      s3 = detail::even_lag_sum(seq.c, n - 2);
    }
  }
  seq.s_window[0] = s1;
  seq.s_window[1] = s2;
  return seq;
}

template <class S>
S correlation_at(const CorrelationQuery<S>& q, Engine engine) {
  switch (engine) {
    case Engine::coupled:
      return coupled_recursion(q).value();
    case Engine::collapsed:
      return collapsed_recursion(q).value();
    default:
      throw std::invalid_argument("correlation_at requires a recursion engine");
  }
}

// log10 |f(N)| = log10 |c(N)| + log10 N!
template <class S>
double log10_abs_f(const CorrelationSequence<S>& seq) {
  const long n = static_cast<long>(seq.c.size()) - 1;
  return scalar_traits<S>::log10_abs(seq.value()) +
         std::lgamma(static_cast<double>(n) + 1.0) / std::log(10.0);
}

}  // namespace wck
