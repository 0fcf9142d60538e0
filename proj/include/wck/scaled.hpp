#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace wck {

// (mantissa, base-2 exponent) scalar with |mantissa| in [1,2), or exactly (0, 0).
//
// The recursions produce values growing like exp(N xi^2 / 2) * N^{3/2}, far past
// any fixed-width float.  A complex mantissa with a wide integer exponent keeps
// sign and phase intact through the alternating sums, which a log-polar encoding
// would not.
template <class T>
struct Scaled {
  T mantissa{};
  std::int64_t exponent{0};
};

using ScaledReal = Scaled<double>;
using ScaledComplex = Scaled<std::complex<double>>;

namespace detail {

inline double mag(double m) { return std::fabs(m); }
inline double mag(const std::complex<double>& m) { return std::abs(m); }

inline bool finite(double m) { return std::isfinite(m); }
inline bool finite(const std::complex<double>& m) {
  return std::isfinite(m.real()) && std::isfinite(m.imag());
}

inline double scale2(double m, int e) { return std::ldexp(m, e); }
inline std::complex<double> scale2(const std::complex<double>& m, int e) {
  return {std::ldexp(m.real(), e), std::ldexp(m.imag(), e)};
}

// ldexp saturates to 0 / inf long before this; clamping keeps the cast safe.
inline int clamp_exp(std::int64_t e) {
  constexpr std::int64_t lim = 100000;
  return static_cast<int>(e > lim ? lim : (e < -lim ? -lim : e));
}

}  // namespace detail

template <class T>
bool is_zero(const Scaled<T>& s) {
  return s.mantissa == T{};
}

template <class T>
Scaled<T> normalize(T raw, std::int64_t raw_exponent) {
  if (!detail::finite(raw)) throw std::domain_error("non-finite scalar");
  double a = detail::mag(raw);
  if (a == 0.0) return {};
  if (std::isinf(a)) {  // complex modulus can overflow while both parts are finite
    raw = detail::scale2(raw, -2);
    raw_exponent += 2;
    a = detail::mag(raw);
  }
  int e = 0;
  std::frexp(a, &e);  // a = fr * 2^e with fr in [0.5, 1)
  raw = detail::scale2(raw, 1 - e);
  std::int64_t exponent = raw_exponent + e - 1;
  // hypot rounding can land a complex modulus a hair outside [1,2)
  while (detail::mag(raw) >= 2.0) {
    raw = detail::scale2(raw, -1);
    ++exponent;
  }
  while (detail::mag(raw) < 1.0) {
    raw = detail::scale2(raw, 1);
    --exponent;
  }
  return {raw, exponent};
}

template <class T>
Scaled<T> scaled_from(const T& v) {
  return normalize<T>(v, 0);
}

inline ScaledReal scaled_from_real(double v) { return scaled_from(v); }

// Exact whenever the true value fits a double; saturates to 0 / inf otherwise.
template <class T>
T scaled_to(const Scaled<T>& s) {
  return detail::scale2(s.mantissa, detail::clamp_exp(s.exponent));
}

template <class T>
Scaled<T> sc_add(const Scaled<T>& a, const Scaled<T>& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  const Scaled<T>* hi = &a;
  const Scaled<T>* lo = &b;
  if (a.exponent < b.exponent) std::swap(hi, lo);
  const std::int64_t shift = lo->exponent - hi->exponent;  // <= 0
  if (shift < -1100) return *hi;  // lo is below the double range of hi
  const T m = hi->mantissa + detail::scale2(lo->mantissa, static_cast<int>(shift));
  return normalize(m, hi->exponent);
}

template <class T>
Scaled<T> sc_neg(const Scaled<T>& a) {
  return {-a.mantissa, a.exponent};
}

template <class T>
Scaled<T> sc_sub(const Scaled<T>& a, const Scaled<T>& b) {
  return sc_add(a, sc_neg(b));
}

template <class T>
Scaled<T> sc_mul(const Scaled<T>& a, const Scaled<T>& b) {
  if (is_zero(a) || is_zero(b)) return {};
  return normalize(a.mantissa * b.mantissa, a.exponent + b.exponent);
}

template <class T>
Scaled<T> sc_div(const Scaled<T>& a, const Scaled<T>& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  if (is_zero(a)) return {};
  return normalize(a.mantissa / b.mantissa, a.exponent - b.exponent);
}

template <class T>
Scaled<T> sc_div_int(const Scaled<T>& a, long n) {
  if (n == 0) throw std::domain_error("division by zero");
  if (is_zero(a)) return {};
  return normalize(a.mantissa / static_cast<double>(n), a.exponent);
}

// ln|a| = ln|mantissa| + exponent * ln 2
template <class T>
double sc_log_abs(const Scaled<T>& a) {
  if (is_zero(a)) throw std::domain_error("log of zero");
  return std::log(detail::mag(a.mantissa)) +
         static_cast<double>(a.exponent) * 0.69314718055994530942;
}

template <class T>
double sc_log10_abs(const Scaled<T>& a) {
  return sc_log_abs(a) * 0.43429448190325182765;  // 1/ln(10)
}

// e^x as a scaled real; x may be far outside the double exp range.
inline ScaledReal scaled_exp(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite scalar");
  constexpr double ln2 = 0.69314718055994530942;
  const double k = std::floor(x / ln2);
  const double r = x - k * ln2;  // in [0, ln2) up to rounding
  return normalize(std::exp(r), static_cast<std::int64_t>(k));
}

template <class T>
Scaled<T> operator+(const Scaled<T>& a, const Scaled<T>& b) {
  return sc_add(a, b);
}
template <class T>
Scaled<T> operator-(const Scaled<T>& a, const Scaled<T>& b) {
  return sc_sub(a, b);
}
template <class T>
Scaled<T> operator-(const Scaled<T>& a) {
  return sc_neg(a);
}
template <class T>
Scaled<T> operator*(const Scaled<T>& a, const Scaled<T>& b) {
  return sc_mul(a, b);
}

}  // namespace wck
