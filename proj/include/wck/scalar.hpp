#pragma once

#include <complex>
#include <string>

#include "wck/rational.hpp"
#include "wck/scaled.hpp"

namespace wck {

// The engines are generic over three scalar fields: exact rationals, scaled
// reals, and scaled complex values.  scalar_traits supplies the handful of
// operations the recursions need beyond plain +,-,*.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool is_complex = false;

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational div_int(const Rational& x, long n) {
    Rational r = x / Rational(n);
    return r;
  }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double log10_abs(const Rational& x) { return wck::log10_abs(x); }
  // sign for real fields, phase in radians for the complex one
  static double sign_or_phase(const Rational& x) { return static_cast<double>(sgn(x)); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static std::complex<double> to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
  static std::string repr(const Rational& x) { return x.get_str(); }
};

template <>
struct scalar_traits<ScaledReal> {
  static constexpr bool exact = false;
  static constexpr bool is_complex = false;

  static ScaledReal zero() { return {}; }
  static ScaledReal one() { return {1.0, 0}; }
  static ScaledReal from_int(long n) { return scaled_from(static_cast<double>(n)); }
  static ScaledReal from_rational(const Rational& q) { return scaled_from(q.get_d()); }
  static ScaledReal div_int(const ScaledReal& x, long n) { return sc_div_int(x, n); }
  static bool is_zero(const ScaledReal& x) { return wck::is_zero(x); }
  static double log10_abs(const ScaledReal& x) { return sc_log10_abs(x); }
  static double sign_or_phase(const ScaledReal& x) {
    return x.mantissa > 0 ? 1.0 : (x.mantissa < 0 ? -1.0 : 0.0);
  }
  static double to_double(const ScaledReal& x) { return scaled_to(x); }
  static std::complex<double> to_complex(const ScaledReal& x) { return {scaled_to(x), 0.0}; }
};

template <>
struct scalar_traits<ScaledComplex> {
  static constexpr bool exact = false;
  static constexpr bool is_complex = true;

  static ScaledComplex zero() { return {}; }
  static ScaledComplex one() { return {{1.0, 0.0}, 0}; }
  static ScaledComplex from_int(long n) {
    return scaled_from(std::complex<double>(static_cast<double>(n), 0.0));
  }
  static ScaledComplex from_rational(const Rational& q) {
    return scaled_from(std::complex<double>(q.get_d(), 0.0));
  }
  static ScaledComplex div_int(const ScaledComplex& x, long n) { return sc_div_int(x, n); }
  static bool is_zero(const ScaledComplex& x) { return wck::is_zero(x); }
  static double log10_abs(const ScaledComplex& x) { return sc_log10_abs(x); }
  static double sign_or_phase(const ScaledComplex& x) { return std::arg(x.mantissa); }
  static std::complex<double> to_complex(const ScaledComplex& x) { return scaled_to(x); }
};

}  // namespace wck
