#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace wck {

using Rational = mpq_class;

// Parses "p/q" or a plain integer string into a canonical rational.
// Anything else (decimals, empty, junk) is rejected.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t digits = 0;
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (c == '/') {
      ++slashes;
      if (i == 0 || i + 1 == text.size()) {
        throw std::invalid_argument("malformed rational: " + text);
      }
    } else if (c == '-' || c == '+') {
      if (i != 0 && text[i - 1] != '/') {
        throw std::invalid_argument("malformed rational: " + text);
      }
    } else {
      throw std::invalid_argument("not a rational (want p/q or integer): " + text);
    }
  }
  if (digits == 0 || slashes > 1) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  std::string cleaned;  // GMP rejects explicit '+' signs; drop them once validated
  cleaned.reserve(text.size());
  for (const char c : text) {
    if (c != '+') cleaned.push_back(c);
  }
  Rational q;
  if (q.set_str(cleaned, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// log10|q|, computed from the limb sizes so it never overflows a double.
inline double log10_abs(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("log of zero");
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  const double log2q =
      std::log2(std::fabs(mn)) - std::log2(std::fabs(md)) + static_cast<double>(en - ed);
  return log2q * 0.30102999566398119521;  // log10(2)
}

}  // namespace wck
