#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "wck/rational.hpp"
#include "wck/scalar.hpp"

namespace wck {

enum class Engine { coupled, collapsed, egf, contour, oracle };

inline std::string to_string(Engine e) {
  switch (e) {
    case Engine::coupled:
      return "coupled";
    case Engine::collapsed:
      return "collapsed";
    case Engine::egf:
      return "egf";
    case Engine::contour:
      return "contour";
    case Engine::oracle:
      return "oracle";
  }
  return "?";
}

inline Engine parse_engine(const std::string& name) {
  if (name == "coupled") return Engine::coupled;
  if (name == "collapsed") return Engine::collapsed;
  if (name == "egf") return Engine::egf;
  if (name == "contour") return Engine::contour;
  if (name == "oracle") return Engine::oracle;
  throw std::invalid_argument("unknown engine: " + name);
}

template <class S>
struct CorrelationQuery {
  long n = 0;
  S mu{};
  S nu{};
  Rational b = Rational(3);
};

template <class S>
void validate(const CorrelationQuery<S>& q) {
  if (q.n < 0) throw std::invalid_argument("matrix size must be non-negative");
  if (q.b < 1) throw std::invalid_argument("fourth moment must be >= 1");
}

// c(0..N) plus the trailing even-lag partial sums {s(N), s(N-1)}.
template <class S>
struct CorrelationSequence {
  std::vector<S> c;
  std::array<S, 2> s_window{};
  Engine engine_tag = Engine::collapsed;

  const S& value() const { return c.back(); }
};

}  // namespace wck
