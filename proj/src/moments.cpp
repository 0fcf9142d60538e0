#include "wck/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace wck {

MomentProfile::MomentProfile(Rational mean_, Rational variance_, Rational third,
                             Rational fourth)
    : mean(std::move(mean_)),
      variance(std::move(variance_)),
      third_moment(std::move(third)),
      fourth_moment_b(std::move(fourth)) {
  if (sgn(mean) != 0) throw std::domain_error("entry distribution must have mean 0");
  if (variance != 1) throw std::domain_error("entry distribution must have variance 1");
  // E Q^4 >= (E Q^2)^2 = 1 for any distribution with variance 1
  if (fourth_moment_b < 1) throw std::domain_error("fourth moment must be >= 1");
}

MomentProfile profile_of(DistributionTag tag) {
  switch (tag) {
    case DistributionTag::gaussian:
      return {Rational(0), Rational(3)};
    case DistributionTag::rademacher:
      return {Rational(0), Rational(1)};
    case DistributionTag::uniform_sym:
      // uniform on [-sqrt(3), sqrt(3)]: E Q^4 = 9/5
      return {Rational(0), Rational(9, 5)};
    case DistributionTag::skewed_two_point:
      // 2 w.p. 1/5, -1/2 w.p. 4/5: E Q^3 = 3/2, E Q^4 = 13/4
      return {Rational(3, 2), Rational(13, 4)};
  }
  throw std::invalid_argument("unknown distribution tag");
}

DistributionTag parse_distribution(const std::string& name) {
  if (name == "gaussian") return DistributionTag::gaussian;
  if (name == "rademacher") return DistributionTag::rademacher;
  if (name == "uniform_sym") return DistributionTag::uniform_sym;
  if (name == "skewed_two_point") return DistributionTag::skewed_two_point;
  throw std::invalid_argument("unknown distribution: " + name);
}

std::string to_string(DistributionTag tag) {
  switch (tag) {
    case DistributionTag::gaussian:
      return "gaussian";
    case DistributionTag::rademacher:
      return "rademacher";
    case DistributionTag::uniform_sym:
      return "uniform_sym";
    case DistributionTag::skewed_two_point:
      return "skewed_two_point";
  }
  return "?";
}

double cumulant_factor(const Rational& b) {
  if (b < 1) throw std::domain_error("fourth moment must be >= 1");
  Rational half = (b - 3) / 2;
  return std::exp(half.get_d());
}

}  // namespace wck
