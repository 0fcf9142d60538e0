#pragma once

#include <string>

#include "wck/rational.hpp"

namespace wck {

// Moment data of the entry distribution Q that determines the correlation
// function: mean 0 and variance 1 are part of the model and enforced; the
// third moment is carried only so the oracle can test that results do not
// depend on it; the fourth moment b is the one non-universal parameter.
struct MomentProfile {
  Rational mean;
  Rational variance;
  Rational third_moment;
  Rational fourth_moment_b;

  MomentProfile(Rational mean_, Rational variance_, Rational third, Rational fourth);
  MomentProfile(Rational third, Rational fourth)
      : MomentProfile(Rational(0), Rational(1), std::move(third), std::move(fourth)) {}
};

// Diagonal entries are sqrt(2) times a Q-draw, so their variance is 2.
inline constexpr double kDiagonalScale = 1.4142135623730951;

enum class DistributionTag { gaussian, rademacher, uniform_sym, skewed_two_point };

inline constexpr DistributionTag kDistributionCatalog[] = {
    DistributionTag::gaussian,
    DistributionTag::rademacher,
    DistributionTag::uniform_sym,
    DistributionTag::skewed_two_point,
};

MomentProfile profile_of(DistributionTag tag);
DistributionTag parse_distribution(const std::string& name);
std::string to_string(DistributionTag tag);

// exp((b-3)/2), the fourth-cumulant factor appearing in the limit law.
double cumulant_factor(const Rational& b);

}  // namespace wck
