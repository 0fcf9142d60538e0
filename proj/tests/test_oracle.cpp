#include <doctest.h>

#include <stdexcept>

#include "wck/oracle.hpp"
#include "wck/recursion.hpp"

using namespace wck;

namespace {

const MomentProfile kGoe{Rational(0), Rational(3)};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("base cases and the N = 2 closed form") {
  CHECK(brute_force_correlation(0, Rational(9), Rational(-2), kGoe) == 1);
  Rational mu(1, 2), nu(-1, 3);
  CHECK(brute_force_correlation(1, mu, nu, kGoe) == 2 + mu * nu);

  for (Rational b : {Rational(1), Rational(5, 2), Rational(3), Rational(13, 4)}) {
    MomentProfile p(Rational(0), b);
    Rational expect = (2 + mu * nu) * (2 + mu * nu) - mu * mu - nu * nu + b;
    CHECK(brute_force_correlation(2, mu, nu, p) == expect);
  }
  CHECK(brute_force_correlation(2, Rational(0), Rational(0), kGoe) == 7);
}

TEST_CASE("agrees with both recursions at N = 5") {
  Rational mu(2), nu(-1, 3), b(13, 4);
  MomentProfile p(Rational(0), b);
  Rational want = brute_force_correlation(5, mu, nu, p);
  CorrelationQuery<Rational> q{5, mu, nu, b};
  Rational c5 = collapsed_recursion(q).value();
  CHECK(want == c5 * 120);
  Rational k5 = coupled_recursion(q).value();
  CHECK(want == k5 * 120);
}

TEST_CASE("third moment never influences the result") {
  Rational mu(1, 2), nu(-1, 3);
  for (long n = 0; n <= 5; ++n) {
    MomentProfile a(Rational(0), Rational(13, 4));
    MomentProfile bb(Rational(3, 2), Rational(13, 4));
    MomentProfile c(Rational(-1), Rational(13, 4));
    Rational va = brute_force_correlation(n, mu, nu, a);
    CHECK(va == brute_force_correlation(n, mu, nu, bb));
    CHECK(va == brute_force_correlation(n, mu, nu, c));
  }
}

TEST_CASE("symmetric in mu and nu") {
  MomentProfile p(Rational(3, 2), Rational(13, 4));
  Rational ab = brute_force_correlation(4, Rational(2), Rational(-1, 3), p);
  Rational ba = brute_force_correlation(4, Rational(-1, 3), Rational(2), p);
  CHECK(ab == ba);
}

TEST_CASE("memoized signature path equals the direct path") {
  MomentProfile p(Rational(3, 2), Rational(13, 4));
  for (long n = 0; n <= 5; ++n) {
    Rational direct = brute_force_correlation(n, Rational(1, 2), Rational(-1, 3), p);
    Rational memo = brute_force_correlation(n, Rational(1, 2), Rational(-1, 3), p, true);
    CHECK(direct == memo);
  }
}

TEST_CASE("frozen values") {
  MomentProfile p(Rational(0), Rational(5, 2));
  CHECK(brute_force_correlation(4, Rational(1, 2), Rational(-1, 3), p) ==
        Rational("67277/648"));
  CHECK(brute_force_correlation(7, Rational(0), Rational(0), kGoe) == 66150);
}

TEST_CASE("cost guard refuses N > 7") {
  CHECK_THROWS_AS(brute_force_correlation(8, Rational(0), Rational(0), kGoe),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_correlation(-1, Rational(0), Rational(0), kGoe),
                  std::invalid_argument);
}

}  // TEST_SUITE
