#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wck/montecarlo.hpp"
#include "wck/recursion.hpp"

using namespace wck;

namespace {

// Reference determinant by direct permutation expansion (test-local, O(n! n^2)).
double leibniz_det(const std::vector<double>& a, long n) {
  std::vector<long> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0L);
  double det = 0.0;
  do {
    long inversions = 0;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    double term = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (long i = 0; i < n; ++i)
      term *= a[static_cast<std::size_t>(i * n + perm[static_cast<std::size_t>(i)])];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

double exact_f(long n, double mu, double nu, const Rational& b) {
  CorrelationQuery<ScaledReal> q;
  q.n = n;
  q.mu = scaled_from_real(mu);
  q.nu = scaled_from_real(nu);
  q.b = b;
  // the recursion engines serve c(N) = f(N)/N!; the sampler estimates f(N)
  double factorial = 1.0;
  for (long i = 2; i <= n; ++i) factorial *= static_cast<double>(i);
  return scaled_to(correlation_at(q, Engine::collapsed)) * factorial;
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("single-entry samples are scaled catalog draws") {
  bool saw_plus = false;
  bool saw_minus = false;
  for (std::uint64_t s = 0; s < 64; ++s) {
    auto sample = sample_wigner(1, DistributionTag::rademacher, 7, s);
    const double v = sample.at(0, 0);
    CHECK(std::fabs(v) == kDiagonalScale);  // exactly sqrt(2) * (+-1)
    (v > 0 ? saw_plus : saw_minus) = true;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);
  CHECK_THROWS_AS(sample_wigner(0, DistributionTag::gaussian, 1, 0), std::invalid_argument);
}

TEST_CASE("samples are symmetric with independent upper-triangle draws") {
  auto sample = sample_wigner(5, DistributionTag::gaussian, 42, 3);
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) CHECK(sample.at(i, j) == sample.at(j, i));
  // off-diagonals are distinct draws, not copies of one value
  CHECK(sample.at(0, 1) != sample.at(0, 2));
  CHECK(sample.at(0, 1) != sample.at(1, 2));
}

TEST_CASE("empirical entry moments over one million samples") {
  const long reps = 1000000;
  double sum_off = 0.0;
  double sum_diag_sq = 0.0;
  for (long s = 0; s < reps; ++s) {
    auto sample = sample_wigner(2, DistributionTag::gaussian, 2024,
                                static_cast<std::uint64_t>(s));
    sum_off += sample.at(0, 1);
    sum_diag_sq += sample.at(0, 0) * sample.at(0, 0);
  }
  CHECK(std::fabs(sum_off / static_cast<double>(reps)) < 4.0e-3);  // 4 sigma band
  CHECK(sum_diag_sq / static_cast<double>(reps) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("every catalog distribution matches its moment profile empirically") {
  const long reps = 1000000;
  for (DistributionTag tag : kDistributionCatalog) {
    const MomentProfile profile = profile_of(tag);
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    for (long c = 0; c < reps; ++c) {
      const double x = draw_entry(tag, 0xFACEu + static_cast<std::uint64_t>(tag),
                                  static_cast<std::uint64_t>(c));
      m1 += x;
      m2 += x * x;
      m4 += x * x * x * x;
    }
    m1 /= static_cast<double>(reps);
    m2 /= static_cast<double>(reps);
    m4 /= static_cast<double>(reps);
    CAPTURE(to_string(tag));
    CHECK(std::fabs(m1) < 5.0e-3);
    CHECK(std::fabs(m2 - 1.0) < 5.0e-3);
    CHECK(std::fabs(m4 - profile.fourth_moment_b.get_d()) < 5.0e-2);
  }
}

TEST_CASE("determinant product closed forms") {
  WignerSample one;
  one.n = 1;
  one.entries = {2.5};
  CHECK(det_product(one, 0.5, -1.0) == doctest::Approx((2.5 - 0.5) * (2.5 + 1.0)).epsilon(1e-14));

  WignerSample diag;
  diag.n = 3;
  diag.entries = {1.0, 0, 0, 0, -2.0, 0, 0, 0, 0.5};
  double want = 1.0;
  for (double d : {1.0, -2.0, 0.5}) want *= (d - 0.25) * (d + 0.75);
  CHECK(det_product(diag, 0.25, -0.75) == doctest::Approx(want).epsilon(1e-13));

  // exactly singular shift: one diagonal entry equals mu
  WignerSample singular;
  singular.n = 2;
  singular.entries = {0.25, 0, 0, 5.0};
  CHECK(det_product(singular, 0.25, 1.0) == 0.0);
}

TEST_CASE("determinant product matches permutation expansion at size 5") {
  for (std::uint64_t s = 0; s < 8; ++s) {
    auto sample = sample_wigner(5, DistributionTag::gaussian, 99, s);
    const double mu = 0.3, nu = -0.7;
    std::vector<double> a = sample.entries;
    std::vector<double> b = sample.entries;
    for (long i = 0; i < 5; ++i) {
      a[static_cast<std::size_t>(i * 5 + i)] -= mu;
      b[static_cast<std::size_t>(i * 5 + i)] -= nu;
    }
    const double want = leibniz_det(a, 5) * leibniz_det(b, 5);
    const double got = det_product(sample, mu, nu);
    CHECK(std::fabs(got - want) <= 1e-12 * std::fabs(want));
  }
}

TEST_CASE("estimates are bit-identical across runs and worker counts") {
  const auto a = estimate_correlation(4, 0.1, -0.2, DistributionTag::uniform_sym, 10000, 11, 1);
  const auto b = estimate_correlation(4, 0.1, -0.2, DistributionTag::uniform_sym, 10000, 11, 3);
  const auto c = estimate_correlation(4, 0.1, -0.2, DistributionTag::uniform_sym, 10000, 11, 0);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  CHECK(a.n_samples == 10000);
  CHECK_THROWS_AS(estimate_correlation(4, 0, 0, DistributionTag::gaussian, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("gaussian 1x1 estimate recovers the exact second moment") {
  const auto est = estimate_correlation(1, 0.0, 0.0, DistributionTag::gaussian, 100000, 5);
  CHECK(std::fabs(est.mean - 2.0) < 4.0 * est.std_error);
  // diagonal entry is N(0,2); Var(x^2) = 8, so SE should sit near sqrt(8/n)
  CHECK(est.std_error == doctest::Approx(std::sqrt(8.0 / 100000.0)).epsilon(0.3));
}

TEST_CASE("rademacher estimate at size 6 matches the exact recursion") {
  const double reference = exact_f(6, 0.1, 0.2, Rational(1));
  const auto est =
      estimate_correlation(6, 0.1, 0.2, DistributionTag::rademacher, 200000, 17);
  CHECK(std::fabs(est.mean - reference) < 4.0 * est.std_error);
}

TEST_CASE("skewed two-point estimate shows the third moment is irrelevant") {
  const double reference = exact_f(6, 0.0, 0.0, Rational(13, 4));
  const auto est =
      estimate_correlation(6, 0.0, 0.0, DistributionTag::skewed_two_point, 200000, 23);
  CHECK(std::fabs(est.mean - reference) < 4.0 * est.std_error);
}

TEST_CASE("standard error shrinks like one over sqrt of sample count") {
  double ratio_sum = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(rep);
    const auto small = estimate_correlation(4, 0.2, -0.3, DistributionTag::gaussian,
                                            20000, seed);
    const auto big = estimate_correlation(4, 0.2, -0.3, DistributionTag::gaussian,
                                          40000, seed + 500);
    ratio_sum += big.std_error / small.std_error;
  }
  const double mean_ratio = ratio_sum / 10.0;
  CHECK(mean_ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.2));
}

TEST_CASE("fourth-moment gap between catalog laws shows up at size 2") {
  // f(2;0,0) = 4 + b exactly, so the gaussian and rademacher references
  // differ by their fourth-moment gap of 2
  const double gaussian_ref = exact_f(2, 0.0, 0.0, Rational(3));
  const double rademacher_ref = exact_f(2, 0.0, 0.0, Rational(1));
  CHECK(gaussian_ref == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(gaussian_ref - rademacher_ref == doctest::Approx(2.0).epsilon(1e-14));

  const auto g = estimate_correlation(2, 0.0, 0.0, DistributionTag::gaussian, 100000, 31);
  const auto r = estimate_correlation(2, 0.0, 0.0, DistributionTag::rademacher, 100000, 37);
  CHECK(std::fabs(g.mean - gaussian_ref) < 4.0 * g.std_error);
  CHECK(std::fabs(r.mean - rademacher_ref) < 4.0 * r.std_error);
}

}  // TEST_SUITE
