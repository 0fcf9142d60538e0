#pragma once

#include <complex>
#include <vector>

#include "wck/moments.hpp"
#include "wck/query.hpp"

namespace wck {

// T(x) = (sin x / x^3 - cos x / x^2) / 2, the limit kernel; T(0) = 1/6.
// Below |x| = 1/2 the closed form loses digits to cancellation, so a 20-term
// power series takes over there.
std::complex<double> kernel_T(std::complex<double> x);

// sqrt(4 - xi^2) / (2 pi) on [-2, 2].
double semicircle_density(double xi);

// J_{3/2}(x) = sqrt(2/(pi x)) (sin x / x - cos x), an independent closed form
// used to cross-check kernel_T against sqrt(pi) J_{3/2}(x) / (2x)^{3/2}.
double bessel_j_three_halves(double x);

enum class LimitForm { theorem, proposition };

// Parameters of the two limit statements. The theorem form drives real
// shifts mu, nu around the spectral point xi; the proposition form drives a
// complex shift eta around a sequence xi_N = sqrt(N) xi + xi_offset/sqrt(N).
struct LimitQuery {
  LimitForm form = LimitForm::theorem;
  double xi = 0;
  double mu = 0;
  double nu = 0;
  std::complex<double> eta{0, 0};
  Rational b = Rational(3);
  double xi_offset = 0;
};

void validate(const LimitQuery& q);

// exp((b-3)/2) e^{xi(mu+nu)/(2 rho)} (2 pi rho)^3 T(pi (mu - nu))
double theorem_rhs(const LimitQuery& q);

// exp((b-3)/2) (4 - xi^2)^{3/2} T(sqrt(4 - xi^2) eta)
std::complex<double> proposition_rhs(const LimitQuery& q);

// The finite-N quantity whose N -> infinity limit is the matching rhs:
//   theorem:     sqrt(2 pi / N^3) e^{-N xi^2 / 2} c(N; sqrt(N) xi + mu/(sqrt(N) rho), ...)
//   proposition: sqrt(2 pi / N^3) e^{-xi_N^2 / 2} c(N; xi_N + eta/sqrt(N), xi_N - eta/sqrt(N))
// assembled in scaled arithmetic, collapsed or coupled engine.
std::complex<double> scaled_lhs(long n, const LimitQuery& q, Engine engine = Engine::collapsed);

struct ConvergenceRow {
  long n = 0;
  std::complex<double> lhs{0, 0};
  std::complex<double> rhs{0, 0};
  double error = 0;  // |lhs-rhs|/|rhs|, or |lhs-rhs| when rhs vanishes
  bool error_is_absolute = false;
};

std::vector<ConvergenceRow> convergence_study(const LimitQuery& q,
                                              const std::vector<long>& n_list,
                                              Engine engine = Engine::collapsed);

}  // namespace wck
