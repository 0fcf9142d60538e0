#pragma once

#include "wck/errors.hpp"
#include "wck/rational.hpp"
#include "wck/scaled.hpp"

namespace wck {

// Circle of radius 1 - 1/N (1/2 below N = 2, where the representation is
// still analytic), with an initial node count that resolves the angular
// scale 1/N of the near-singularity at z = 1.
struct ContourSpec {
  long n = 0;
  double radius = 0.5;
  long node_count = 64;  // starting count; doubled until convergence
  double tolerance = 1e-10;
};

ContourSpec make_contour_spec(long n, double tolerance = 1e-10);

// f(N;mu,nu)/N! as the N-th Taylor coefficient of the generating function,
// by trapezoidal quadrature on the circle. The e^{xi_c^2/2 + delta^2} factor
// (xi_c = (mu+nu)/2, delta = (mu-nu)/2) is pulled out exactly so the
// integrand stays bounded by e^{|b*|} in magnitude; the result is assembled
// in scaled form. Throws NumericalError("quadrature stalled ...") if node
// doubling passes 2^20 without meeting the tolerance.
ScaledReal contour_correlation(const ContourSpec& spec, double mu, double nu,
                               const Rational& b);

}  // namespace wck
