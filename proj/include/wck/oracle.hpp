#pragma once

#include "wck/moments.hpp"
#include "wck/rational.hpp"

namespace wck {

// Ground-truth E[det(X - mu I) det(X - nu I)] by direct enumeration of
// permutation pairs with moment substitution, independent of every
// recursion. Cost is (N!)^2 * N, hence the hard N <= 7 guard.
//
// memoize=true first aggregates permutation pairs by their moment signature
// and then evaluates each signature once; off by default so the audit path
// is a plain sum in enumeration order.
Rational brute_force_correlation(long n, const Rational& mu, const Rational& nu,
                                 const MomentProfile& profile, bool memoize = false);

}  // namespace wck
