#pragma once

#include <cstdint>
#include <vector>

#include "wck/moments.hpp"

namespace wck {

// One sampled symmetric matrix, with the metadata needed to regenerate it:
// entry (i,j) for i < j is an independent catalog draw, the diagonal is
// sqrt(2) times a catalog draw, and every draw is addressed by a counter
// derived from (sample_index, position), never by generator state.
struct WignerSample {
  long n = 0;
  std::vector<double> entries;  // row-major n x n, symmetric
  DistributionTag tag = DistributionTag::gaussian;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;

  double at(long i, long j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
};

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  long n_samples = 0;
  std::uint64_t seed = 0;
  DistributionTag tag = DistributionTag::gaussian;
  long n = 0;
  double mu = 0;
  double nu = 0;
};

// One catalog draw for the given counter slot. Every slot owns two words of
// the underlying counter-based stream (Box-Muller needs both; the discrete
// laws use the first), so layouts never depend on the distribution.
double draw_entry(DistributionTag tag, std::uint64_t seed, std::uint64_t counter_pair);

// Draw upper-triangle slot j of sample s at counter_pair = s * D + j where
// D = n(n+1)/2, place it symmetrically, and scale the diagonal by sqrt(2).
WignerSample sample_wigner(long n, DistributionTag tag, std::uint64_t seed,
                           std::uint64_t sample_index);

// det(X - mu I) det(X - nu I) via two LU factorizations with partial
// pivoting, each accumulated as (sign, log|det|) and recombined through the
// scaled exponential. An exactly singular shift yields 0.
double det_product(const WignerSample& sample, double mu, double nu);

// Sample mean and standard error of det_product over n_samples independent
// matrices. Samples are processed in fixed 4096-wide chunks whose running
// (count, mean, M2) triples are merged by a fixed-order pairwise tree, so
// the result is bit-identical for every worker count. threads = 0 means:
// honor WIGNER_CK_THREADS if set, otherwise use the hardware count.
MonteCarloEstimate estimate_correlation(long n, double mu, double nu, DistributionTag tag,
                                        long n_samples, std::uint64_t seed, int threads = 0);

}  // namespace wck
