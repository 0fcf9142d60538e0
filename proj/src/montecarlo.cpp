#include "wck/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wck/scaled.hpp"

namespace wck {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kSqrt3 = 1.7320508075688772935274463415058724;
constexpr long kChunk = 4096;

// Stateless counter-based generator: the splitmix64 output function applied
// to seed + gamma * (counter + 1). Each counter yields one independent word.
std::uint64_t mix_word(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Uniform on (0, 1]: 53 high bits, shifted off zero so log() is always safe.
double to_unit(std::uint64_t w) {
  return static_cast<double>((w >> 11) + 1) * 0x1p-53;
}

struct LogDet {
  int sign = 1;       // 0 means an exactly zero determinant
  double log_abs = 0;
};

LogDet lu_log_determinant(std::vector<double>& a, long n) {
  LogDet out;
  for (long col = 0; col < n; ++col) {
    long pivot_row = col;
    double best = std::fabs(a[static_cast<std::size_t>(col * n + col)]);
    for (long r = col + 1; r < n; ++r) {
      const double mag = std::fabs(a[static_cast<std::size_t>(r * n + col)]);
      if (mag > best) {
        best = mag;
        pivot_row = r;
      }
    }
    if (best == 0.0) {
      out.sign = 0;
      return out;
    }
    if (pivot_row != col) {
      for (long k = col; k < n; ++k) {
        std::swap(a[static_cast<std::size_t>(col * n + k)],
                  a[static_cast<std::size_t>(pivot_row * n + k)]);
      }
      out.sign = -out.sign;
    }
    const double pivot = a[static_cast<std::size_t>(col * n + col)];
    if (pivot < 0) out.sign = -out.sign;
    out.log_abs += std::log(std::fabs(pivot));
    for (long r = col + 1; r < n; ++r) {
      const double factor = a[static_cast<std::size_t>(r * n + col)] / pivot;
      if (factor == 0.0) continue;
      for (long k = col + 1; k < n; ++k) {
        a[static_cast<std::size_t>(r * n + k)] -=
            factor * a[static_cast<std::size_t>(col * n + k)];
      }
    }
  }
  return out;
}

struct Accumulator {
  long count = 0;
  double mean = 0;
  double m2 = 0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
};

Accumulator merge(const Accumulator& a, const Accumulator& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  Accumulator out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  const double na = static_cast<double>(a.count);
  const double nb = static_cast<double>(b.count);
  const double nt = static_cast<double>(out.count);
  out.mean = a.mean + delta * nb / nt;
  out.m2 = a.m2 + b.m2 + delta * delta * na * nb / nt;
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("WIGNER_CK_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) return static_cast<int>(std::min(parsed, 64L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

}  // namespace

double draw_entry(DistributionTag tag, std::uint64_t seed, std::uint64_t counter_pair) {
  const std::uint64_t w0 = mix_word(seed, 2 * counter_pair);
  switch (tag) {
    case DistributionTag::gaussian: {
      const std::uint64_t w1 = mix_word(seed, 2 * counter_pair + 1);
      const double u1 = to_unit(w0);
      const double u2 = to_unit(w1);
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }
    case DistributionTag::rademacher:
      return (w0 >> 63) != 0 ? 1.0 : -1.0;
    case DistributionTag::uniform_sym:
      return kSqrt3 * (2.0 * to_unit(w0) - 1.0);
    case DistributionTag::skewed_two_point:
      // value 2 with probability 1/5, value -1/2 with probability 4/5
      return to_unit(w0) <= 0.2 ? 2.0 : -0.5;
  }
  throw std::invalid_argument("unknown distribution tag");
}

WignerSample sample_wigner(long n, DistributionTag tag, std::uint64_t seed,
                           std::uint64_t sample_index) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  WignerSample out;
  out.n = n;
  out.tag = tag;
  out.seed = seed;
  out.sample_index = sample_index;
  out.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  const std::uint64_t draws_per_sample =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n + 1) / 2;
  std::uint64_t slot = 0;
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j, ++slot) {
      double value = draw_entry(tag, seed, sample_index * draws_per_sample + slot);
      if (i == j) value *= kDiagonalScale;
      out.entries[static_cast<std::size_t>(i * n + j)] = value;
      out.entries[static_cast<std::size_t>(j * n + i)] = value;
    }
  }
  return out;
}

double det_product(const WignerSample& sample, double mu, double nu) {
  const long n = sample.n;
  std::vector<double> shifted_mu = sample.entries;
  std::vector<double> shifted_nu = sample.entries;
  for (long i = 0; i < n; ++i) {
    shifted_mu[static_cast<std::size_t>(i * n + i)] -= mu;
    shifted_nu[static_cast<std::size_t>(i * n + i)] -= nu;
  }
  const LogDet a = lu_log_determinant(shifted_mu, n);
  const LogDet b = lu_log_determinant(shifted_nu, n);
  if (a.sign == 0 || b.sign == 0) return 0.0;
  const ScaledReal magnitude = scaled_exp(a.log_abs + b.log_abs);
  return static_cast<double>(a.sign * b.sign) * scaled_to(magnitude);
}

MonteCarloEstimate estimate_correlation(long n, double mu, double nu, DistributionTag tag,
                                        long n_samples, std::uint64_t seed, int threads) {
  if (n < 1) throw std::invalid_argument("matrix size must be at least 1");
  if (n_samples < 2) throw std::invalid_argument("need at least 2 samples");

  const long n_chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<Accumulator> chunk_stats(static_cast<std::size_t>(n_chunks));

  const int worker_count =
      static_cast<int>(std::min<long>(resolve_threads(threads), n_chunks));
  std::atomic<long> next_chunk{0};
  auto run_chunks = [&]() {
    for (;;) {
      const long c = next_chunk.fetch_add(1);
      if (c >= n_chunks) return;
      const long begin = c * kChunk;
      const long end = std::min(n_samples, begin + kChunk);
      Accumulator acc;
      for (long s = begin; s < end; ++s) {
        const WignerSample sample =
            sample_wigner(n, tag, seed, static_cast<std::uint64_t>(s));
        acc.push(det_product(sample, mu, nu));
      }
      chunk_stats[static_cast<std::size_t>(c)] = acc;
    }
  };

  if (worker_count <= 1) {
    run_chunks();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(worker_count));
    for (int w = 0; w < worker_count; ++w) pool.emplace_back(run_chunks);
    for (auto& t : pool) t.join();
  }

  // Fixed-order pairwise tree over chunk indices: the merge sequence depends
  // only on n_chunks, never on which worker produced which chunk.
  std::vector<Accumulator> level = std::move(chunk_stats);
  while (level.size() > 1) {
    std::vector<Accumulator> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(merge(level[i], level[i + 1]));
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  const Accumulator total = level.front();

  MonteCarloEstimate out;
  out.mean = total.mean;
  out.std_error = std::sqrt(total.m2 / (static_cast<double>(total.count - 1) *
                                        static_cast<double>(total.count)));
  out.n_samples = total.count;
  out.seed = seed;
  out.tag = tag;
  out.n = n;
  out.mu = mu;
  out.nu = nu;
  return out;
}

}  // namespace wck
