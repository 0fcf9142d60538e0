#include "wck/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wck {
namespace {

constexpr long kMaxN = 7;

struct PermTable {
  int n = 0;
  long count = 0;
  std::vector<int8_t> images;     // count * n, images[p*n + i] = perm(i)
  std::vector<int8_t> signs;      // parity of each permutation
  std::vector<uint8_t> fixed;     // bitmask of fixed points
  std::vector<int8_t> edges;      // count * n pairs of (i, perm(i)) for non-fixed i,
  std::vector<int8_t> edge_len;   // flattened as packed i*n+j with i<j
};

PermTable enumerate_permutations(int n) {
  PermTable t;
  t.n = n;
  std::vector<int8_t> p(n);
  std::iota(p.begin(), p.end(), int8_t{0});
  do {
    t.images.insert(t.images.end(), p.begin(), p.end());
    // parity via cycle count
    uint8_t seen = 0;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen & (1u << i)) continue;
      ++cycles;
      for (int j = i; !(seen & (1u << j)); j = p[j]) seen |= 1u << j;
    }
    t.signs.push_back(((n - cycles) % 2 == 0) ? int8_t{1} : int8_t{-1});
    uint8_t fix = 0;
    int8_t len = 0;
    std::array<int8_t, kMaxN> packed{};
    for (int i = 0; i < n; ++i) {
      if (p[i] == i) {
        fix |= 1u << i;
      } else {
        const int a = std::min<int>(i, p[i]);
        const int b = std::max<int>(i, p[i]);
        packed[len++] = static_cast<int8_t>(a * n + b);
      }
    }
    t.fixed.push_back(fix);
    t.edges.insert(t.edges.end(), packed.begin(), packed.begin() + n);
    t.edge_len.push_back(len);
    ++t.count;
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

// Moment signature of one permutation pair: how many off-diagonal pairs carry
// power 3 and power 4, and how the fixed points split between the two
// determinants. Everything else contributes factor 1 or kills the term.
struct Signature {
  int n3 = 0;       // pairs at power 3 -> third_moment each
  int n4 = 0;       // pairs at power 4 -> b each
  int n_both = 0;   // indices fixed by both permutations -> (2 + mu nu) each
  int n_sigma = 0;  // fixed by the first only -> (-mu) each
  int n_tau = 0;    // fixed by the second only -> (-nu) each
};

uint32_t pack_key(const Signature& s) {
  return static_cast<uint32_t>(s.n3) | static_cast<uint32_t>(s.n4) << 4 |
         static_cast<uint32_t>(s.n_both) << 8 | static_cast<uint32_t>(s.n_sigma) << 12 |
         static_cast<uint32_t>(s.n_tau) << 16;
}

struct PowTables {
  std::vector<Rational> m3, b, both, neg_mu, neg_nu;
};

PowTables build_pow_tables(int n, const Rational& mu, const Rational& nu,
                           const MomentProfile& profile) {
  auto powers = [n](const Rational& base) {
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    out[0] = 1;
    for (int k = 1; k <= n; ++k) out[k] = out[k - 1] * base;
    return out;
  };
  PowTables t;
  t.m3 = powers(profile.third_moment);
  t.b = powers(profile.fourth_moment_b);
  Rational two_mu_nu = 2 + mu * nu;
  t.both = powers(two_mu_nu);
  Rational neg_mu = -mu;
  Rational neg_nu = -nu;
  t.neg_mu = powers(neg_mu);
  t.neg_nu = powers(neg_nu);
  return t;
}

Rational evaluate(const Signature& s, const PowTables& t) {
  Rational v = t.m3[s.n3] * t.b[s.n4];
  v *= t.both[s.n_both];
  v *= t.neg_mu[s.n_sigma];
  v *= t.neg_nu[s.n_tau];
  return v;
}

}  // namespace

Rational brute_force_correlation(long n, const Rational& mu, const Rational& nu,
                                 const MomentProfile& profile, bool memoize) {
  if (n < 0) throw std::invalid_argument("matrix size must be non-negative");
  if (n > kMaxN) throw std::invalid_argument("oracle limited to N <= 7 (cost guard)");
  if (n == 0) return Rational(1);  // empty determinants

  const int N = static_cast<int>(n);
  const PermTable perms = enumerate_permutations(N);
  const PowTables pows = build_pow_tables(N, mu, nu, profile);
  const bool m3_zero = sgn(profile.third_moment) == 0;

  std::array<uint8_t, kMaxN * kMaxN> pair_power{};
  std::map<uint32_t, long> signed_counts;  // signature -> sum of sign products
  Rational total(0);

  for (long a = 0; a < perms.count; ++a) {
    const int8_t* ea = &perms.edges[a * N];
    const int la = perms.edge_len[a];
    const uint8_t fa = perms.fixed[a];
    const int sa = perms.signs[a];
    for (long b = 0; b < perms.count; ++b) {
      const int8_t* eb = &perms.edges[b * N];
      const int lb = perms.edge_len[b];
      for (int k = 0; k < la; ++k) ++pair_power[ea[k]];
      for (int k = 0; k < lb; ++k) ++pair_power[eb[k]];

      Signature sig;
      bool dead = false;
      for (int k = 0; k < la && !dead; ++k) {
        const uint8_t p = pair_power[ea[k]];
        if (p == 1 || (p == 3 && m3_zero)) dead = true;
      }
      for (int k = 0; k < lb && !dead; ++k) {
        const uint8_t p = pair_power[eb[k]];
        if (p == 1 || (p == 3 && m3_zero)) dead = true;
      }
      if (!dead) {
        // count each surviving pair once (power cells are shared between the
        // two edge lists, so zero them as they are consumed)
        for (int k = 0; k < la; ++k) {
          const uint8_t p = pair_power[ea[k]];
          if (p == 0) continue;
          pair_power[ea[k]] = 0;
          if (p == 3) ++sig.n3;
          if (p == 4) ++sig.n4;
        }
        for (int k = 0; k < lb; ++k) {
          const uint8_t p = pair_power[eb[k]];
          if (p == 0) continue;
          pair_power[eb[k]] = 0;
          if (p == 3) ++sig.n3;
          if (p == 4) ++sig.n4;
        }
        const uint8_t fb = perms.fixed[b];
        sig.n_both = std::popcount(static_cast<unsigned>(fa & fb));
        sig.n_sigma = std::popcount(static_cast<unsigned>(fa & ~fb));
        sig.n_tau = std::popcount(static_cast<unsigned>(fb & ~fa));
        const int sign = sa * perms.signs[b];
        if (memoize) {
          signed_counts[pack_key(sig)] += sign;
        } else if (sign > 0) {
          total += evaluate(sig, pows);
        } else {
          total -= evaluate(sig, pows);
        }
      } else {
        for (int k = 0; k < la; ++k) pair_power[ea[k]] = 0;
        for (int k = 0; k < lb; ++k) pair_power[eb[k]] = 0;
      }
    }
  }

  if (memoize) {
    for (const auto& [key, weight] : signed_counts) {
      if (weight == 0) continue;
      Signature sig;
      sig.n3 = static_cast<int>(key & 0xF);
      sig.n4 = static_cast<int>((key >> 4) & 0xF);
      sig.n_both = static_cast<int>((key >> 8) & 0xF);
      sig.n_sigma = static_cast<int>((key >> 12) & 0xF);
      sig.n_tau = static_cast<int>((key >> 16) & 0xF);
      total += Rational(weight) * evaluate(sig, pows);
    }
  }
  return total;
}

}  // namespace wck
