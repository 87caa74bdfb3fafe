#pragma once

// Shared helpers for the unit tests: pinned seeds and independent oracles.

#include <cstdint>
#include <string>

#include "lattika/arith.hpp"
#include "lattika/sampling.hpp"

namespace lattika::test {

inline Seed seed(std::uint64_t k) {
  Seed::Bytes b{};
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k >> (8 * i));
  b[31] = 0x5a;
  return Seed(b);
}

inline Rng rng(std::uint64_t k) { return Rng(seed(k)); }

// Extended Euclid over plain integers.
inline std::int64_t euclid_inverse(std::int64_t a, std::int64_t m) {
  i128 r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i128 k = r0 / r1;
    i128 tmp = r0 - k * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - k * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) return 0;
  return static_cast<std::int64_t>(((t0 % m) + m) % m);
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Smallest prime q >= start with q = 1 mod m, by trial division.
inline std::uint64_t search_prime_1_mod(std::uint64_t start, std::uint64_t m) {
  std::uint64_t q = start - (start % m) + 1;
  if (q < start) q += m;
  while (!trial_division_prime(q)) q += m;
  return q;
}

// Naive negacyclic product reduced into [0, q) after every step.
inline Coeffs naive_negacyclic(const Coeffs& a, const Coeffs& b, std::int64_t q) {
  const Eigen::Index n = a.size();
  std::vector<i128> acc(static_cast<std::size_t>(n), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      i128 term = (static_cast<i128>(a(i)) * b(j)) % q;
      Eigen::Index k = i + j;
      if (k >= n) {
        k -= n;
        term = -term;
      }
      acc[static_cast<std::size_t>(k)] = (acc[static_cast<std::size_t>(k)] + term) % q;
    }
  }
  Coeffs out(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    i128 v = (acc[static_cast<std::size_t>(k)] % q + q) % q;
    if (2 * v >= q) v -= q;
    out(k) = static_cast<std::int64_t>(v);
  }
  return out;
}

}  // namespace lattika::test
