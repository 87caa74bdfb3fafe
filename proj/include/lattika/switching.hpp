#pragma once

// Vector-level primitives for modulus and key switching: bit decomposition,
// powers-of-two expansion, Scale between odd moduli, and switch keys.

#include <cstdint>

#include "lattika/arith.hpp"
#include "lattika/sampling.hpp"

namespace lattika::switching {

/// ceil(log2 q) for any q >= 2.
int bit_count(std::int64_t q);

/// Bit layers (w_0, ..., w_{l-1}) of the canonical residues of x mod q, each
/// layer a length-n block, so x = sum_j 2^j w_j (mod q). Accepts any q >= 2.
Coeffs bit_decomp(const Coeffs& x, std::int64_t q);

/// (y, 2y, ..., 2^{l-1} y) mod q, canonical residues in [0, q).
Coeffs powers_of_two(const Coeffs& y, std::int64_t q);

/// Inverse of bit_decomp: sum_j 2^j w_j, canonical mod q.
Coeffs bit_recompose(const Coeffs& bits, std::int64_t q);

/// Componentwise the integer closest to (p/q) x_i that is congruent to x_i
/// mod r; exact midpoints go to the smaller candidate. Requires q > p >= 2
/// and q = p = 1 (mod r), else BadModuli.
Coeffs scale(const Coeffs& x, std::int64_t q, std::int64_t p, std::int64_t r = 2);

struct SwitchKey {
  Modulus q;
  std::size_t source_dim;  // n1
  CoeffMatrix p;           // (n1 + 1) l rows, n2 + 1 columns
};

/// Key turning ciphertexts under s1 = (1, t1) into ciphertexts under
/// s2 = (1, t2). Throws InvalidParameter unless s1(0) == s2(0) == 1.
SwitchKey switch_keygen(const Coeffs& s1, const Coeffs& s2, const Modulus& q,
                        const GaussianParams& g, Rng& rng);

/// [BitDecomp(c1)^T P]_q. Throws DimMismatch unless c1 has length n1 + 1.
Coeffs switch_key(const SwitchKey& key, const Coeffs& c1);

namespace detail {

/// a is N1 x n2, e has length N1.
SwitchKey switch_keygen_with(const Coeffs& s1, const Coeffs& s2, const Modulus& q,
                             const CoeffMatrix& a, const Coeffs& e);

}  // namespace detail

}  // namespace lattika::switching
