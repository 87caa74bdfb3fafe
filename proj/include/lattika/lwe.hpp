#pragma once

// Regev public-key encryption of single bits, matrix form:
//   secret s = (1, t), public P = [b | -A] with b = A t + e,
//   c = [P^T r + floor(q/2) (m, 0, ..., 0)]_q,  m = [round(2 [c.s]_q / q)]_2.

#include <cstddef>
#include <vector>

#include "lattika/arith.hpp"
#include "lattika/sampling.hpp"

namespace lattika::lwe {

struct LweParams {
  /// Throws InvalidParameter unless n >= 1 and N >= 1.
  LweParams(std::size_t n, Modulus q, std::size_t samples, GaussianParams gauss);

  std::size_t n;
  Modulus q;
  std::size_t samples;  // N, rows of the public matrix
  GaussianParams gauss;

  friend bool operator==(const LweParams&, const LweParams&) = default;
};

struct SecretKey {
  LweParams params;
  Coeffs s;  // length n + 1, s(0) == 1
};

struct PublicKey {
  LweParams params;
  CoeffMatrix p;  // N x (n + 1)
};

struct Ciphertext {
  Coeffs c;  // length n + 1
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct KeyPair {
  SecretKey secret;
  PublicKey pub;
};

/// One sample (a, b = [<a, t> + e]_q) of the LWE distribution.
struct Sample {
  Coeffs a;
  std::int64_t b;
};

KeyPair keygen(const LweParams& params, Rng& rng);

/// Throws InvalidParameter unless bit is 0 or 1.
Ciphertext encrypt(const PublicKey& pk, int bit, Rng& rng);

/// Throws DimMismatch for a ciphertext of the wrong length.
int decrypt(const SecretKey& sk, const Ciphertext& ct);

/// [c.s]_q, the decryption phase before rounding.
std::int64_t phase(const SecretKey& sk, const Ciphertext& ct);

/// Draws count samples for the secret tail t (length n).
std::vector<Sample> sample_stream(const Coeffs& t, const LweParams& params, std::size_t count,
                                  Rng& rng);

namespace detail {

/// Keygen with caller-chosen A (N x n), t (length n) and e (length N).
KeyPair keygen_with(const LweParams& params, const CoeffMatrix& a, const Coeffs& t,
                    const Coeffs& e);

/// Encryption with caller-chosen binary r (length N).
Ciphertext encrypt_with(const PublicKey& pk, int bit, const Coeffs& r);

Sample sample_with(const Coeffs& t, const Coeffs& a, std::int64_t e, const Modulus& q);

}  // namespace detail

}  // namespace lattika::lwe
