#pragma once

// Ring-LWE encryption of n bits at a time over R_q = Z_q[x]/(x^n + 1):
//   b = -[a s + e]_q,  u = b r + e1 + floor(q/2) m,  v = a r + e2,
//   m = [round(2 [u + v s]_q / q)]_2.
// s, r, e, e1, e2 are all drawn from the error Gaussian.

#include "lattika/ring.hpp"
#include "lattika/sampling.hpp"

namespace lattika::lpr {

struct LprParams {
  RingParams ring;
  GaussianParams gauss;
  friend bool operator==(const LprParams&, const LprParams&) = default;
};

struct SecretKey {
  LprParams params;
  RingElement s;
};

struct PublicKey {
  LprParams params;
  RingElement b;
  RingElement a;
};

struct Ciphertext {
  RingElement u;
  RingElement v;
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

struct KeyPair {
  SecretKey secret;
  PublicKey pub;
};

KeyPair keygen(const LprParams& params, Rng& rng);

/// message coefficients must be 0 or 1 (NotBinary otherwise).
Ciphertext encrypt(const PublicKey& pk, const RingElement& message, Rng& rng);

/// [u + v s]_q
RingElement phase(const SecretKey& sk, const Ciphertext& ct);

/// Throws ParamMismatch when the ciphertext ring differs from the key's.
RingElement decrypt(const SecretKey& sk, const Ciphertext& ct);

namespace detail {

KeyPair keygen_with(const LprParams& params, const RingElement& a, const RingElement& s,
                    const RingElement& e);

Ciphertext encrypt_with(const PublicKey& pk, const RingElement& message, const RingElement& r,
                        const RingElement& e1, const RingElement& e2);

}  // namespace detail

}  // namespace lattika::lpr
