#pragma once

// BFV somewhat-homomorphic encryption over R_q = Z_q[x]/(x^n + 1) with
// plaintexts in R_t, homomorphic add and multiply, and both relinearization
// methods: a base-T ladder (v1) and a key scaled by an auxiliary modulus p (v2).

#include <cstdint>
#include <optional>
#include <vector>

#include "lattika/ring.hpp"
#include "lattika/sampling.hpp"

namespace lattika::bfv {

struct RelinV2Params {
  std::int64_t p;
  GaussianParams gauss;
  friend bool operator==(const RelinV2Params&, const RelinV2Params&) = default;
};

class BfvParams {
 public:
  /// Throws InvalidParameter unless 1 < t < q, delta >= 2, base >= 2 and p
  /// odd, with 2 n t (q/2)^2 and n (q/2) (pq/2) inside the 126-bit budget.
  BfvParams(RingParams ring, std::int64_t t, GaussianParams gauss,
            std::optional<std::int64_t> relin_base = std::nullopt,
            std::optional<RelinV2Params> relin_v2 = std::nullopt);

  /// n = 1024, q = 6620830889, t = 83, sigma = 1, T = 256, p = 655360001,
  /// sigma' = 2.
  static BfvParams reference();

  const RingParams& ring() const noexcept { return ring_; }
  std::size_t degree() const noexcept { return ring_.degree(); }
  const Modulus& modulus() const noexcept { return ring_.modulus(); }
  std::int64_t t() const noexcept { return t_; }
  /// floor(q / t)
  std::int64_t delta() const noexcept { return delta_; }
  /// q - t * delta
  std::int64_t rt() const noexcept { return modulus().value() - t_ * delta_; }
  const GaussianParams& gauss() const noexcept { return gauss_; }

  const std::optional<std::int64_t>& relin_base() const noexcept { return relin_base_; }
  /// floor(log_T q); throws InvalidParameter without a relin base.
  int relin_levels() const;

  const std::optional<RelinV2Params>& relin_v2() const noexcept { return relin_v2_; }
  /// R_{pq}; throws InvalidParameter without v2 parameters.
  const RingParams& pq_ring() const;

  friend bool operator==(const BfvParams& a, const BfvParams& b) {
    return a.ring_ == b.ring_ && a.t_ == b.t_ && a.gauss_ == b.gauss_ &&
           a.relin_base_ == b.relin_base_ && a.relin_v2_ == b.relin_v2_;
  }

 private:
  RingParams ring_;
  std::int64_t t_;
  std::int64_t delta_;
  GaussianParams gauss_;
  std::optional<std::int64_t> relin_base_;
  std::optional<RelinV2Params> relin_v2_;
  std::optional<RingParams> pq_ring_;
};

/// Plaintext polynomial: n coefficients, symmetric mod t.
using Plaintext = Coeffs;

struct SecretKey {
  BfvParams params;
  RingElement s;  // binary
};

struct PublicKey {
  BfvParams params;
  RingElement b;
  RingElement a;
};

struct Ciphertext {
  RingElement u;
  RingElement v;
  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// Three-component product, decryptable with s^2.
struct Product {
  RingElement h0;
  RingElement h1;
  RingElement h2;
  friend bool operator==(const Product&, const Product&) = default;
};

/// b[k] = [-(a[k] s + e[k]) + T^k s^2]_q for k = 0..l.
struct RelinKeyV1 {
  BfvParams params;
  std::int64_t base;
  std::vector<RingElement> b;
  std::vector<RingElement> a;
};

/// (b, a) over R_{pq} with b = [-(a s + e) + p s^2]_{pq}.
struct RelinKeyV2 {
  BfvParams params;
  std::int64_t p;
  RingElement b;
  RingElement a;
};

struct KeySet {
  SecretKey secret;
  PublicKey pub;
  std::optional<RelinKeyV1> relin_v1;  // present iff params carry a base
  std::optional<RelinKeyV2> relin_v2;  // present iff params carry p
};

KeySet keygen(const BfvParams& params, Rng& rng);
RelinKeyV1 relin_keygen_v1(const SecretKey& sk, Rng& rng);
RelinKeyV2 relin_keygen_v2(const SecretKey& sk, Rng& rng);

/// Coefficients must satisfy |m_i| < t (PlaintextOutOfRange) and the length
/// must be n (DimMismatch).
Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng);

Plaintext decrypt(const SecretKey& sk, const Ciphertext& ct);
/// Decrypts a product with the quadratic secret (1, s, s^2).
Plaintext decrypt_quadratic(const SecretKey& sk, const Product& prod);

/// [u + v s]_q and [h0 + h1 s + h2 s^2]_q.
RingElement phase(const SecretKey& sk, const Ciphertext& ct);
RingElement phase(const SecretKey& sk, const Product& prod);

Ciphertext add(const Ciphertext& x, const Ciphertext& y);
Product multiply(const BfvParams& params, const Ciphertext& x, const Ciphertext& y);

/// Throws KeyMismatch when the key does not belong to these parameters.
Ciphertext relinearize_v1(const Product& prod, const RelinKeyV1& rk);
Ciphertext relinearize_v2(const Product& prod, const RelinKeyV2& rk);

/// Centered base-T digits of symmetric integers: x = sum_k T^k d_k with
/// |d_k| <= T/2. Throws InvalidParameter when `count` digits cannot hold x.
std::vector<Coeffs> decompose_base(const Coeffs& x, std::int64_t base, int count);
Coeffs recompose_base(const std::vector<Coeffs>& digits, std::int64_t base);

/// [m]_t coefficient-wise, for any integer-valued vector.
Plaintext reduce_plain(const Coeffs& m, std::int64_t t);
Plaintext plain_add(const Plaintext& x, const Plaintext& y, std::int64_t t);
/// [x y]_t in Z_t[x]/(x^n + 1).
Plaintext plain_mul(const Plaintext& x, const Plaintext& y, std::int64_t t);

/// ||[phase - delta m]_q||_inf for a known plaintext m.
std::int64_t noise(const SecretKey& sk, const Ciphertext& ct, const Plaintext& m);
std::int64_t noise(const SecretKey& sk, const Product& prod, const Plaintext& m);

/// log2(delta / (2 ||noise||)) against the decrypted plaintext. A noiseless
/// ciphertext reports the sentinel log2(delta).
double noise_budget(const SecretKey& sk, const Ciphertext& ct);

namespace bounds {

/// Worst-case analytic envelopes. B is the sampler support bound of the
/// relevant Gaussian and the expansion factor is n.
double fresh(const BfvParams& params);
double relin_v1(const BfvParams& params);
double relin_v2(const BfvParams& params, std::int64_t secret_norm);
double multiply(const BfvParams& params, double input_noise, std::int64_t secret_norm);
/// Largest noise that is guaranteed to decrypt: (delta - r_t) / 2.
double decryption(const BfvParams& params);

}  // namespace bounds

namespace detail {

/// Secret and public key only; the relin keys are left empty.
KeySet keygen_with(const BfvParams& params, const RingElement& s, const RingElement& a,
                   const RingElement& e);
Ciphertext encrypt_with(const PublicKey& pk, const Plaintext& m, const RingElement& r,
                        const RingElement& e1, const RingElement& e2);
RelinKeyV1 relin_keygen_v1_with(const SecretKey& sk, const std::vector<RingElement>& a,
                                const std::vector<RingElement>& e);
/// a and e live in R_{pq}.
RelinKeyV2 relin_keygen_v2_with(const SecretKey& sk, const RingElement& a, const RingElement& e);

}  // namespace detail

}  // namespace lattika::bfv
