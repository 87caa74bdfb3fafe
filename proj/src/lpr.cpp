#include "lattika/lpr.hpp"

#include "lattika/errors.hpp"

namespace lattika::lpr {

namespace {

void check_binary(const RingElement& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0 && m[i] != 1) throw NotBinary("message coefficient " + std::to_string(i) + " is not 0 or 1");
  }
}

void check_ring(const LprParams& params, const RingElement& x) {
  if (!(x.params() == params.ring)) throw ParamMismatch("ring parameters differ from the key's");
}

}  // namespace

namespace detail {

KeyPair keygen_with(const LprParams& params, const RingElement& a, const RingElement& s,
                    const RingElement& e) {
  check_ring(params, a);
  check_ring(params, s);
  check_ring(params, e);
  RingElement b = -(a * s + e);
  return {SecretKey{params, s}, PublicKey{params, std::move(b), a}};
}

Ciphertext encrypt_with(const PublicKey& pk, const RingElement& message, const RingElement& r,
                        const RingElement& e1, const RingElement& e2) {
  check_ring(pk.params, message);
  check_binary(message);
  const std::int64_t half = pk.params.ring.modulus().half();
  RingElement u = pk.b * r + e1 + half * message;
  RingElement v = pk.a * r + e2;
  return {std::move(u), std::move(v)};
}

}  // namespace detail

KeyPair keygen(const LprParams& params, Rng& rng) {
  RingElement a = sample_uniform_ring(params.ring, rng);
  RingElement s = sample_gauss_ring(params.ring, params.gauss, rng);
  RingElement e = sample_gauss_ring(params.ring, params.gauss, rng);
  return detail::keygen_with(params, a, s, e);
}

Ciphertext encrypt(const PublicKey& pk, const RingElement& message, Rng& rng) {
  check_ring(pk.params, message);
  check_binary(message);
  const auto& ring = pk.params.ring;
  const auto& g = pk.params.gauss;
  RingElement r = sample_gauss_ring(ring, g, rng);
  RingElement e1 = sample_gauss_ring(ring, g, rng);
  RingElement e2 = sample_gauss_ring(ring, g, rng);
  return detail::encrypt_with(pk, message, r, e1, e2);
}

RingElement phase(const SecretKey& sk, const Ciphertext& ct) {
  check_ring(sk.params, ct.u);
  check_ring(sk.params, ct.v);
  return ct.u + ct.v * sk.s;
}

RingElement decrypt(const SecretKey& sk, const Ciphertext& ct) {
  const RingElement x = phase(sk, ct);
  const std::int64_t q = sk.params.ring.modulus().value();
  Coeffs m(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    m(static_cast<Eigen::Index>(i)) = canonical_mod(round_div(static_cast<i128>(2) * x[i], q), 2);
  }
  return RingElement(sk.params.ring, m);
}

}  // namespace lattika::lpr
