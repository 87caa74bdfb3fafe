#include <gtest/gtest.h>

#include "lattika/errors.hpp"
#include "lattika/lpr.hpp"
#include "support.hpp"

namespace lattika::lpr {
namespace {

LprParams reference_params() { return {RingParams(1024, Modulus(655360001)), GaussianParams(1.0)}; }

RingElement random_bits(const RingParams& p, Rng& r) { return sample_binary_ring(p, r); }

TEST(LprKeygen, PublicKeyIdentity) {
  const LprParams p = reference_params();
  auto r = test::rng(50);
  const RingElement a = sample_uniform_ring(p.ring, r);
  const RingElement s = sample_gauss_ring(p.ring, p.gauss, r);
  const RingElement e = sample_gauss_ring(p.ring, p.gauss, r);
  const KeyPair k = detail::keygen_with(p, a, s, e);
  EXPECT_EQ(k.pub.b + k.pub.a * k.secret.s, -e);
  const KeyPair z = detail::keygen_with(p, a, s, RingElement(p.ring));
  EXPECT_EQ(z.pub.b, -(a * s));
}

TEST(LprKeygen, Deterministic) {
  auto x = test::rng(51), y = test::rng(51);
  const KeyPair a = keygen(reference_params(), x), b = keygen(reference_params(), y);
  EXPECT_EQ(a.pub.b, b.pub.b);
  EXPECT_EQ(a.secret.s, b.secret.s);
}

TEST(LprEncrypt, NoiselessPhaseIsScaledMessage) {
  const LprParams p = reference_params();
  auto r = test::rng(52);
  const KeyPair k = detail::keygen_with(p, sample_uniform_ring(p.ring, r),
                                        sample_gauss_ring(p.ring, p.gauss, r), RingElement(p.ring));
  const RingElement m = random_bits(p.ring, r);
  const RingElement zero(p.ring);
  const Ciphertext c = detail::encrypt_with(k.pub, m, sample_gauss_ring(p.ring, p.gauss, r), zero, zero);
  EXPECT_EQ(phase(k.secret, c), p.ring.modulus().half() * m);
}

TEST(LprEncrypt, PhaseIdentityWithAllNoises) {
  const LprParams p = reference_params();
  auto r = test::rng(53);
  const RingElement e = sample_gauss_ring(p.ring, p.gauss, r);
  const KeyPair k = detail::keygen_with(p, sample_uniform_ring(p.ring, r), sample_gauss_ring(p.ring, p.gauss, r), e);
  const RingElement m = random_bits(p.ring, r);
  const RingElement rr = sample_gauss_ring(p.ring, p.gauss, r);
  const RingElement e1 = sample_gauss_ring(p.ring, p.gauss, r);
  const RingElement e2 = sample_gauss_ring(p.ring, p.gauss, r);
  const Ciphertext c = detail::encrypt_with(k.pub, m, rr, e1, e2);
  // u + v s = floor(q/2) m - e r + e1 + e2 s with b = -(a s + e).
  EXPECT_EQ(phase(k.secret, c), p.ring.modulus().half() * m - e * rr + e1 + e2 * k.secret.s);
}

TEST(LprEncrypt, RejectsNonBinaryAndRandomizes) {
  const LprParams p = reference_params();
  auto r = test::rng(54);
  const KeyPair k = keygen(p, r);
  EXPECT_THROW(encrypt(k.pub, RingElement::constant(p.ring, 2), r), NotBinary);
  EXPECT_THROW(encrypt(k.pub, RingElement::constant(p.ring, -1), r), NotBinary);
  const RingElement m = random_bits(p.ring, r);
  EXPECT_NE(encrypt(k.pub, m, r), encrypt(k.pub, m, r));
}

TEST(LprDecrypt, ReferenceRoundtrips) {
  const LprParams p = reference_params();
  auto r = test::rng(55);
  const KeyPair k = keygen(p, r);
  EXPECT_EQ(decrypt(k.secret, encrypt(k.pub, RingElement(p.ring), r)), RingElement(p.ring));
  for (int i = 0; i < 100; ++i) {
    const RingElement m = random_bits(p.ring, r);
    ASSERT_EQ(decrypt(k.secret, encrypt(k.pub, m, r)), m) << i;
  }
}

TEST(LprDecrypt, InjectedNoiseFlipsOneBit) {
  const LprParams p = reference_params();
  auto r = test::rng(56);
  const KeyPair k = keygen(p, r);
  const RingElement m = random_bits(p.ring, r);
  const RingElement zero(p.ring);
  // e1 = (q/4 + margin) x^7 pushes coefficient 7 across the decision boundary.
  const std::int64_t big = p.ring.modulus().value() / 4 + 1000;
  const RingElement e1 = RingElement::monomial(p.ring, 7, big);
  const Ciphertext c = detail::encrypt_with(k.pub, m, sample_gauss_ring(p.ring, p.gauss, r), e1, zero);
  const RingElement got = decrypt(k.secret, c);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == 7) {
      EXPECT_NE(got[i], m[i]);
    } else {
      EXPECT_EQ(got[i], m[i]);
    }
  }
}

TEST(LprNoise, FreshNoiseWithinEnvelope) {
  const LprParams p = reference_params();
  const std::int64_t bound = p.gauss.tail_bound();
  const std::int64_t n = static_cast<std::int64_t>(p.ring.degree());
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto r = test::rng(2000 + s);
    const RingElement e = sample_gauss_ring(p.ring, p.gauss, r);
    const KeyPair k = detail::keygen_with(p, sample_uniform_ring(p.ring, r), sample_gauss_ring(p.ring, p.gauss, r), e);
    const RingElement rr = sample_gauss_ring(p.ring, p.gauss, r);
    const RingElement e1 = sample_gauss_ring(p.ring, p.gauss, r);
    const RingElement e2 = sample_gauss_ring(p.ring, p.gauss, r);
    const RingElement m = random_bits(p.ring, r);
    const Ciphertext c = detail::encrypt_with(k.pub, m, rr, e1, e2);
    const std::int64_t noise = inf_norm(phase(k.secret, c) - p.ring.modulus().half() * m);
    const std::int64_t envelope = n * bound * (inf_norm(rr) + inf_norm(k.secret.s)) + bound;
    ASSERT_LE(noise, envelope);
  }
}

TEST(LprDecrypt, ParamMismatch) {
  auto r = test::rng(57);
  const KeyPair k = keygen(reference_params(), r);
  const RingParams other(512, Modulus(655360001));
  EXPECT_THROW(decrypt(k.secret, Ciphertext{RingElement(other), RingElement(other)}), ParamMismatch);
}

}  // namespace
}  // namespace lattika::lpr
