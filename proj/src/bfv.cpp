#include "lattika/bfv.hpp"

#include <cmath>
#include <string>

#include "lattika/errors.hpp"

namespace lattika::bfv {

namespace {

constexpr i128 kProductBudget = static_cast<i128>(1) << 126;

void check_ring(const BfvParams& params, const RingElement& x) {
  if (!(x.params() == params.ring())) throw ParamMismatch("ring parameters differ from the key's");
}

void check_same_ring(const RingElement& x, const RingElement& y) {
  if (!(x.params() == y.params())) throw ParamMismatch("ciphertexts use different ring parameters");
}

WideCoeffs wide_sum(WideCoeffs x, const WideCoeffs& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}

// [round(t/q x)]_q applied to an exact integer polynomial.
RingElement scale_down(const BfvParams& params, const WideCoeffs& x) {
  const WideCoeffs scaled = multiply_round(x, params.t(), params.modulus().value());
  return RingElement::from_wide(params.ring(), scaled);
}

Plaintext round_to_plain(const BfvParams& params, const RingElement& phase_value) {
  const WideCoeffs scaled =
      multiply_round(widen(phase_value.span()), params.t(), params.modulus().value());
  return reduce_coeffs(scaled, params.t());
}

// s^2 computed exactly over Z[x]/(x^n + 1).
WideCoeffs square_exact(const RingElement& s) { return negacyclic_product(s.span(), s.span()); }

RingElement scaled_plain(const BfvParams& params, const Plaintext& m) {
  Coeffs out(m.size());
  const Modulus& q = params.modulus();
  for (Eigen::Index i = 0; i < m.size(); ++i) out(i) = q.mul(params.delta(), m(i));
  return RingElement(params.ring(), out);
}

}  // namespace

BfvParams::BfvParams(RingParams ring, std::int64_t t, GaussianParams gauss,
                     std::optional<std::int64_t> relin_base,
                     std::optional<RelinV2Params> relin_v2)
    : ring_(std::move(ring)),
      t_(t),
      delta_(0),
      gauss_(gauss),
      relin_base_(relin_base),
      relin_v2_(relin_v2) {
  const std::int64_t q = ring_.modulus().value();
  if (t_ <= 1 || t_ >= q) throw InvalidParameter("plaintext modulus t must satisfy 1 < t < q");
  delta_ = q / t_;
  if (delta_ < 2) throw InvalidParameter("delta = floor(q/t) must be at least 2");
  if (relin_base_ && *relin_base_ < 2) throw InvalidParameter("relin base T must be at least 2");
  const auto len = static_cast<i128>(ring_.degree());
  // h1 sums two exact products of symmetric residues, and is then scaled by t.
  const i128 half_q = q / 2 + 1;
  if (half_q * half_q >= kProductBudget / (2 * len * t_)) {
    throw InvalidParameter("t * q^2 * n too large for exact ciphertext products");
  }
  if (relin_v2_) {
    const std::int64_t p = relin_v2_->p;
    if (p < 3 || p % 2 == 0) throw InvalidParameter("auxiliary modulus p must be odd and >= 3");
    const i128 pq = static_cast<i128>(p) * q;
    if (pq >= (static_cast<i128>(1) << 62)) throw InvalidParameter("p * q must be below 2^62");
    if (half_q * (pq / 2 + 1) >= kProductBudget / len) {
      throw InvalidParameter("p * q too large for exact relinearization");
    }
    pq_ring_.emplace(ring_.degree(), Modulus(static_cast<std::int64_t>(pq)));
  }
}

BfvParams BfvParams::reference() {
  return BfvParams(RingParams(1024, Modulus(6620830889LL)), 83, GaussianParams(1.0), 256,
                   RelinV2Params{655360001LL, GaussianParams(2.0)});
}

int BfvParams::relin_levels() const {
  if (!relin_base_) throw InvalidParameter("parameters carry no relin base");
  int l = 0;
  i128 power = *relin_base_;
  while (power <= modulus().value()) {
    power *= *relin_base_;
    ++l;
  }
  return l;
}

const RingParams& BfvParams::pq_ring() const {
  if (!pq_ring_) throw InvalidParameter("parameters carry no auxiliary modulus");
  return *pq_ring_;
}

namespace detail {

KeySet keygen_with(const BfvParams& params, const RingElement& s, const RingElement& a,
                   const RingElement& e) {
  check_ring(params, s);
  check_ring(params, a);
  check_ring(params, e);
  RingElement b = -(a * s + e);
  return {SecretKey{params, s}, PublicKey{params, std::move(b), a}, std::nullopt, std::nullopt};
}

Ciphertext encrypt_with(const PublicKey& pk, const Plaintext& m, const RingElement& r,
                        const RingElement& e1, const RingElement& e2) {
  const BfvParams& params = pk.params;
  if (m.size() != static_cast<Eigen::Index>(params.degree())) {
    throw DimMismatch("plaintext must have exactly n coefficients");
  }
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i) <= -params.t() || m(i) >= params.t()) {
      throw PlaintextOutOfRange("plaintext coefficient " + std::to_string(i) + " = " +
                                std::to_string(m(i)) + " outside (-t, t)");
    }
  }
  const Plaintext centered = reduce_plain(m, params.t());
  RingElement u = pk.b * r + e1 + scaled_plain(params, centered);
  RingElement v = pk.a * r + e2;
  return {std::move(u), std::move(v)};
}

RelinKeyV1 relin_keygen_v1_with(const SecretKey& sk, const std::vector<RingElement>& a,
                                const std::vector<RingElement>& e) {
  const BfvParams& params = sk.params;
  const std::int64_t base = params.relin_base().value_or(0);
  const auto count = static_cast<std::size_t>(params.relin_levels()) + 1;
  if (a.size() != count || e.size() != count) throw DimMismatch("relin ladder needs l + 1 entries");
  const Modulus& q = params.modulus();
  const RingElement s2 = RingElement::from_wide(params.ring(), square_exact(sk.s));
  RelinKeyV1 rk{params, base, {}, {}};
  i128 power = 1;
  for (std::size_t k = 0; k < count; ++k) {
    check_ring(params, a[k]);
    check_ring(params, e[k]);
    rk.b.push_back(-(a[k] * sk.s + e[k]) + scalar_mul(q.reduce(power), s2));
    rk.a.push_back(a[k]);
    power = q.reduce(power * base);
  }
  return rk;
}

RelinKeyV2 relin_keygen_v2_with(const SecretKey& sk, const RingElement& a, const RingElement& e) {
  const BfvParams& params = sk.params;
  const RingParams& pq = params.pq_ring();
  if (!(a.params() == pq) || !(e.params() == pq)) throw ParamMismatch("relin v2 inputs must live in R_pq");
  const std::int64_t p = params.relin_v2()->p;
  const RingElement s = reinterpret(sk.s, pq);
  const RingElement s2 = RingElement::from_wide(pq, square_exact(sk.s));
  RingElement b = -(a * s + e) + scalar_mul(p, s2);
  return {params, p, std::move(b), a};
}

}  // namespace detail

KeySet keygen(const BfvParams& params, Rng& rng) {
  RingElement s = sample_binary_ring(params.ring(), rng);
  RingElement a = sample_uniform_ring(params.ring(), rng);
  RingElement e = sample_gauss_ring(params.ring(), params.gauss(), rng);
  KeySet keys = detail::keygen_with(params, s, a, e);
  if (params.relin_base()) keys.relin_v1 = relin_keygen_v1(keys.secret, rng);
  if (params.relin_v2()) keys.relin_v2 = relin_keygen_v2(keys.secret, rng);
  return keys;
}

RelinKeyV1 relin_keygen_v1(const SecretKey& sk, Rng& rng) {
  const BfvParams& params = sk.params;
  const auto count = static_cast<std::size_t>(params.relin_levels()) + 1;
  std::vector<RingElement> a;
  std::vector<RingElement> e;
  for (std::size_t k = 0; k < count; ++k) {
    a.push_back(sample_uniform_ring(params.ring(), rng));
    e.push_back(sample_gauss_ring(params.ring(), params.gauss(), rng));
  }
  return detail::relin_keygen_v1_with(sk, a, e);
}

RelinKeyV2 relin_keygen_v2(const SecretKey& sk, Rng& rng) {
  const BfvParams& params = sk.params;
  const RingParams& pq = params.pq_ring();
  RingElement a = sample_uniform_ring(pq, rng);
  RingElement e = sample_gauss_ring(pq, params.relin_v2()->gauss, rng);
  return detail::relin_keygen_v2_with(sk, a, e);
}

Ciphertext encrypt(const PublicKey& pk, const Plaintext& m, Rng& rng) {
  const BfvParams& params = pk.params;
  RingElement r = sample_binary_ring(params.ring(), rng);
  RingElement e1 = sample_gauss_ring(params.ring(), params.gauss(), rng);
  RingElement e2 = sample_gauss_ring(params.ring(), params.gauss(), rng);
  return detail::encrypt_with(pk, m, r, e1, e2);
}

RingElement phase(const SecretKey& sk, const Ciphertext& ct) {
  check_ring(sk.params, ct.u);
  check_ring(sk.params, ct.v);
  return ct.u + ct.v * sk.s;
}

RingElement phase(const SecretKey& sk, const Product& prod) {
  check_ring(sk.params, prod.h0);
  check_ring(sk.params, prod.h1);
  check_ring(sk.params, prod.h2);
  const RingElement s2 = RingElement::from_wide(sk.params.ring(), square_exact(sk.s));
  return prod.h0 + prod.h1 * sk.s + prod.h2 * s2;
}

Plaintext decrypt(const SecretKey& sk, const Ciphertext& ct) {
  return round_to_plain(sk.params, phase(sk, ct));
}

Plaintext decrypt_quadratic(const SecretKey& sk, const Product& prod) {
  return round_to_plain(sk.params, phase(sk, prod));
}

Ciphertext add(const Ciphertext& x, const Ciphertext& y) {
  check_same_ring(x.u, y.u);
  return {x.u + y.u, x.v + y.v};
}

Product multiply(const BfvParams& params, const Ciphertext& x, const Ciphertext& y) {
  for (const RingElement* r : {&x.u, &x.v, &y.u, &y.v}) check_ring(params, *r);
  // Products are taken over Z[x]/(x^n + 1) and only then scaled by t/q.
  const WideCoeffs h0 = negacyclic_product(x.u.span(), y.u.span());
  const WideCoeffs h1 = wide_sum(negacyclic_product(x.u.span(), y.v.span()),
                                 negacyclic_product(y.u.span(), x.v.span()));
  const WideCoeffs h2 = negacyclic_product(x.v.span(), y.v.span());
  return {scale_down(params, h0), scale_down(params, h1), scale_down(params, h2)};
}

Ciphertext relinearize_v1(const Product& prod, const RelinKeyV1& rk) {
  const BfvParams& params = rk.params;
  if (!params.relin_base() || *params.relin_base() != rk.base) {
    throw KeyMismatch("relin v1 key base does not match its parameters");
  }
  const auto count = static_cast<std::size_t>(params.relin_levels()) + 1;
  if (rk.b.size() != count || rk.a.size() != count) throw KeyMismatch("relin v1 ladder has the wrong length");
  if (!(prod.h2.params() == params.ring())) throw KeyMismatch("relin v1 key ring differs from the product's");
  check_same_ring(prod.h0, prod.h1);
  check_same_ring(prod.h0, prod.h2);

  const std::vector<Coeffs> digits =
      decompose_base(prod.h2.coeffs(), rk.base, static_cast<int>(count));
  RingElement h0 = prod.h0;
  RingElement h1 = prod.h1;
  for (std::size_t k = 0; k < count; ++k) {
    const RingElement d(params.ring(), digits[k]);
    h0 = h0 + rk.b[k] * d;
    h1 = h1 + rk.a[k] * d;
  }
  return {std::move(h0), std::move(h1)};
}

Ciphertext relinearize_v2(const Product& prod, const RelinKeyV2& rk) {
  const BfvParams& params = rk.params;
  if (!params.relin_v2() || params.relin_v2()->p != rk.p) {
    throw KeyMismatch("relin v2 key modulus does not match its parameters");
  }
  const RingParams& pq = params.pq_ring();
  if (!(rk.b.params() == pq) || !(rk.a.params() == pq)) throw KeyMismatch("relin v2 key is not over R_pq");
  if (!(prod.h2.params() == params.ring())) throw KeyMismatch("relin v2 key ring differs from the product's");
  check_same_ring(prod.h0, prod.h1);
  check_same_ring(prod.h0, prod.h2);

  const WideCoeffs hb = multiply_round(negacyclic_product(prod.h2.span(), rk.b.span()), 1, rk.p);
  const WideCoeffs ha = multiply_round(negacyclic_product(prod.h2.span(), rk.a.span()), 1, rk.p);
  return {prod.h0 + RingElement::from_wide(params.ring(), hb),
          prod.h1 + RingElement::from_wide(params.ring(), ha)};
}

std::vector<Coeffs> decompose_base(const Coeffs& x, std::int64_t base, int count) {
  if (base < 2) throw InvalidParameter("decomposition base must be at least 2");
  if (count < 1) throw InvalidParameter("digit count must be positive");
  std::vector<Coeffs> digits(static_cast<std::size_t>(count), Coeffs::Zero(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    i128 rest = x(i);
    const bool negative = rest < 0;
    for (int k = 0; k < count; ++k) {
      i128 d = canonical_mod(rest, base);
      // Ties at T/2 follow the sign of the input so the expansion terminates
      // for every base, including T = 2.
      if (2 * d > base || (2 * d == base && negative)) d -= base;
      digits[static_cast<std::size_t>(k)](i) = static_cast<std::int64_t>(d);
      rest = (rest - d) / base;
    }
    if (rest != 0) {
      throw InvalidParameter("value " + to_string(x(i)) + " needs more than " +
                             std::to_string(count) + " base-" + std::to_string(base) + " digits");
    }
  }
  return digits;
}

Coeffs recompose_base(const std::vector<Coeffs>& digits, std::int64_t base) {
  if (digits.empty()) return Coeffs();
  std::vector<i128> acc(static_cast<std::size_t>(digits.front().size()), 0);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (it->size() != digits.front().size()) throw DimMismatch("digit vectors differ in length");
    for (Eigen::Index i = 0; i < it->size(); ++i) {
      acc[static_cast<std::size_t>(i)] = acc[static_cast<std::size_t>(i)] * base + (*it)(i);
    }
  }
  Coeffs out(static_cast<Eigen::Index>(acc.size()));
  for (std::size_t i = 0; i < acc.size(); ++i) out(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(acc[i]);
  return out;
}

Plaintext reduce_plain(const Coeffs& m, std::int64_t t) {
  return m.unaryExpr([t](std::int64_t v) { return symmetric_mod(v, t); });
}

Plaintext plain_add(const Plaintext& x, const Plaintext& y, std::int64_t t) {
  if (x.size() != y.size()) throw DimMismatch("plaintext lengths differ");
  return reduce_plain(x + y, t);
}

Plaintext plain_mul(const Plaintext& x, const Plaintext& y, std::int64_t t) {
  if (x.size() != y.size()) throw DimMismatch("plaintext lengths differ");
  const WideCoeffs prod = negacyclic_product({x.data(), static_cast<std::size_t>(x.size())},
                                             {y.data(), static_cast<std::size_t>(y.size())});
  return reduce_coeffs(prod, t);
}

namespace {

std::int64_t noise_of(const BfvParams& params, const RingElement& phase_value, const Plaintext& m) {
  if (m.size() != static_cast<Eigen::Index>(params.degree())) throw DimMismatch("plaintext must have n coefficients");
  return inf_norm(phase_value - scaled_plain(params, reduce_plain(m, params.t())));
}

}  // namespace

std::int64_t noise(const SecretKey& sk, const Ciphertext& ct, const Plaintext& m) {
  return noise_of(sk.params, phase(sk, ct), m);
}

std::int64_t noise(const SecretKey& sk, const Product& prod, const Plaintext& m) {
  return noise_of(sk.params, phase(sk, prod), m);
}

double noise_budget(const SecretKey& sk, const Ciphertext& ct) {
  const RingElement ph = phase(sk, ct);
  const std::int64_t e = noise_of(sk.params, ph, round_to_plain(sk.params, ph));
  const double delta = static_cast<double>(sk.params.delta());
  if (e == 0) return std::log2(delta);
  return std::log2(delta / (2.0 * static_cast<double>(e)));
}

namespace bounds {

double fresh(const BfvParams& params) {
  const double b = static_cast<double>(params.gauss().tail_bound());
  const double d = static_cast<double>(expansion_factor(params.ring()));
  return 2.0 * d * b + b;
}

double relin_v1(const BfvParams& params) {
  const double levels = params.relin_levels() + 1;
  const double base = static_cast<double>(*params.relin_base());
  const double b = static_cast<double>(params.gauss().tail_bound());
  const double d = static_cast<double>(expansion_factor(params.ring()));
  return levels * base * b * d / 2.0;
}

double relin_v2(const BfvParams& params, std::int64_t secret_norm) {
  if (!params.relin_v2()) throw InvalidParameter("parameters carry no auxiliary modulus");
  const double q = static_cast<double>(params.modulus().value());
  const double p = static_cast<double>(params.relin_v2()->p);
  const double b = static_cast<double>(params.relin_v2()->gauss.tail_bound());
  const double d = static_cast<double>(expansion_factor(params.ring()));
  return q * b * d / p + 0.5 + static_cast<double>(secret_norm) * d / 2.0;
}

double multiply(const BfvParams& params, double input_noise, std::int64_t secret_norm) {
  const double t = static_cast<double>(params.t());
  const double d = static_cast<double>(expansion_factor(params.ring()));
  const double s = static_cast<double>(secret_norm);
  return 2.0 * d * t * input_noise * (d * s + 1.0) + 2.0 * t * t * d * d * (s + 1.0) * (s + 1.0);
}

double decryption(const BfvParams& params) {
  return static_cast<double>(params.delta() - params.rt()) / 2.0;
}

}  // namespace bounds

}  // namespace lattika::bfv
