#include "lattika/lwe.hpp"

#include <string>

#include "lattika/errors.hpp"
#include "lattika/zq_linalg.hpp"

namespace lattika::lwe {

LweParams::LweParams(std::size_t n_, Modulus q_, std::size_t samples_, GaussianParams gauss_)
    : n(n_), q(q_), samples(samples_), gauss(gauss_) {
  if (n == 0) throw InvalidParameter("lwe dimension n must be at least 1");
  if (samples == 0) throw InvalidParameter("lwe sample count N must be at least 1");
}

namespace {

void check_bit(int bit) {
  if (bit != 0 && bit != 1) throw InvalidParameter("message must be a single bit, got " + std::to_string(bit));
}

}  // namespace

namespace detail {

KeyPair keygen_with(const LweParams& params, const CoeffMatrix& a, const Coeffs& t,
                    const Coeffs& e) {
  const auto n = static_cast<Eigen::Index>(params.n);
  const auto rows = static_cast<Eigen::Index>(params.samples);
  if (a.rows() != rows || a.cols() != n || t.size() != n || e.size() != rows) {
    throw DimMismatch("lwe keygen inputs do not match the parameters");
  }
  const Modulus& q = params.q;
  Coeffs b = mat_vec_mod(a, t, q);
  for (Eigen::Index i = 0; i < rows; ++i) b(i) = q.add(b(i), e(i));

  CoeffMatrix p(rows, n + 1);
  p.col(0) = b;
  p.rightCols(n) = reduce_mod((-a).eval(), q);

  Coeffs s(n + 1);
  s(0) = 1;
  s.tail(n) = reduce_mod(t, q);
  return {SecretKey{params, s}, PublicKey{params, std::move(p)}};
}

Ciphertext encrypt_with(const PublicKey& pk, int bit, const Coeffs& r) {
  check_bit(bit);
  if (r.size() != pk.p.rows()) throw DimMismatch("lwe randomness length must equal N");
  const Modulus& q = pk.params.q;
  Coeffs c = mat_t_vec_mod(pk.p, r, q);
  c(0) = q.add(c(0), static_cast<std::int64_t>(bit) * q.half());
  return {c};
}

Sample sample_with(const Coeffs& t, const Coeffs& a, std::int64_t e, const Modulus& q) {
  return {reduce_mod(a, q), q.add(dot_mod(a, t, q), e)};
}

}  // namespace detail

KeyPair keygen(const LweParams& params, Rng& rng) {
  const Modulus& q = params.q;
  CoeffMatrix a(static_cast<Eigen::Index>(params.samples), static_cast<Eigen::Index>(params.n));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = sample_uniform_zq(q, rng).value();
  }
  const Coeffs t = sample_uniform_vector(q, params.n, rng);
  const Coeffs e = sample_gauss_vector(params.gauss, params.samples, rng);
  return detail::keygen_with(params, a, t, e);
}

Ciphertext encrypt(const PublicKey& pk, int bit, Rng& rng) {
  check_bit(bit);
  return detail::encrypt_with(pk, bit, sample_binary_vector(pk.params.samples, rng));
}

std::int64_t phase(const SecretKey& sk, const Ciphertext& ct) {
  if (ct.c.size() != sk.s.size()) {
    throw DimMismatch("ciphertext length " + std::to_string(ct.c.size()) + " != " +
                      std::to_string(sk.s.size()));
  }
  return dot_mod(ct.c, sk.s, sk.params.q);
}

int decrypt(const SecretKey& sk, const Ciphertext& ct) {
  const i128 x = phase(sk, ct);
  return static_cast<int>(canonical_mod(round_div(2 * x, sk.params.q.value()), 2));
}

std::vector<Sample> sample_stream(const Coeffs& t, const LweParams& params, std::size_t count,
                                  Rng& rng) {
  if (t.size() != static_cast<Eigen::Index>(params.n)) throw DimMismatch("secret length must equal n");
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Coeffs a = sample_uniform_vector(params.q, params.n, rng);
    out.push_back(detail::sample_with(t, a, sample_dgauss_int(params.gauss, rng), params.q));
  }
  return out;
}

}  // namespace lattika::lwe
