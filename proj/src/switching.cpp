#include "lattika/switching.hpp"

#include <string>

#include "lattika/errors.hpp"
#include "lattika/zq_linalg.hpp"

namespace lattika::switching {

int bit_count(std::int64_t q) {
  if (q < 2) throw InvalidParameter("modulus must be at least 2");
  int l = 0;
  while ((static_cast<i128>(1) << l) < q) ++l;
  return l;
}

Coeffs bit_decomp(const Coeffs& x, std::int64_t q) {
  const int l = bit_count(q);
  const Eigen::Index n = x.size();
  Coeffs out(n * l);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::int64_t v = canonical_mod(x(i), q);
    for (int j = 0; j < l; ++j) out(j * n + i) = (v >> j) & 1;
  }
  return out;
}

Coeffs powers_of_two(const Coeffs& y, std::int64_t q) {
  const int l = bit_count(q);
  const Eigen::Index n = y.size();
  Coeffs out(n * l);
  for (Eigen::Index i = 0; i < n; ++i) {
    i128 v = canonical_mod(y(i), q);
    for (int j = 0; j < l; ++j) {
      out(j * n + i) = static_cast<std::int64_t>(v);
      v = canonical_mod(2 * v, q);
    }
  }
  return out;
}

Coeffs bit_recompose(const Coeffs& bits, std::int64_t q) {
  const int l = bit_count(q);
  if (bits.size() % l != 0) throw DimMismatch("bit vector length is not a multiple of ceil(log2 q)");
  const Eigen::Index n = bits.size() / l;
  Coeffs out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    i128 acc = 0;
    for (int j = l - 1; j >= 0; --j) acc = 2 * acc + bits(j * n + i);
    out(i) = canonical_mod(acc, q);
  }
  return out;
}

Coeffs scale(const Coeffs& x, std::int64_t q, std::int64_t p, std::int64_t r) {
  if (r < 2 || p < 2 || q <= p) throw BadModuli("scale needs q > p >= 2 and r >= 2");
  if (canonical_mod(q, r) != 1 || canonical_mod(p, r) != 1) {
    throw BadModuli("q = " + std::to_string(q) + " and p = " + std::to_string(p) +
                    " must both be 1 mod " + std::to_string(r));
  }
  Coeffs out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    // Candidates are x + r j; the best j is nearest to x (p - q) / (q r).
    // Taking ceil(a/b - 1/2) sends exact midpoints to the smaller candidate.
    const i128 num = static_cast<i128>(x(i)) * (p - q);
    const i128 den = static_cast<i128>(q) * r;
    const i128 j = -floor_div(-(2 * num - den), 2 * den);
    out(i) = static_cast<std::int64_t>(x(i) + r * j);
  }
  return out;
}

namespace {

void check_secret(const Coeffs& s, const char* name) {
  if (s.size() < 1 || s(0) != 1) throw InvalidParameter(std::string(name) + " must start with 1");
}

}  // namespace

namespace detail {

SwitchKey switch_keygen_with(const Coeffs& s1, const Coeffs& s2, const Modulus& q,
                             const CoeffMatrix& a, const Coeffs& e) {
  check_secret(s1, "s1");
  check_secret(s2, "s2");
  const Eigen::Index rows = s1.size() * bit_count(q.value());
  const Eigen::Index n2 = s2.size() - 1;
  if (a.rows() != rows || a.cols() != n2 || e.size() != rows) {
    throw DimMismatch("switch key inputs must be N1 x n2 and length N1");
  }
  Coeffs b = mat_vec_mod(a, s2.tail(n2), q);
  const Coeffs expanded = powers_of_two(s1, q.value());
  for (Eigen::Index i = 0; i < rows; ++i) b(i) = q.reduce(static_cast<i128>(b(i)) + e(i) + expanded(i));

  CoeffMatrix p(rows, n2 + 1);
  p.col(0) = b;
  p.rightCols(n2) = reduce_mod((-a).eval(), q);
  return {q, static_cast<std::size_t>(s1.size() - 1), std::move(p)};
}

}  // namespace detail

SwitchKey switch_keygen(const Coeffs& s1, const Coeffs& s2, const Modulus& q,
                        const GaussianParams& g, Rng& rng) {
  check_secret(s1, "s1");
  check_secret(s2, "s2");
  const auto rows = static_cast<std::size_t>(s1.size() * bit_count(q.value()));
  const Eigen::Index n2 = s2.size() - 1;
  CoeffMatrix a(static_cast<Eigen::Index>(rows), n2);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < n2; ++j) a(i, j) = sample_uniform_zq(q, rng).value();
  }
  return detail::switch_keygen_with(s1, s2, q, a, sample_gauss_vector(g, rows, rng));
}

Coeffs switch_key(const SwitchKey& key, const Coeffs& c1) {
  if (c1.size() != static_cast<Eigen::Index>(key.source_dim + 1)) {
    throw DimMismatch("ciphertext length " + std::to_string(c1.size()) + " != n1 + 1 = " +
                      std::to_string(key.source_dim + 1));
  }
  return mat_t_vec_mod(key.p, bit_decomp(c1, key.q.value()), key.q);
}

}  // namespace lattika::switching
