#include "lattika/ring.hpp"

#include <bit>
#include <cassert>

#include "lattika/cyclotomic.hpp"
#include "lattika/errors.hpp"

namespace lattika {

namespace {

std::size_t bit_reverse(std::size_t x, int bits) {
  std::size_t r = 0;
  for (int i = 0; i < bits; ++i) {
    r = (r << 1) | (x & 1);
    x >>= 1;
  }
  return r;
}

void require_same(const RingElement& a, const RingElement& b) {
  if (!(a.params() == b.params())) throw ParamMismatch("ring elements have different parameters");
}

}  // namespace

NttTables::NttTables(std::size_t n, std::uint64_t q) : n_(n), q_(q) {
  const Modulus modulus(static_cast<std::int64_t>(q));
  const auto roots = primitive_roots_mod(2 * n, modulus);
  if (roots.empty()) throw NttUnavailable("no primitive 2n-th root of unity modulo q");
  psi_ = static_cast<std::uint64_t>(roots.front().canonical());
  const std::uint64_t psi_inv = powmod_u64(psi_, 2 * n - 1, q);
  n_inv_ = powmod_u64(n % q, q - 2, q);

  const int bits = std::countr_zero(n);
  psi_rev_.resize(n);
  psi_inv_rev_.resize(n);
  std::uint64_t pw = 1, pw_inv = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = bit_reverse(i, bits);
    psi_rev_[r] = pw;
    psi_inv_rev_[r] = pw_inv;
    pw = mulmod_u64(pw, psi_, q);
    pw_inv = mulmod_u64(pw_inv, psi_inv, q);
  }
}

void NttTables::forward(std::span<std::uint64_t> a) const {
  assert(a.size() == n_);
  std::size_t t = n_;
  for (std::size_t m = 1; m < n_; m <<= 1) {
    t >>= 1;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j1 = 2 * i * t;
      const std::uint64_t s = psi_rev_[m + i];
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const std::uint64_t u = a[j];
        const std::uint64_t v = mulmod_u64(a[j + t], s, q_);
        a[j] = u + v >= q_ ? u + v - q_ : u + v;
        a[j + t] = u >= v ? u - v : u + q_ - v;
      }
    }
  }
}

void NttTables::inverse(std::span<std::uint64_t> a) const {
  assert(a.size() == n_);
  std::size_t t = 1;
  for (std::size_t m = n_; m > 1; m >>= 1) {
    const std::size_t h = m >> 1;
    std::size_t j1 = 0;
    for (std::size_t i = 0; i < h; ++i) {
      const std::uint64_t s = psi_inv_rev_[h + i];
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const std::uint64_t u = a[j];
        const std::uint64_t v = a[j + t];
        a[j] = u + v >= q_ ? u + v - q_ : u + v;
        a[j + t] = mulmod_u64(u >= v ? u - v : u + q_ - v, s, q_);
      }
      j1 += 2 * t;
    }
    t <<= 1;
  }
  for (auto& x : a) x = mulmod_u64(x, n_inv_, q_);
}

RingParams::RingParams(std::size_t n, Modulus q) : n_(n), q_(q) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw InvalidParameter("n must be a power of two >= 2, got " + std::to_string(n));
  }
  const auto qq = static_cast<std::uint64_t>(q.value());
  if ((qq - 1) % (2 * n) == 0 && is_prime(qq)) ntt_ = std::make_shared<const NttTables>(n, qq);
}

const NttTables& RingParams::ntt() const {
  if (!ntt_) {
    throw NttUnavailable("NTT needs a prime q = 1 mod 2n; q = " + std::to_string(q_.value()) +
                         ", n = " + std::to_string(n_));
  }
  return *ntt_;
}

RingElement::RingElement(const RingParams& params)
    : params_(params), coeffs_(Coeffs::Zero(static_cast<Eigen::Index>(params.degree()))) {}

RingElement::RingElement(const RingParams& params, const Coeffs& coeffs) : params_(params) {
  if (static_cast<std::size_t>(coeffs.size()) != params.degree()) {
    throw DimMismatch("ring element needs " + std::to_string(params.degree()) +
                      " coefficients, got " + std::to_string(coeffs.size()));
  }
  const Modulus& q = params.modulus();
  coeffs_ = coeffs.unaryExpr([&](std::int64_t c) { return q.reduce(c); });
}

RingElement RingElement::from_wide(const RingParams& params, std::span<const i128> coeffs) {
  return RingElement(params, reduce_coeffs(coeffs, params.modulus().value()));
}

RingElement RingElement::monomial(const RingParams& params, std::size_t power, std::int64_t coeff) {
  Coeffs c = Coeffs::Zero(static_cast<Eigen::Index>(params.degree()));
  const std::size_t n = params.degree();
  // x^(n + k) = -x^k
  const bool negate = (power / n) % 2 == 1;
  c(static_cast<Eigen::Index>(power % n)) = negate ? -coeff : coeff;
  return RingElement(params, c);
}

RingElement RingElement::constant(const RingParams& params, std::int64_t value) {
  return monomial(params, 0, value);
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const Modulus& q = a.params().modulus();
  return RingElement(a.params(), a.coeffs().binaryExpr(b.coeffs(), [&](std::int64_t x, std::int64_t y) {
    return q.add(x, y);
  }));
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const Modulus& q = a.params().modulus();
  return RingElement(a.params(), a.coeffs().binaryExpr(b.coeffs(), [&](std::int64_t x, std::int64_t y) {
    return q.sub(x, y);
  }));
}

RingElement ring_negate(const RingElement& a) {
  const Modulus& q = a.params().modulus();
  return RingElement(a.params(), a.coeffs().unaryExpr([&](std::int64_t x) { return q.reduce(-static_cast<i128>(x)); }));
}

RingElement ring_mul_schoolbook(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const std::size_t n = a.size();
  const std::int64_t q = a.params().modulus().value();
  const auto as = a.span();
  const auto bs = b.span();
  // Pick the narrowest exact accumulator the actual operand sizes allow.
  // Compare |a| |b| against budget / n so the product itself cannot overflow.
  const i128 pair = static_cast<i128>(inf_norm(as)) * inf_norm(bs);
  const auto len = static_cast<i128>(n);
  if (pair < (static_cast<i128>(1) << 62) / len) {
    std::vector<std::int64_t> acc(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t bj = bs[j];
      if (bj == 0) continue;
      const std::size_t split = n - j;
      for (std::size_t i = 0; i < split; ++i) acc[i + j] += as[i] * bj;
      for (std::size_t i = split; i < n; ++i) acc[i + j - n] -= as[i] * bj;
    }
    Coeffs out(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) out(static_cast<Eigen::Index>(k)) = symmetric_mod(acc[k], q);
    return RingElement(a.params(), out);
  }
  if (pair < (static_cast<i128>(1) << 125) / len) {
    return RingElement::from_wide(a.params(), negacyclic_product(as, bs));
  }

  std::vector<i128> acc(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (bs[j] == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const i128 term = symmetric_mod(static_cast<i128>(as[i]) * bs[j], q);
      const std::size_t k = i + j;
      if (k < n) {
        acc[k] += term;
      } else {
        acc[k - n] -= term;
      }
    }
  }
  return RingElement::from_wide(a.params(), acc);
}

RingElement ring_mul_ntt(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const NttTables& ntt = a.params().ntt();
  const Modulus& q = a.params().modulus();
  const std::size_t n = a.size();
  std::vector<std::uint64_t> fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = static_cast<std::uint64_t>(q.canonical(a[i]));
    fb[i] = static_cast<std::uint64_t>(q.canonical(b[i]));
  }
  ntt.forward(fa);
  ntt.forward(fb);
  const auto qq = static_cast<std::uint64_t>(q.value());
  for (std::size_t i = 0; i < n; ++i) fa[i] = mulmod_u64(fa[i], fb[i], qq);
  ntt.inverse(fa);
  Coeffs c(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) c(static_cast<Eigen::Index>(i)) = static_cast<std::int64_t>(fa[i]);
  return RingElement(a.params(), c);
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  return a.params().ntt_enabled() ? ring_mul_ntt(a, b) : ring_mul_schoolbook(a, b);
}

RingElement scalar_mul(i128 k, const RingElement& a) {
  const Modulus& q = a.params().modulus();
  const i128 kr = q.reduce(k);
  return RingElement(a.params(), a.coeffs().unaryExpr([&](std::int64_t x) { return q.reduce(kr * x); }));
}

RingElement reinterpret(const RingElement& a, const RingParams& target) {
  if (a.params().degree() != target.degree()) throw ParamMismatch("reinterpret: degree mismatch");
  return RingElement(target, a.coeffs());
}

std::int64_t inf_norm(const RingElement& a) { return inf_norm(a.span()); }

std::int64_t inf_norm(std::span<const std::int64_t> a) {
  std::int64_t m = 0;
  for (auto x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

i128 inf_norm(std::span<const i128> a) {
  i128 m = 0;
  for (auto x : a) m = std::max(m, x < 0 ? -x : x);
  return m;
}

std::int64_t expansion_factor(const RingParams& params) {
  return static_cast<std::int64_t>(params.degree());
}

WideCoeffs negacyclic_product(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != b.size()) throw DimMismatch("negacyclic_product: length mismatch");
  const std::size_t n = a.size();
  WideCoeffs acc(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const i128 bj = b[j];
    if (bj == 0) continue;
    const std::size_t split = n - j;
    for (std::size_t i = 0; i < split; ++i) acc[i + j] += a[i] * bj;
    for (std::size_t i = split; i < n; ++i) acc[i + j - n] -= a[i] * bj;
  }
  return acc;
}

Coeffs reduce_coeffs(std::span<const i128> x, std::int64_t m) {
  Coeffs c(static_cast<Eigen::Index>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) c(static_cast<Eigen::Index>(i)) = symmetric_mod(x[i], m);
  return c;
}

WideCoeffs widen(std::span<const std::int64_t> a) { return WideCoeffs(a.begin(), a.end()); }

}  // namespace lattika
