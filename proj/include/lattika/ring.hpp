#pragma once

// Arithmetic in R_q = Z_q[x]/(x^n + 1) for power-of-two n.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lattika/arith.hpp"

namespace lattika {

/// Precomputed twiddles for the negacyclic NTT of size n modulo a prime
/// q = 1 (mod 2n). psi is the smallest primitive 2n-th root of unity.
class NttTables {
 public:
  NttTables(std::size_t n, std::uint64_t q);

  std::uint64_t psi() const noexcept { return psi_; }

  /// In-place forward transform; input canonical residues, output in
  /// bit-reversed evaluation order.
  void forward(std::span<std::uint64_t> a) const;
  /// Inverse of forward, including the 1/n scaling.
  void inverse(std::span<std::uint64_t> a) const;

 private:
  std::size_t n_;
  std::uint64_t q_;
  std::uint64_t psi_;
  std::uint64_t n_inv_;
  std::vector<std::uint64_t> psi_rev_;
  std::vector<std::uint64_t> psi_inv_rev_;
};

class RingParams {
 public:
  /// n must be a power of two >= 2. The NTT path is enabled iff q is prime
  /// and q = 1 (mod 2n).
  RingParams(std::size_t n, Modulus q);

  std::size_t degree() const noexcept { return n_; }
  const Modulus& modulus() const noexcept { return q_; }
  bool ntt_enabled() const noexcept { return ntt_ != nullptr; }
  /// Throws NttUnavailable when the NTT path is disabled.
  const NttTables& ntt() const;

  friend bool operator==(const RingParams& a, const RingParams& b) noexcept {
    return a.n_ == b.n_ && a.q_ == b.q_;
  }

 private:
  std::size_t n_;
  Modulus q_;
  std::shared_ptr<const NttTables> ntt_;
};

/// Element of R_q; coefficient of x^i at index i, symmetric representatives.
class RingElement {
 public:
  /// The zero element.
  explicit RingElement(const RingParams& params);
  /// Reduces every coefficient; throws DimMismatch unless size == n.
  RingElement(const RingParams& params, const Coeffs& coeffs);

  static RingElement from_wide(const RingParams& params, std::span<const i128> coeffs);
  static RingElement monomial(const RingParams& params, std::size_t power, std::int64_t coeff = 1);
  static RingElement constant(const RingParams& params, std::int64_t value);

  const RingParams& params() const noexcept { return params_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::span<const std::int64_t> span() const noexcept {
    return {coeffs_.data(), static_cast<std::size_t>(coeffs_.size())};
  }
  std::size_t size() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }
  std::int64_t operator[](std::size_t i) const noexcept { return coeffs_(static_cast<Eigen::Index>(i)); }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingParams params_;
  Coeffs coeffs_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_negate(const RingElement& a);
RingElement ring_mul_schoolbook(const RingElement& a, const RingElement& b);
/// Throws NttUnavailable unless params().ntt_enabled().
RingElement ring_mul_ntt(const RingElement& a, const RingElement& b);
/// NTT when the parameters allow it, schoolbook otherwise.
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement scalar_mul(i128 k, const RingElement& a);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return ring_add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return ring_sub(a, b); }
inline RingElement operator-(const RingElement& a) { return ring_negate(a); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }
inline RingElement operator*(i128 k, const RingElement& a) { return scalar_mul(k, a); }

/// Same symmetric representatives, read under different parameters of
/// equal degree (e.g. lifting an R_q element into R_{pq}).
RingElement reinterpret(const RingElement& a, const RingParams& target);

std::int64_t inf_norm(const RingElement& a);
i128 inf_norm(std::span<const i128> a);
std::int64_t inf_norm(std::span<const std::int64_t> a);

/// Worst-case infinity-norm growth of a product in Z[x]/(x^n + 1): n.
std::int64_t expansion_factor(const RingParams& params);

/// Exact product in Z[x]/(x^n + 1), no modular reduction. Both inputs must
/// have the same length n. The caller guarantees n * max|a| * max|b| < 2^126.
WideCoeffs negacyclic_product(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Coefficient-wise reduction of wide integers into symmetric Z_m.
Coeffs reduce_coeffs(std::span<const i128> x, std::int64_t m);

WideCoeffs widen(std::span<const std::int64_t> a);

}  // namespace lattika
