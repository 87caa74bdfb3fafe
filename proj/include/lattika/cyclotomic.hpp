#pragma once

// Integer cyclotomic polynomials and their splitting over prime fields.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lattika/arith.hpp"

namespace lattika {

/// Polynomial in Z[x], ascending degree, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);
  IntPolynomial(std::initializer_list<std::int64_t> coefficients)
      : IntPolynomial(std::vector<std::int64_t>(coefficients)) {}

  /// x^k - 1
  static IntPolynomial x_pow_minus_one(std::size_t k);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::int64_t operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }

  /// Coefficients reduced into symmetric Z_m representatives.
  IntPolynomial reduced_mod(std::int64_t m) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Exact quotient of a by a monic divisor; throws InvalidParameter if the
/// division leaves a remainder.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& monic_divisor);

/// Product of polynomials over Z_m, symmetric representatives.
IntPolynomial multiply_mod(const IntPolynomial& a, const IntPolynomial& b, std::int64_t m);

std::uint64_t euler_phi(std::uint64_t n);

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Distinct prime factors of n in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/// Phi_n, memoised; safe for concurrent callers.
IntPolynomial cyclotomic_poly(std::uint64_t n);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// All elements of Z_q of multiplicative order exactly n, sorted by their
/// canonical representative. Empty when n does not divide q - 1.
/// Throws NotPrime if q is composite.
std::vector<ZqInt> primitive_roots_mod(std::uint64_t n, const Modulus& q);

/// Monic irreducible factors of Phi_n over F_q, each with symmetric
/// coefficients. Supports the fully split case (q = 1 mod n) and the
/// irreducible case (order of q mod n equals phi(n)); anything in between
/// throws Unsupported.
std::vector<IntPolynomial> factor_cyclotomic_mod(std::uint64_t n, const Modulus& q);

}  // namespace lattika
