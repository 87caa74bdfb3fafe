#pragma once

// Exact modular integer arithmetic in the symmetric representation
// [x]_q in [-q/2, q/2), plus rational multiply-then-round.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace lattika {

using i128 = __int128;
using u128 = unsigned __int128;

/// Coefficient storage shared by ring elements, LWE vectors and matrices.
using Coeffs = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using CoeffMatrix =
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Unreduced integers produced by exact products; never stored long term.
using WideCoeffs = std::vector<i128>;

// Reduction against an arbitrary integer modulus m >= 2. These back both the
// odd ciphertext moduli and plaintext moduli, which may be even.
std::int64_t symmetric_mod(i128 x, std::int64_t m) noexcept;
std::int64_t canonical_mod(i128 x, std::int64_t m) noexcept;

/// Floor division for a signed numerator and a positive denominator.
i128 floor_div(i128 num, i128 den) noexcept;

/// Nearest integer to num/den, exact halves rounded away from zero.
i128 round_div(i128 num, i128 den);

/// An odd modulus q >= 3.
class Modulus {
 public:
  explicit Modulus(std::int64_t q);

  std::int64_t value() const noexcept { return q_; }

  std::int64_t reduce(i128 x) const noexcept { return symmetric_mod(x, q_); }
  std::int64_t canonical(i128 x) const noexcept { return canonical_mod(x, q_); }

  std::int64_t add(std::int64_t a, std::int64_t b) const noexcept {
    return reduce(static_cast<i128>(a) + b);
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
    return reduce(static_cast<i128>(a) - b);
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
    return reduce(static_cast<i128>(a) * b);
  }

  /// Largest symmetric representative magnitude, floor(q/2).
  std::int64_t half() const noexcept { return q_ / 2; }

  /// ceil(log2 q).
  int bit_length() const noexcept;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t q_;
};

/// An element of Z_q held by its symmetric representative.
class ZqInt {
 public:
  ZqInt(std::int64_t value, const Modulus& q)
      : value_(q.reduce(value)), modulus_(q) {}

  std::int64_t value() const noexcept { return value_; }
  const Modulus& modulus() const noexcept { return modulus_; }
  std::int64_t canonical() const noexcept { return modulus_.canonical(value_); }

  ZqInt operator+(const ZqInt& o) const;
  ZqInt operator-(const ZqInt& o) const;
  ZqInt operator*(const ZqInt& o) const;
  ZqInt operator-() const { return ZqInt(-value_, modulus_); }

  friend bool operator==(const ZqInt&, const ZqInt&) = default;

 private:
  std::int64_t value_;
  Modulus modulus_;
};

ZqInt reduce_symmetric(i128 x, const Modulus& q);

/// Throws NotInvertible when gcd(a, q) != 1.
ZqInt mod_inverse(const ZqInt& a);

ZqInt mod_pow(const ZqInt& base, std::uint64_t exponent);

/// result[i] = round(num * x[i] / den), halves away from zero. den != 0.
WideCoeffs multiply_round(std::span<const i128> x, i128 num, i128 den);

// Unsigned modular helpers on canonical residues, used by the NTT and the
// primality/root searches where q need not be odd.
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept;

std::string to_string(i128 x);

/// Parses an optionally signed decimal integer; throws ParseError.
i128 parse_i128(std::string_view text);

}  // namespace lattika
