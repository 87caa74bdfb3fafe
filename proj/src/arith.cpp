#include "lattika/arith.hpp"

#include <algorithm>
#include <cassert>

#include "lattika/errors.hpp"

namespace lattika {

std::int64_t symmetric_mod(i128 x, std::int64_t m) noexcept {
  i128 r = x % m;
  if (r < 0) r += m;
  if (2 * r >= m) r -= m;
  return static_cast<std::int64_t>(r);
}

std::int64_t canonical_mod(i128 x, std::int64_t m) noexcept {
  i128 r = x % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

i128 floor_div(i128 num, i128 den) noexcept {
  i128 q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

i128 round_div(i128 num, i128 den) {
  if (den == 0) throw InvalidParameter("round_div: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const bool negative = num < 0;
  const u128 mag = negative ? static_cast<u128>(-(num + 1)) + 1 : static_cast<u128>(num);
  const u128 d = static_cast<u128>(den);
  const u128 rounded = (2 * mag + d) / (2 * d);
  return negative ? -static_cast<i128>(rounded) : static_cast<i128>(rounded);
}

Modulus::Modulus(std::int64_t q) : q_(q) {
  if (q < 3) throw InvalidParameter("modulus must be at least 3, got " + std::to_string(q));
  if (q % 2 == 0) throw InvalidParameter("modulus must be odd, got " + std::to_string(q));
}

int Modulus::bit_length() const noexcept {
  int bits = 0;
  while ((static_cast<i128>(1) << bits) < q_) ++bits;
  return bits;
}

ZqInt ZqInt::operator+(const ZqInt& o) const {
  if (!(modulus_ == o.modulus_)) throw ParamMismatch("ZqInt: modulus mismatch");
  return ZqInt(modulus_.add(value_, o.value_), modulus_);
}

ZqInt ZqInt::operator-(const ZqInt& o) const {
  if (!(modulus_ == o.modulus_)) throw ParamMismatch("ZqInt: modulus mismatch");
  return ZqInt(modulus_.sub(value_, o.value_), modulus_);
}

ZqInt ZqInt::operator*(const ZqInt& o) const {
  if (!(modulus_ == o.modulus_)) throw ParamMismatch("ZqInt: modulus mismatch");
  return ZqInt(modulus_.mul(value_, o.value_), modulus_);
}

ZqInt reduce_symmetric(i128 x, const Modulus& q) { return ZqInt(q.reduce(x), q); }

ZqInt mod_inverse(const ZqInt& a) {
  const std::int64_t q = a.modulus().value();
  i128 old_r = a.canonical(), r = q;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 quot = old_r / r;
    old_r -= quot * r;
    std::swap(old_r, r);
    old_s -= quot * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a.value()) + " has no inverse modulo " +
                        std::to_string(q));
  }
  return reduce_symmetric(old_s, a.modulus());
}

ZqInt mod_pow(const ZqInt& base, std::uint64_t exponent) {
  const auto q = static_cast<std::uint64_t>(base.modulus().value());
  const auto r = powmod_u64(static_cast<std::uint64_t>(base.canonical()), exponent, q);
  return reduce_symmetric(static_cast<i128>(r), base.modulus());
}

WideCoeffs multiply_round(std::span<const i128> x, i128 num, i128 den) {
  if (den == 0) throw InvalidParameter("multiply_round: zero denominator");
  WideCoeffs out(x.size());
  std::transform(x.begin(), x.end(), out.begin(),
                 [&](i128 v) { return round_div(num * v, den); });
  return out;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1;
  }
  return result;
}

std::string to_string(i128 x) {
  if (x == 0) return "0";
  const bool negative = x < 0;
  u128 mag = negative ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

i128 parse_i128(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
  constexpr u128 kLimit = static_cast<u128>(1) << 126;
  u128 mag = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw ParseError("malformed integer '" + std::string(text) + "'");
    mag = mag * 10 + static_cast<u128>(c - '0');
    if (mag > kLimit) throw ParseError("integer out of range '" + std::string(text) + "'");
  }
  const auto value = static_cast<i128>(mag);
  return negative ? -value : value;
}

}  // namespace lattika
