#include "lattika/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lattika/errors.hpp"

namespace lattika {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t k) {
  std::vector<std::int64_t> c(k + 1, 0);
  c[0] = -1;
  c[k] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::reduced_mod(std::int64_t m) const {
  std::vector<std::int64_t> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = symmetric_mod(coeffs_[i], m);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  return out.str();
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& monic_divisor) {
  if (monic_divisor.leading() != 1) throw InvalidParameter("exact_divide: divisor not monic");
  std::vector<std::int64_t> rem = a.coefficients();
  const int dd = monic_divisor.degree();
  if (a.degree() < dd) {
    if (a.is_zero()) return {};
    throw InvalidParameter("exact_divide: non-zero remainder");
  }
  std::vector<std::int64_t> quot(static_cast<std::size_t>(a.degree() - dd + 1), 0);
  for (int k = a.degree() - dd; k >= 0; --k) {
    const std::int64_t c = rem[static_cast<std::size_t>(k + dd)];
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * monic_divisor[static_cast<std::size_t>(j)];
  }
  for (auto r : rem) {
    if (r != 0) throw InvalidParameter("exact_divide: non-zero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial multiply_mod(const IntPolynomial& a, const IntPolynomial& b, std::int64_t m) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<std::int64_t> c(ac.size() + bc.size() - 1, 0);
  for (std::size_t i = 0; i < ac.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j)
      c[i + j] = symmetric_mod(static_cast<i128>(c[i + j]) + static_cast<i128>(ac[i]) * bc[j], m);
  return IntPolynomial(std::move(c));
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("euler_phi: n must be positive");
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    factors.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (auto a : kWitnesses) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

IntPolynomial cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("cyclotomic_poly: n must be positive");
  static std::mutex mutex;
  static std::map<std::uint64_t, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d, so Phi_n is the exact quotient by the
  // proper-divisor factors.
  IntPolynomial quotient = IntPolynomial::x_pow_minus_one(n);
  for (auto d : divisors(n)) {
    if (d == n) break;
    quotient = exact_divide(quotient, cyclotomic_poly(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(quotient)).first->second;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw InvalidParameter("multiplicative_order: gcd(a, n) != 1");
  const std::uint64_t phi = euler_phi(n);
  for (auto d : divisors(phi)) {
    if (powmod_u64(a % n, d, n) == 1) return d;
  }
  return phi;
}

std::vector<ZqInt> primitive_roots_mod(std::uint64_t n, const Modulus& q) {
  if (n == 0) throw InvalidParameter("primitive_roots_mod: n must be positive");
  const auto qq = static_cast<std::uint64_t>(q.value());
  if (!is_prime(qq)) throw NotPrime(std::to_string(qq) + " is not prime");
  if ((qq - 1) % n != 0) return {};

  const auto n_primes = prime_factors(n);
  const auto has_order_n = [&](std::uint64_t w) {
    if (powmod_u64(w, n, qq) != 1) return false;
    for (auto r : n_primes) {
      if (powmod_u64(w, n / r, qq) == 1) return false;
    }
    return true;
  };
  // w = x^((q-1)/n) has order dividing n; scan x until the order is exact.
  std::uint64_t root = 0;
  for (std::uint64_t x = 1; x < qq; ++x) {
    const std::uint64_t w = powmod_u64(x, (qq - 1) / n, qq);
    if (has_order_n(w)) {
      root = w;
      break;
    }
  }
  std::vector<std::uint64_t> canon;
  canon.reserve(static_cast<std::size_t>(euler_phi(n)));
  std::uint64_t power = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    power = mulmod_u64(power, root, qq);
    if (std::gcd(k, n) == 1) canon.push_back(power);
  }
  std::sort(canon.begin(), canon.end());
  std::vector<ZqInt> roots;
  roots.reserve(canon.size());
  for (auto c : canon) roots.emplace_back(static_cast<std::int64_t>(c), q);
  return roots;
}

std::vector<IntPolynomial> factor_cyclotomic_mod(std::uint64_t n, const Modulus& q) {
  const auto qq = static_cast<std::uint64_t>(q.value());
  if (!is_prime(qq)) throw NotPrime(std::to_string(qq) + " is not prime");
  if (std::gcd(qq, n) != 1) throw InvalidParameter("factor_cyclotomic_mod: gcd(q, n) != 1");

  const std::uint64_t order = multiplicative_order(qq % n, n);
  if (order == 1) {
    std::vector<IntPolynomial> factors;
    for (const auto& root : primitive_roots_mod(n, q)) factors.push_back(IntPolynomial{-root.value(), 1}.reduced_mod(q.value()));
    return factors;
  }
  if (order == euler_phi(n)) return {cyclotomic_poly(n).reduced_mod(q.value())};
  throw Unsupported("factor_cyclotomic_mod: factors of degree " + std::to_string(order) +
                    " need distinct-degree factorisation");
}

}  // namespace lattika
