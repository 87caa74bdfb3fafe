#include "lattika/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

#include <sodium.h>

#include "lattika/errors.hpp"

namespace lattika {

namespace {

void ensure_sodium() {
  static const bool ready = [] { return sodium_init() >= 0; }();
  if (!ready) throw Error("libsodium failed to initialise");
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Seed Seed::from_hex(std::string_view hex) {
  Bytes bytes{};
  if (hex.size() != 2 * bytes.size()) {
    throw ParseError("seed must be 64 hex digits, got " + std::to_string(hex.size()) + " characters");
  }
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const int hi = hex_value(hex[2 * i]);
    const int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw ParseError("seed contains a non-hex character");
    bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Seed(bytes);
}

Seed Seed::random() {
  ensure_sodium();
  Bytes bytes{};
  randombytes_buf(bytes.data(), bytes.size());
  return Seed(bytes);
}

std::string Seed::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

Seed Seed::derive(std::uint64_t index) const {
  ensure_sodium();
  std::array<std::uint8_t, 8> msg{};
  for (int i = 0; i < 8; ++i) msg[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index >> (8 * i));
  Bytes out{};
  crypto_generichash(out.data(), out.size(), msg.data(), msg.size(), bytes_.data(), bytes_.size());
  return Seed(out);
}

Rng::Rng(const Seed& seed) : key_(seed.bytes()) { ensure_sodium(); }

void Rng::refill() {
  static constexpr std::array<std::uint8_t, crypto_stream_chacha20_NONCEBYTES> kNonce{};
  std::memset(buffer_.data(), 0, buffer_.size());
  crypto_stream_chacha20_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), kNonce.data(),
                                block_counter_, key_.data());
  block_counter_ += buffer_.size() / 64;
  pos_ = 0;
}

std::uint64_t Rng::next_u64() {
  if (pos_ + 8 > buffer_.size()) refill();
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buffer_[pos_ + static_cast<std::size_t>(i)]) << (8 * i);
  pos_ += 8;
  return v;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidParameter("uniform_below: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = max() - (max() % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v > limit);
  return v % bound;
}

GaussianParams::GaussianParams(double sigma, double tail_cut) : sigma_(sigma), tail_cut_(tail_cut) {
  if (!(sigma > 0) || !std::isfinite(sigma)) throw InvalidParameter("sigma must be positive");
  if (!(tail_cut >= 6) || !std::isfinite(tail_cut)) throw InvalidParameter("tail_cut must be at least 6");
}

double GaussianParams::scale() const noexcept { return std::sqrt(2 * std::numbers::pi) * sigma_; }

std::int64_t GaussianParams::tail_bound() const noexcept {
  return static_cast<std::int64_t>(std::ceil(tail_cut_ * sigma_));
}

DiscreteGaussianSampler::DiscreteGaussianSampler(const GaussianParams& params)
    : params_(params), bound_(params.tail_bound()) {
  const std::size_t size = static_cast<std::size_t>(2 * bound_ + 1);
  std::vector<long double> weight(size);
  const long double two_var = 2.0L * params.sigma() * params.sigma();
  long double total = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const long double z = static_cast<long double>(static_cast<std::int64_t>(i) - bound_);
    weight[i] = std::exp(-z * z / two_var);
    total += weight[i];
  }
  cdf_.resize(size);
  long double running = 0;
  constexpr long double kScale = 18446744073709551616.0L;  // 2^64
  for (std::size_t i = 0; i < size; ++i) {
    running += weight[i];
    const long double v = running / total * kScale;
    cdf_[i] = v >= kScale ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(v);
  }
  cdf_.back() = std::numeric_limits<std::uint64_t>::max();
}

std::int64_t DiscreteGaussianSampler::operator()(Rng& rng) const {
  const std::uint64_t u = rng.next_u64();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const auto index = std::min<std::ptrdiff_t>(it - cdf_.begin(), static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
  return static_cast<std::int64_t>(index) - bound_;
}

double DiscreteGaussianSampler::probability(std::int64_t z) const {
  if (z < -bound_ || z > bound_) return 0.0;
  const auto i = static_cast<std::size_t>(z + bound_);
  const long double lo = i == 0 ? 0.0L : static_cast<long double>(cdf_[i - 1]);
  return static_cast<double>((static_cast<long double>(cdf_[i]) - lo) / 18446744073709551616.0L);
}

std::int64_t sample_dgauss_int(const GaussianParams& params, Rng& rng) {
  return DiscreteGaussianSampler(params)(rng);
}

ZqInt sample_uniform_zq(const Modulus& q, Rng& rng) {
  return ZqInt(static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(q.value()))), q);
}

Coeffs sample_uniform_vector(const Modulus& q, std::size_t len, Rng& rng) {
  Coeffs v(static_cast<Eigen::Index>(len));
  for (auto& x : v) x = sample_uniform_zq(q, rng).value();
  return v;
}

Coeffs sample_binary_vector(std::size_t len, Rng& rng) {
  Coeffs v(static_cast<Eigen::Index>(len));
  for (auto& x : v) x = rng.bit();
  return v;
}

Coeffs sample_gauss_vector(const GaussianParams& g, std::size_t len, Rng& rng) {
  const DiscreteGaussianSampler sampler(g);
  Coeffs v(static_cast<Eigen::Index>(len));
  for (auto& x : v) x = sampler(rng);
  return v;
}

RingElement sample_uniform_ring(const RingParams& params, Rng& rng) {
  return RingElement(params, sample_uniform_vector(params.modulus(), params.degree(), rng));
}

RingElement sample_binary_ring(const RingParams& params, Rng& rng) {
  return RingElement(params, sample_binary_vector(params.degree(), rng));
}

RingElement sample_gauss_ring(const RingParams& params, const GaussianParams& g, Rng& rng) {
  return RingElement(params, sample_gauss_vector(g, params.degree(), rng));
}

}  // namespace lattika
