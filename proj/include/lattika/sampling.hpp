#pragma once

// Seedable randomness for every scheme: a ChaCha20 keystream keyed by a
// 32-byte seed, a table-driven discrete Gaussian over Z, and uniform and
// binary samplers for vectors and ring elements.

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "lattika/arith.hpp"
#include "lattika/ring.hpp"

namespace lattika {

class Seed {
 public:
  using Bytes = std::array<std::uint8_t, 32>;

  Seed() : bytes_{} {}
  explicit Seed(const Bytes& bytes) : bytes_(bytes) {}

  /// Exactly 64 hex digits; throws ParseError otherwise.
  static Seed from_hex(std::string_view hex);
  /// Fresh seed from the operating system.
  static Seed random();

  std::string to_hex() const;
  const Bytes& bytes() const noexcept { return bytes_; }

  /// Independent sub-seed for parallel or per-purpose streams.
  Seed derive(std::uint64_t index) const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  Bytes bytes_;
};

/// Deterministic generator: identical seeds give identical streams.
/// Single owner; not safe to share mid-stream.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(const Seed& seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64();
  /// Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  int bit() { return static_cast<int>(next_u64() & 1U); }

 private:
  void refill();

  Seed::Bytes key_;
  std::uint64_t block_counter_ = 0;
  std::array<std::uint8_t, 512> buffer_{};
  std::size_t pos_ = sizeof(buffer_);
};

/// Integer Gaussian parameterised by its standard deviation sigma. The
/// Gaussian-measure scale used in the lattice literature is
/// s = sqrt(2 pi) * sigma.
class GaussianParams {
 public:
  explicit GaussianParams(double sigma, double tail_cut = 10.0);

  double sigma() const noexcept { return sigma_; }
  double tail_cut() const noexcept { return tail_cut_; }
  double scale() const noexcept;
  /// Support bound B = ceil(tail_cut * sigma); samples satisfy |z| <= B.
  std::int64_t tail_bound() const noexcept;

  friend bool operator==(const GaussianParams&, const GaussianParams&) = default;

 private:
  double sigma_;
  double tail_cut_;
};

/// Inverse-CDF sampler over the truncated support [-B, B]. Consumes exactly
/// one 64-bit word per draw.
class DiscreteGaussianSampler {
 public:
  explicit DiscreteGaussianSampler(const GaussianParams& params);

  std::int64_t operator()(Rng& rng) const;
  const GaussianParams& params() const noexcept { return params_; }

  /// Exact probability mass assigned to z by the table.
  double probability(std::int64_t z) const;

 private:
  GaussianParams params_;
  std::int64_t bound_;
  std::vector<std::uint64_t> cdf_;
};

std::int64_t sample_dgauss_int(const GaussianParams& params, Rng& rng);
ZqInt sample_uniform_zq(const Modulus& q, Rng& rng);

Coeffs sample_uniform_vector(const Modulus& q, std::size_t len, Rng& rng);
Coeffs sample_binary_vector(std::size_t len, Rng& rng);
Coeffs sample_gauss_vector(const GaussianParams& g, std::size_t len, Rng& rng);

RingElement sample_uniform_ring(const RingParams& params, Rng& rng);
RingElement sample_binary_ring(const RingParams& params, Rng& rng);
RingElement sample_gauss_ring(const RingParams& params, const GaussianParams& g, Rng& rng);

}  // namespace lattika
