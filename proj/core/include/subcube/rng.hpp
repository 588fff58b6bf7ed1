#pragma once

#include <cstdint>
#include <random>

namespace subcube {

/// Seedable deterministic generator with named stream derivation.
///
/// Independent streams are derived as splitmix64(splitmix64(seed) ^
/// goldenGamma * (stream + 1)); the resulting 64-bit value seeds a
/// std::mt19937_64 engine. All bounded draws are implemented on top of
/// raw engine output, so re-runs with the same (seed, stream) produce
/// identical byte sequences.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Derive an independent generator for a named sub-stream.
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double();

  bool bernoulli(double p);

  /// Uniform index in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Uniform sign in {-1, +1}, served from a 64-bit pool.
  int uniform_sign();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::uint64_t bit_pool_ = 0;
  int bits_left_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace subcube
