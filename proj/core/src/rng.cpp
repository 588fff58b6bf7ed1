#include "subcube/rng.hpp"

#include <stdexcept>

namespace subcube {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGoldenGamma;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      engine_(splitmix64(splitmix64(seed) ^ (kGoldenGamma * (stream + 1)))) {}

Rng Rng::split(std::uint64_t stream) const {
  // Children of distinct streams stay distinct: fold our own stream id
  // into the derived seed.
  return Rng(splitmix64(seed_ ^ (kGoldenGamma * (stream_ + 1))), stream);
}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return next_double() < p;
}

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  // Rejection sampling on the top multiple of n; unbiased and portable.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return static_cast<std::size_t>(v % n);
}

int Rng::uniform_sign() {
  if (bits_left_ == 0) {
    bit_pool_ = next_u64();
    bits_left_ = 64;
  }
  const int bit = static_cast<int>(bit_pool_ & 1);
  bit_pool_ >>= 1;
  --bits_left_;
  return bit ? 1 : -1;
}

}  // namespace subcube
