#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dtlab {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded random source shared by sessions, generators and harnesses.
///
/// Every draw is derived from raw 64-bit engine output so results do not
/// depend on the standard library's distribution implementations. A 64-bit
/// seed is split into named streams with `split`; the child depends only on
/// (seed, stream), never on how much the parent has been used.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(splitmix64(seed)) {}

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next() { return engine_(); }

  bool bit() {
    if (bits_left_ == 0) {
      bit_pool_ = engine_();
      bits_left_ = 64;
    }
    bool b = (bit_pool_ & 1U) != 0;
    bit_pool_ >>= 1;
    --bits_left_;
    return b;
  }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire-style rejection keeps the result exactly uniform.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  [[nodiscard]] Rng split(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t bit_pool_ = 0;
  int bits_left_ = 0;
};

}  // namespace dtlab
