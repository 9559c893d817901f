#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace pufsketch {

/// splitmix64 finalizer, used for seed derivation and cheap hashing.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic random source. All draws go through the raw 64-bit output
/// of std::mt19937_64 so sequences are identical across platforms and
/// standard libraries (std distributions are implementation-defined and
/// therefore avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

  /// Independent substream keyed by up to two stream indices. The same
  /// (seed, a, b) always yields the same sequence, which keeps parallel and
  /// sequential trial execution bit-identical.
  static Rng substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return Rng(mix64(mix64(mix64(seed) ^ a) ^ b));
  }

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n), unbiased via rejection.
  std::size_t below(std::size_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return static_cast<std::size_t>(v % span);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pufsketch
