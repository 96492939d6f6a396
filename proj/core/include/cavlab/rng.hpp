#pragma once

#include <cstdint>
#include <vector>

namespace cavlab {

// Counter-based pseudo-random generator. Output i of a stream with seed s is
//
//     out(s, i) = mix64(s + (i + 1) * 0x9E3779B97F4A7C15)
//
// where mix64 is the SplitMix64 finalizer (Steele, Lea & Flood 2014). Each
// output depends only on (seed, counter), so sequences are reproducible
// across platforms and independent of how work is split between threads:
// a worker given the same seed and counter range produces the same values.
//
// Derived values:
//   * doubles in [0,1) take the top 53 bits,
//   * floats in [0,1) take the top 24 bits,
//   * bounded indices use the multiply-shift reduction (bias < n / 2^64),
//   * normal() is Box-Muller on two fresh outputs; it is exactly
//     reproducible for a given libm, which is all the pipeline relies on.
//
// Library default RNGs (std::mt19937, rand) are not used anywhere in the
// pipeline path.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Child seed for an independent named stream. derive(s, a) != derive(s, b)
  // for a != b with overwhelming probability; used to split dataset seeds
  // into per-sample and per-purpose streams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + kGamma));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64() { return mix64(seed_ + (++counter_) * kGamma); }

  // [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1]  -- safe as a log() argument
  double next_double_open0() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  float next_float() { return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f; }

  double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

  // Uniform index in [0, n). Multiply-shift; deterministic everywhere
  // __uint128_t exists.
  std::uint64_t index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via Box-Muller. Consumes two outputs per call.
  double normal();

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::uint64_t i = v.size(); i > 1; --i) {
      std::uint64_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  std::uint64_t seed_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace cavlab
