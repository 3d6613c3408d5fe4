#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace jnrange {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the n-th output is mix64(key + n * golden), n = 1, 2, ...
/// A stream is fully described by (key, counter), so any position can be reproduced
/// without replaying earlier draws.
///
/// Substreams: substream(seed, index) keys a stream by
///   key = mix64(seed ^ mix64(index + 0x632be59bd9b4e019)).
/// Sampling routines cut their work into fixed-size blocks and give block b the
/// substream (seed, b), so results never depend on how blocks are spread over threads.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed) : key_(mix64(seed)) {}

  static constexpr CounterRng substream(std::uint64_t seed, std::uint64_t index) {
    CounterRng rng(0);
    rng.key_ = mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
    return rng;
  }

  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  constexpr result_type operator()() { return next_u64(); }

  constexpr std::uint64_t next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open_zero() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Uniform integer in [0, n) by 128-bit multiply-shift.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Two independent standard normals by Box-Muller.
  std::pair<double, double> normal_pair() {
    const double r = std::sqrt(-2.0 * std::log(uniform_open_zero()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace jnrange
