#pragma once

#include <cstdint>
#include <limits>

namespace bklab {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Purpose tags that separate the random streams of different consumers
/// sharing one user seed.
enum class Stream : std::uint64_t {
  numeration = 0x6e756d,
  coloring = 0x636f6c,
  generator = 0x67656e,
  mc_order_stat = 0x6d6331,
  mc_dense = 0x6d6332,
  mc_badpair = 0x6d6333,
  mc_colorer = 0x6d6334,
};

/// Key for the stream (seed, purpose, index). Index is typically a trial number.
constexpr std::uint64_t stream_key(std::uint64_t seed, Stream purpose, std::uint64_t index = 0) {
  return mix64(mix64(seed ^ 0x9e3779b97f4a7c15ULL) ^ mix64(static_cast<std::uint64_t>(purpose)) ^
               mix64(index + 0xd1b54a32d192ed03ULL));
}

/// Counter-based generator: the i-th output is a pure function of (key, i), so
/// any trial can be replayed without touching the others.
///
/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform double in the open interval (0, 1).
  constexpr double uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  result_type below(result_type bound) {
    using u128 = unsigned __int128;
    u128 product = static_cast<u128>((*this)()) * bound;
    auto low = static_cast<result_type>(product);
    if (low < bound) {
      const result_type threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<u128>((*this)()) * bound;
        low = static_cast<result_type>(product);
      }
    }
    return static_cast<result_type>(product >> 64);
  }

  /// Uniform coin flip.
  constexpr bool coin() { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bklab
