#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace permclt {

/// SplitMix64 finalizer. Used to expand seeds and to derive child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child seed for stream `index` of a parent seed: one SplitMix64 round on
/// the salted parent, xor with index * 0xd1b54a32d192ed03, one more round.
/// Identical (seed, index) pairs give identical children on every platform.
constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::uint64_t index) noexcept {
  std::uint64_t s = seed ^ 0x6a09e667f3bcc909ULL;
  const std::uint64_t a = splitmix64(s);
  s = a ^ (index * 0xd1b54a32d192ed03ULL);
  return splitmix64(s);
}

/// xoshiro256** (Blackman & Vigna) seeded through SplitMix64.
///
/// The output stream depends only on the 64-bit seed. Bounded integers use
/// Lemire's multiply-shift rejection method and doubles take the top 53 bits,
/// so no standard-library distribution (whose output is implementation
/// defined) is involved anywhere.
///
/// Instances are single-owner streams. Parallel work derives independent
/// children with `derive_seed(seed, worker_or_block_index)`.
class SeededRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view algorithm = "xoshiro256**+splitmix64";

  explicit SeededRng(std::uint64_t seed) noexcept : seed_(seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  std::uint64_t seed() const noexcept { return seed_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept { return next(); }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  __extension__ using u128 = unsigned __int128;

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    u128 m = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<u128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Independent stream for sub-task `index`.
  SeededRng child(std::uint64_t index) const noexcept {
    return SeededRng(derive_seed(seed_, index));
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

}  // namespace permclt
