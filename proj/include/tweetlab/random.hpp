#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace tweetlab {

/// 64-bit linear congruential generator (Knuth MMIX constants, as tabulated
/// in Numerical Recipes). Fully specified, so its output is portable.
class Lcg64 {
public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Decimal digit from the high 32 bits of the next state.
  int next_digit() { return static_cast<int>((next() >> 32) % 10); }

private:
  std::uint64_t state_;
};

/// Fisher-Yates shuffle driven by mt19937_64. std::shuffle is not used
/// because its draw sequence differs between standard libraries.
template <class T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace tweetlab
