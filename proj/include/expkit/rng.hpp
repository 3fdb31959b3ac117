#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace expkit {

/**
 * Seeded pseudo-random source with platform-independent draws.
 *
 * Standard library distributions are implementation-defined, so bounded
 * integers and shuffles are derived from the raw 64-bit engine output here.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  long long between(long long lo, long long hi);

  /// Uniform double in [0, 1).
  double unit();

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    shuffle(std::span<T>(items));
  }

  /// Uniformly random permutation of 0..n-1.
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace expkit
