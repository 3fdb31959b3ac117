#include "expkit/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace expkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % bound;
}

long long Rng::between(long long lo, long long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::between: empty range");
  auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<long long>(engine_());
  return lo + static_cast<long long>(below(span));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  shuffle(p);
  return p;
}

}  // namespace expkit
