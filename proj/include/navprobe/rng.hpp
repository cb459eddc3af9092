#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace navprobe {

// Deterministic RNG shared by every seeded operation. Bounded draws are
// done by hand instead of std::uniform_int_distribution, whose output is
// implementation-defined and would break byte-identical reruns across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) {
      throw std::invalid_argument("Rng::next_below: n must be positive");
    }
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v = gen_();
    while (v >= limit) {
      v = gen_();
    }
    return v % n;
  }

  // Uniform double in [0, 1), 53 bits of entropy.
  double next_unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    if (items.empty()) {
      throw std::invalid_argument("Rng::pick: empty list");
    }
    return items[static_cast<std::size_t>(next_below(items.size()))];
  }

  // Fisher-Yates, in place.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(next_below(i))]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Stable seed for a derived stream (per scan, per record, per worker).
// splitmix64 finalizer so neighboring streams are uncorrelated.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace navprobe
