#ifndef BATCHSCHED_RNG_HPP
#define BATCHSCHED_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace batchsched {

// Counter-style splitmix64 generator. Tiny state, full 64-bit output, and a
// fixed algorithm, so seeded streams are identical on every platform. All
// randomized code in this library draws from this engine through the helpers
// below; std::uniform_*_distribution is never used because its output is
// implementation-defined.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// splitmix64 finalizer as a pure mixing function.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives a child seed from a base seed and a key sequence (used for
// per-instance and per-bench-cell seeds; independent of evaluation order).
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(base ^ 0x2545f4914f6cdd1dULL);
  for (std::uint64_t k : keys) h = mix64(h ^ mix64(k + 0x9e3779b97f4a7c15ULL));
  return h;
}

// FNV-1a, used for content digests in manifests and bench cell keys.
inline std::uint64_t fnv1a(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Unbiased draw in [0, bound) via masked rejection. bound = 0 is invalid.
template <class Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0};
  std::uint64_t n = bound - 1;
  // smallest all-ones mask covering bound-1
  mask >>= 63 - (63 ^ __builtin_clzll(n | 1));
  for (;;) {
    std::uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

// Inclusive integer range draw.
template <class Rng>
long long uniform_int(Rng& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

// Uniform double in [0, 1) with 53 random bits.
template <class Rng>
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle with a fixed draw pattern (std::shuffle is
// implementation-defined and would break cross-platform reproducibility).
template <class T, class Rng>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace batchsched

#endif
