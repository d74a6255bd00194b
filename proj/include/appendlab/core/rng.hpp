#pragma once

#include <cstdint>
#include <initializer_list>

namespace appendlab {

// Deterministic PRNG used for every random decision in the project.
//
// SplitMix64 keeps results identical across platforms and compilers, which the
// standard <random> distributions do not guarantee. All streams are derived
// from one master seed with derive_seed(master, path...): each path element is
// folded into the state with one SplitMix64 scramble, so
//   derive_seed(s, {1, 2}) != derive_seed(s, {2, 1})
// and independent components can claim disjoint streams by convention
// (documented where they are used).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Modulo bias is negligible for the n used here.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  std::uint8_t byte() { return static_cast<std::uint8_t>(next_u64() & 0xFF); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_u64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xFF51AFD7ED558CCDULL;
  x ^= x >> 33;
  x *= 0xC4CEB9FE1A85EC53ULL;
  x ^= x >> 33;
  return x;
}

// Seed-splitting function: child = fold(master, path). See class comment.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix_u64(master ^ 0xA0761D6478BD642FULL);
  for (std::uint64_t p : path) {
    s = mix_u64(s + 0x9E3779B97F4A7C15ULL * (p + 1));
  }
  return s;
}

}  // namespace appendlab
