#pragma once
/// @file rng.hpp
/// @brief Deterministic random sampling.
///
/// All randomized checks draw through this wrapper so a seed fully determines
/// every sample (and therefore every report byte).  Sub-streams are derived
/// from a label so independent check groups can be reordered or run alone
/// without shifting each other's draws.

#include <cstdint>
#include <random>
#include <string_view>

#include "linalg.hpp"

namespace rbv {

/// FNV-1a 64-bit hash of a label (used only for sub-stream derivation).
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// splitmix64 finalizer; decorrelates seed ^ label-hash mixtures.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  /// Independent generator for a named check group.
  Rng for_label(std::string_view label) const {
    return Rng(splitmix64(seed_ ^ fnv1a(label)));
  }

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1) with exactly 53 random bits
  /// (identical output on every conforming platform).
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Uniform integer in [0, n).  Modulo bias is ~n/2^64 and irrelevant for
  /// the tiny ranges used here; determinism is what matters.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  /// Vector with i.i.d. entries uniform in [lo, hi).
  Vec vec(int n, double lo, double hi) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  /// Matrix with i.i.d. entries uniform in [lo, hi), filled row-major.
  Mat mat(int rows, int cols, double lo, double hi) {
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
    return m;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace rbv
