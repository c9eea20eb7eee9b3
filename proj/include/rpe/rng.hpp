#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

namespace rpe {

// Deterministic, platform-independent sampling. Each (seed, label) pair gets
// its own substream, so dataset content does not depend on the order in which
// sequences are visited. Variates are drawn by explicit inversion/summation
// rather than std::*_distribution, whose algorithms vary across standard
// libraries; the same seed therefore yields the same counts everywhere.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::string_view label) {
  return splitmix64(seed ^ splitmix64(fnv1a64(label)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t state) : engine_(splitmix64(state)) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t next() { return engine_(); }

  long long binomial(long long n, double p) {
    if (n < 0 || !(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("binomial requires n >= 0 and p in [0, 1]");
    }
    long long successes = 0;
    for (long long i = 0; i < n; ++i) {
      if (uniform() < p) ++successes;
    }
    return successes;
  }

  // Number of marked items in `draws` picks without replacement from an urn
  // of `marked` + `unmarked` items.
  long long hypergeometric(long long marked, long long unmarked, long long draws) {
    if (marked < 0 || unmarked < 0 || draws < 0 || draws > marked + unmarked) {
      throw std::invalid_argument("invalid hypergeometric parameters");
    }
    long long hits = 0;
    long long remaining_marked = marked;
    long long remaining_total = marked + unmarked;
    for (long long i = 0; i < draws; ++i) {
      if (uniform() * static_cast<double>(remaining_total) <
          static_cast<double>(remaining_marked)) {
        ++hits;
        --remaining_marked;
      }
      --remaining_total;
    }
    return hits;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rpe
