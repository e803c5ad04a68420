#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ambig {

// SplitMix64 finaliser; used to derive child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable, splittable pseudo-random stream. A child stream depends only on
// the parent's seed and the key, never on how many values the parent has
// already produced, so work can be split across threads without changing
// results.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed), engine_(mix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Stream split(std::uint64_t key) const {
    return Stream(mix64(seed_ ^ mix64(key ^ 0xa0761d6478bd642fULL)));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }

  // Index drawn with probability proportional to weights[k].
  std::size_t weighted(const std::vector<double>& weights) {
    return std::discrete_distribution<std::size_t>(weights.begin(), weights.end())(engine_);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace ambig
