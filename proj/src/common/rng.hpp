// SPDX-License-Identifier: Apache-2.0
//
// hrris-sim: hybrid relay-reflecting surface link simulator
// Copyright (C) 2026 hrris-sim developers

#ifndef HRRIS_COMMON_RNG_HPP
#define HRRIS_COMMON_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace hrris {

/// Seeded random stream that can be split into independent named children.
///
/// A child's seed depends only on the parent seed and the split key, never
/// on how many numbers the parent has produced, so trials and sub-streams
/// can be generated in any order with identical results.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const noexcept { return seed_; }

  RngStream split(std::uint64_t key) const {
    return RngStream(mix(seed_ ^ mix(key + 0x632be59bd9b4e019ULL)));
  }

  RngStream split(std::string_view name) const { return split(hash(name)); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::uint64_t uniform_index(std::uint64_t count) {
    return std::uniform_int_distribution<std::uint64_t>(0, count - 1)(engine_);
  }

  /// Circularly-symmetric complex Gaussian with unit variance.
  std::complex<double> complex_normal() {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const double re = normal(engine_);
    const double im = normal(engine_);
    return {re, im};
  }

  static std::uint64_t mix(std::uint64_t x) noexcept {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t hash(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hrris

#endif  // HRRIS_COMMON_RNG_HPP
