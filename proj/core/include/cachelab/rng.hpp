#pragma once

#include <cstdint>

#include "cachelab/rational.hpp"

namespace cachelab {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based splittable generator. Output i of a stream with key K is
/// mix64(K + (i + 1) * 0x9e3779b97f4a7c15), i.e. SplitMix64 started at K.
/// split(n) derives an independent stream keyed by (K, n). The scheme is
/// part of the reproducibility contract and will not change.
class Rng {
 public:
  explicit Rng(std::uint64_t key) noexcept : key_(key) {}

  std::uint64_t next() noexcept;
  Rng split(std::uint64_t stream) const noexcept;

  /// Uniform in [0, n); n must be positive. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t n);

  /// Uniform multiple of 2^-53 in [0, 1).
  Rational unit_rational();
  double unit() noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace cachelab
