#pragma once

#include <cstdint>
#include <random>

#include "encdepth/geometry.hpp"

namespace encdepth {

/// Seedable, platform-independent integer source: the mt19937_64 stream is
/// pinned by the language standard and the range mapping uses plain
/// rejection, so identical seeds give identical instances everywhere.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 eng_;
};

enum class Shape { annulus, gaussian_like, clusters };

struct GenSpec {
  int n = 0;
  int d = 2;
  std::uint64_t seed = 0;
  Shape shape = Shape::annulus;
  int cluster_k = 0;  // clusters only; requires n == (d+1) * cluster_k
};

/// Deterministic random instance with integer coordinates in [-10^6, 10^6]
/// and the query at the origin, regenerated point by point until the
/// general-position validation passes (full check for d = 2 and for
/// d >= 3 with n <= 30). clusters places d+1 tight clusters of cluster_k
/// points around spread directions, which pins the planar depth to exactly
/// cluster_k.
Instance generate_instance(const GenSpec& spec);

}  // namespace encdepth
