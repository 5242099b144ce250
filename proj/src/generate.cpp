#include "encdepth/generate.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace encdepth {

std::int64_t DetRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw > limit);
  return lo + static_cast<std::int64_t>(draw % range);
}

namespace {

constexpr std::int64_t kBox = 1'000'000;
constexpr int kMaxResampleRounds = 10'000;

Point int_point(const std::vector<std::int64_t>& coords) {
  std::vector<Rational> r;
  r.reserve(coords.size());
  for (auto c : coords) r.emplace_back(static_cast<long>(c));
  return Point(std::move(r));
}

std::int64_t isqrt_floor(std::int64_t v) {
  std::int64_t s = 0;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

std::vector<std::int64_t> draw_annulus(DetRng& rng, int d) {
  const std::int64_t rmin2 = (kBox / 2) * (kBox / 2);
  const std::int64_t rmax2 = kBox * kBox;
  // Per-coordinate box scaled by sqrt(d) so the annulus keeps a healthy
  // acceptance rate in any dimension.
  const std::int64_t bd = kBox / std::max<std::int64_t>(1, isqrt_floor(d));
  while (true) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d));
    std::int64_t norm2 = 0;
    for (auto& v : c) {
      v = rng.uniform(-bd, bd);
      norm2 += v * v;
    }
    if (norm2 >= rmin2 && norm2 <= rmax2) return c;
  }
}

std::vector<std::int64_t> draw_gaussian_like(DetRng& rng, int d) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(d));
  for (auto& v : c) {
    std::int64_t acc = 0;
    for (int t = 0; t < 8; ++t) acc += rng.uniform(-kBox / 8, kBox / 8);
    v = acc;
  }
  return c;
}

// Cluster centers that keep the origin strictly inside every transversal
// simplex for jitter well below the radius.
std::vector<std::vector<std::int64_t>> cluster_centers(int d) {
  if (d == 2) {
    // Directions 90, 210 and 330 degrees at radius ~10^6.
    return {{0, 1'000'000}, {-866'025, -500'000}, {866'025, -500'000}};
  }
  if (d == 3) {
    return {{577'350, 577'350, 577'350},
            {577'350, -577'350, -577'350},
            {-577'350, 577'350, -577'350},
            {-577'350, -577'350, 577'350}};
  }
  // e_i directions plus the all-negative corner.
  std::vector<std::vector<std::int64_t>> centers;
  for (int i = 0; i < d; ++i) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d), 0);
    c[static_cast<std::size_t>(i)] = kBox;
    centers.push_back(std::move(c));
  }
  centers.emplace_back(static_cast<std::size_t>(d), -kBox * 6 / 10);
  return centers;
}

// First general-position violation, or nullopt. Returns the index to
// resample (the larger index of an offending pair).
std::optional<int> find_violation(const Instance& inst) {
  const int d = inst.dimension;
  const int n = inst.n();
  try {
    if (d == 2) {
      validate_instance(inst, ValidateMode::planar);
    } else {
      validate_instance(inst, ValidateMode::general);
      if (d >= 3 && n <= 30) {
        // Full check: no d+1 points of S ∪ {q} affinely dependent.
        std::vector<int> comb(static_cast<std::size_t>(d + 1));
        // Combinations over n+1 slots where slot n stands for q.
        for (int i = 0; i <= d; ++i) comb[static_cast<std::size_t>(i)] = i;
        while (true) {
          std::vector<Point> pts;
          pts.reserve(static_cast<std::size_t>(d + 1));
          for (int s : comb)
            pts.push_back(s == n ? inst.query : inst.points[static_cast<std::size_t>(s)]);
          if (orientation(pts) == 0) {
            int worst = -1;
            for (int s : comb)
              if (s != n) worst = std::max(worst, s);
            return worst;
          }
          int i = d;
          while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - d + i) --i;
          if (i < 0) break;
          ++comb[static_cast<std::size_t>(i)];
          for (int j = i + 1; j <= d; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
  } catch (const DegeneracyError& e) {
    int worst = 0;
    for (int i : e.indices()) worst = std::max(worst, i);
    return worst;
  }
  return std::nullopt;
}

}  // namespace

Instance generate_instance(const GenSpec& spec) {
  if (spec.n < 1 || spec.d < 1) throw std::invalid_argument("generate_instance: need n >= 1, d >= 1");
  DetRng rng(spec.seed);

  const int d = spec.d;
  const int n = spec.n;
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  Point query(std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));

  std::vector<std::vector<std::int64_t>> centers;
  std::int64_t jitter = 0;
  if (spec.shape == Shape::clusters) {
    if (spec.cluster_k < 1 || n != (d + 1) * spec.cluster_k)
      throw std::invalid_argument("clusters shape requires n == (d+1) * k with k >= 1");
    centers = cluster_centers(d);
    jitter = 1'000;
  }

  auto draw_point = [&](int index) {
    switch (spec.shape) {
      case Shape::annulus:
        return int_point(draw_annulus(rng, d));
      case Shape::gaussian_like:
        return int_point(draw_gaussian_like(rng, d));
      case Shape::clusters: {
        const auto& c = centers[static_cast<std::size_t>(index / spec.cluster_k)];
        std::vector<std::int64_t> coords(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i)
          coords[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + rng.uniform(-jitter, jitter);
        return int_point(coords);
      }
    }
    throw std::logic_error("unknown shape");
  };

  for (int i = 0; i < n; ++i) points.push_back(draw_point(i));
  Instance inst = make_instance(std::move(points), std::move(query));

  if (d == 1) {
    for (int round = 0; round < kMaxResampleRounds; ++round) {
      try {
        validate_instance(inst, ValidateMode::general);
        return inst;
      } catch (const DegeneracyError& e) {
        int worst = 0;
        for (int i : e.indices()) worst = std::max(worst, i);
        inst.points[static_cast<std::size_t>(worst)] = draw_point(worst);
      }
    }
    throw std::runtime_error("generate_instance: could not reach general position");
  }

  for (int round = 0; round < kMaxResampleRounds; ++round) {
    auto bad = find_violation(inst);
    if (!bad) return inst;
    inst.points[static_cast<std::size_t>(*bad)] = draw_point(*bad);
  }
  throw std::runtime_error("generate_instance: could not reach general position");
}

}  // namespace encdepth
