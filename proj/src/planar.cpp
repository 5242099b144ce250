#include "encdepth/planar.hpp"

#include <algorithm>

namespace encdepth {

namespace {

// Strict containment of q in the triangle of three distinct ranks: q is
// inside iff each ccw gap between consecutive corners is less than a half
// turn, which the opposite-neighbor table answers with index arithmetic.
bool triangle_contains_query(const RadialOrder& ro, int ra, int rb, int rc) {
  int a = ra, b = rb, c = rc;
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  const int n = ro.n;
  auto within_half_turn = [&](int x, int y) {
    return ((y - x) % n + n) % n <= ro.half_turn_count(x);
  };
  return within_half_turn(a, b) && within_half_turn(b, c) && within_half_turn(c, a);
}

std::vector<int> interval_points(const RadialOrder& ro, const Interval& iv) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(iv.size(ro.n)));
  for (int t = 0, sz = iv.size(ro.n); t < sz; ++t)
    out.push_back(ro.order[static_cast<std::size_t>((iv.start + t) % ro.n)]);
  return out;
}

}  // namespace

std::optional<PlanarWitness> check_enclosing(const RadialOrder& ro, int k) {
  if (k < 0) throw std::invalid_argument("check_enclosing: k must be >= 0");
  const int n = ro.n;
  if (n < 3 || 3 * (k + 1) > n) return std::nullopt;
  if (!ro.opposite_complete) {
    // Re-raise the antipodal degeneracy with its indices.
    for (int r = 0; r < n; ++r)
      if (ro.opp_r[static_cast<std::size_t>(r)] < 0) opposite_neighbors(ro, r);
  }

  for (int i = 0; i < n; ++i) {
    const int i2 = (i + k) % n;
    const int j = ro.opp_r[static_cast<std::size_t>(i)];
    const int m = ro.opp_l[static_cast<std::size_t>(i2)];

    Interval s1{i, i2};
    Interval s2{((j - k) % n + n) % n, j};
    Interval s3{m, (m + k) % n};
    if (!intervals_pairwise_disjoint(s1, s2, s3, n)) continue;

    bool all_contain = true;
    for (int ca : {s1.start, s1.end}) {
      for (int cb : {s2.start, s2.end}) {
        for (int cc : {s3.start, s3.end}) {
          if (!triangle_contains_query(ro, ca, cb, cc)) {
            all_contain = false;
            break;
          }
        }
        if (!all_contain) break;
      }
      if (!all_contain) break;
    }
    if (!all_contain) continue;

    PlanarWitness w;
    w.intervals = {s1, s2, s3};
    w.k_plus_1 = k + 1;
    for (int b = 0; b < 3; ++b)
      w.blocks[static_cast<std::size_t>(b)] = interval_points(ro, w.intervals[static_cast<std::size_t>(b)]);
    return w;
  }
  return std::nullopt;
}

DepthResult enclosing_depth_planar(const Instance& inst) {
  if (inst.dimension != 2) throw std::invalid_argument("enclosing_depth_planar: d must be 2");

  DepthResult result;
  const int n = inst.n();
  if (n < 3) {
    validate_instance(inst, ValidateMode::planar);
    return result;
  }

  const RadialOrder ro = radial_order(inst);  // validates in planar mode

  ++result.stats.subroutine_calls;
  auto base = check_enclosing(ro, 0);
  if (!base) return result;

  // check_enclosing succeeds on a prefix {0, ..., k*} of k values (dropping
  // one point per interval keeps an enclosing family), so binary search for
  // the last success over {0, ..., floor(n/3) - 1}.
  int lo = 0;
  int hi = n / 3 - 1;
  PlanarWitness best = std::move(*base);
  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    ++result.stats.subroutine_calls;
    if (auto w = check_enclosing(ro, mid)) {
      best = std::move(*w);
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  result.depth = lo + 1;
  result.witness = std::move(best);
  return result;
}

}  // namespace encdepth
