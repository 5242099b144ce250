#include "encdepth/radial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace encdepth {

bool intervals_pairwise_disjoint(const Interval& a, const Interval& b, const Interval& c, int n) {
  auto disjoint = [n](const Interval& x, const Interval& y) {
    return !x.contains(y.start, n) && !y.contains(x.start, n);
  };
  return disjoint(a, b) && disjoint(a, c) && disjoint(b, c);
}

namespace {

// 0 for angle in [0, pi) measured from the +x axis at q, 1 for [pi, 2pi).
int half_of(const std::array<Rational, 2>& u) {
  Sign sy = sign_of(u[1]);
  if (sy > 0 || (sy == 0 && sign_of(u[0]) > 0)) return 0;
  return 1;
}

}  // namespace

RadialOrder radial_order(const Instance& inst) {
  if (inst.dimension != 2) throw std::invalid_argument("radial_order: d must be 2");
  const int n = inst.n();

  RadialOrder ro;
  ro.n = n;
  ro.dir.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point& p = inst.points[static_cast<std::size_t>(i)];
    ro.dir.push_back({p[0] - inst.query[0], p[1] - inst.query[1]});
    if (ro.dir.back()[0] == 0 && ro.dir.back()[1] == 0)
      throw DegeneracyError(DegeneracyKind::query_in_data, {i});
  }

  std::vector<int> halves(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) halves[static_cast<std::size_t>(i)] = half_of(ro.dir[static_cast<std::size_t>(i)]);

  ro.order.resize(static_cast<std::size_t>(n));
  std::iota(ro.order.begin(), ro.order.end(), 0);
  std::sort(ro.order.begin(), ro.order.end(), [&](int a, int b) {
    int ha = halves[static_cast<std::size_t>(a)];
    int hb = halves[static_cast<std::size_t>(b)];
    if (ha != hb) return ha < hb;
    const auto& ua = ro.dir[static_cast<std::size_t>(a)];
    const auto& ub = ro.dir[static_cast<std::size_t>(b)];
    Sign c = cross_sign(ua[0], ua[1], ub[0], ub[1]);
    if (c != 0) return c > 0;
    return a < b;  // unreachable after validation; keeps the order strict-weak
  });

  // Angular tie = two points on the same ray from q; adjacent after the sort.
  for (int r = 0; r + 1 < n; ++r) {
    int a = ro.order[static_cast<std::size_t>(r)];
    int b = ro.order[static_cast<std::size_t>(r + 1)];
    if (halves[static_cast<std::size_t>(a)] != halves[static_cast<std::size_t>(b)]) continue;
    const auto& ua = ro.dir[static_cast<std::size_t>(a)];
    const auto& ub = ro.dir[static_cast<std::size_t>(b)];
    if (cross_sign(ua[0], ua[1], ub[0], ub[1]) != 0) continue;
    if (inst.points[static_cast<std::size_t>(a)] == inst.points[static_cast<std::size_t>(b)])
      throw DegeneracyError(DegeneracyKind::duplicate_point, {std::min(a, b), std::max(a, b)});
    throw DegeneracyError(DegeneracyKind::collinear_with_query, {std::min(a, b), std::max(a, b)});
  }

  ro.position.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) ro.position[static_cast<std::size_t>(ro.order[static_cast<std::size_t>(r)])] = r;

  if (n >= 2) {
    ro.opp_r.assign(static_cast<std::size_t>(n), -1);
    ro.opp_l.assign(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
      try {
        auto [rr, ll] = opposite_neighbors(ro, r);
        ro.opp_r[static_cast<std::size_t>(r)] = rr;
        ro.opp_l[static_cast<std::size_t>(r)] = ll;
      } catch (const DegeneracyError&) {
        ro.opposite_complete = false;  // antipodal pair; order itself stays valid
      }
    }
  }
  return ro;
}

std::pair<int, int> opposite_neighbors(const RadialOrder& ro, int rank) {
  const int n = ro.n;
  if (n < 2) throw std::invalid_argument("opposite_neighbors: need n >= 2");
  if (rank < 0 || rank >= n) throw std::invalid_argument("opposite_neighbors: rank out of range");

  const auto& u = ro.dir_at_rank(rank);
  auto left_of = [&](int offset) {
    const auto& v = ro.dir_at_rank((rank + offset) % n);
    return cross_sign(u[0], u[1], v[0], v[1]) > 0;
  };

  // Walking ccw from s, relative angles are strictly increasing, so the
  // "strictly left of the line q->s" points form a prefix of offsets 1..n-1.
  int last_left = 0;
  int lo = 1, hi = n - 1;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    if (left_of(mid)) {
      last_left = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }

  int r_rank = (rank + last_left) % n;
  int l_rank = (rank + last_left + 1) % n;

  if (l_rank != rank) {
    const auto& v = ro.dir_at_rank(l_rank);
    if (cross_sign(u[0], u[1], v[0], v[1]) == 0)
      throw DegeneracyError(DegeneracyKind::antipodal_pair,
                            {ro.order[static_cast<std::size_t>(rank)],
                             ro.order[static_cast<std::size_t>(l_rank)]});
  }
  return {r_rank, l_rank};
}

}  // namespace encdepth
