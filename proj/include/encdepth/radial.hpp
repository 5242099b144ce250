#pragma once

#include <array>
#include <utility>
#include <vector>

#include "encdepth/geometry.hpp"

namespace encdepth {

/// Circular run of radially ordered points, rank `start` through rank `end`
/// inclusive, indices mod n. A single rank is the interval {a, a}.
struct Interval {
  int start = 0;
  int end = 0;

  int size(int n) const { return ((end - start) % n + n) % n + 1; }
  bool contains(int rank, int n) const {
    return ((rank - start) % n + n) % n <= ((end - start) % n + n) % n;
  }
  bool operator==(const Interval& o) const { return start == o.start && end == o.end; }
};

/// True iff the three circular rank ranges share no rank.
bool intervals_pairwise_disjoint(const Interval& a, const Interval& b, const Interval& c, int n);

/// S sorted counter-clockwise around q (d = 2), with the opposite-neighbor
/// table precomputed by binary search. Immutable after construction; the
/// structure is purely circular — no algorithm may depend on which point
/// happens to sit at rank 0.
struct RadialOrder {
  int n = 0;
  std::vector<int> order;      // rank -> original index
  std::vector<int> position;   // original index -> rank
  std::vector<int> opp_r;      // rank -> rank of s^(r), last point before the antipode
  std::vector<int> opp_l;      // rank -> rank of s^(l), first point after the antipode
  std::vector<std::array<Rational, 2>> dir;  // original index -> s - q
  // False iff some point has an exact antipodal partner; such ranks carry -1
  // in the tables and the planar subroutine refuses to run.
  bool opposite_complete = true;

  const std::array<Rational, 2>& dir_at_rank(int rank) const {
    return dir[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])];
  }
  /// Number of points strictly within the open half-turn ccw of the point at
  /// `rank` (equals the rank distance to its right opposite neighbor).
  int half_turn_count(int rank) const {
    return ((opp_r[static_cast<std::size_t>(rank)] - rank) % n + n) % n;
  }
};

/// Sorts S counter-clockwise around q using exact orientation comparisons
/// (half-plane split at the +x direction, cross-product sign within each
/// half) and fills the opposite-neighbor tables. Throws DegeneracyError on
/// angular ties (two points on one ray from q) and on q in S; an exactly
/// antipodal pair leaves the order usable but the tables incomplete.
RadialOrder radial_order(const Instance& inst);

/// (r_rank, l_rank) for the point at `rank`: the last point strictly before
/// the antipodal direction and the first strictly after, found by binary
/// search on the "left of the line through q and s" predicate. Throws
/// DegeneracyError if another point is exactly antipodal to s. Requires
/// n >= 2. The two results are always circularly adjacent.
std::pair<int, int> opposite_neighbors(const RadialOrder& ro, int rank);

}  // namespace encdepth
