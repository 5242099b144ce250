#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "encdepth/rational.hpp"

namespace encdepth {

/// A point with exact rational coordinates in R^d.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  bool operator==(const Point& o) const { return coords == o.coords; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Data set S plus query point q. Indices into `points` are 0-based.
struct Instance {
  std::vector<Point> points;
  Point query;
  int dimension = 0;

  int n() const { return static_cast<int>(points.size()); }
};

/// Builds an Instance and checks that every row has the same dimension d >= 1.
/// Throws std::invalid_argument on a mismatch.
Instance make_instance(std::vector<Point> points, Point query);

enum class DegeneracyKind {
  duplicate_point,
  query_in_data,
  collinear_with_query,  // two data points on one ray from q
  antipodal_pair,        // two data points on opposite rays from q
  degenerate_simplex,
  degenerate_hyperplane,     // defining points + q affinely dependent
  coincident_hyperplanes,    // two supports span the same hyperplane through q
  point_on_hyperplane,       // non-defining data point exactly on a support hyperplane
  affinely_dependent,        // d+1 points of S ∪ {q} affinely dependent (d >= 3 check)
};

/// The input violates the general-position contract. Carries the indices of
/// the offending points (indices into S; -1 stands for the query point).
class DegeneracyError : public std::runtime_error {
 public:
  DegeneracyError(DegeneracyKind kind, std::vector<int> indices);

  DegeneracyKind kind() const { return kind_; }
  const std::vector<int>& indices() const { return indices_; }

 private:
  DegeneracyKind kind_;
  std::vector<int> indices_;
};

namespace stats {
/// Number of exact sign evaluations (orientation / cross / halfspace side)
/// since the last reset. Thread-local.
std::uint64_t predicate_calls();
void reset_predicate_calls();
}  // namespace stats

/// Sign of the (d+1)x(d+1) homogeneous determinant of d+1 points in R^d:
/// +1 / -1 for the two orientation classes, 0 iff affinely dependent.
/// orientation((0,0),(1,0),(0,1)) = +1.
Sign orientation(const std::vector<Point>& simplex);

/// 2D cross product sign of (ax,ay) x (bx,by). The workhorse predicate of the
/// planar path; counted in stats::predicate_calls.
Sign cross_sign(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by);

enum class Containment { inside, boundary, outside };

/// Classifies x against the simplex spanned by d+1 affinely independent
/// vertices, via the d+1 orientation signs obtained by substituting x for each
/// vertex in turn. Throws DegeneracyError(degenerate_simplex) if the vertices
/// are affinely dependent.
Containment point_in_simplex(const std::vector<Point>& vertices, const Point& x);

/// One closed halfspace bounded by the hyperplane through q and d-1 data
/// points. side = +1 selects {x : n·(x-q) >= 0} for the cofactor normal n,
/// side = -1 the complementary closed halfspace.
struct OrientedHyperplane {
  std::vector<int> defining;  // sorted (d-1)-subset of S indices
  Sign side = +1;
};

/// Cofactor normal of the hyperplane through q and the defining points
/// (n_i = (-1)^(i+1) det of the i-th minor; for d=2 this is the ccw rotation
/// of s-q). Throws DegeneracyError(degenerate_hyperplane) when the defining
/// points together with q are affinely dependent (zero normal).
std::vector<Rational> hyperplane_normal(const Instance& inst, const std::vector<int>& defining);

/// Sign of x against h: +1 strictly inside the chosen closed halfspace's
/// interior, 0 on the boundary hyperplane, -1 strictly outside. Flipping
/// h.side flips the sign.
Sign side_of_hyperplane(const Instance& inst, const OrientedHyperplane& h, const Point& x);

/// Same, with a precomputed normal (n·(x-q) sign times side).
Sign halfspace_side(const std::vector<Rational>& normal, Sign side, const Point& q,
                    const Point& x);

enum class ValidateMode { planar, general };

/// planar: exhaustive O(n log n) general-position check for d=2 (q not in S,
/// no duplicates, no two points on one line through q — same ray or
/// antipodal). general: eager duplicate / q-in-S checks only; the remaining
/// degeneracies are detected lazily inside the general driver.
void validate_instance(const Instance& inst, ValidateMode mode);

}  // namespace encdepth
