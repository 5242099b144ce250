#include "encdepth/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>

#include "encdepth/linalg.hpp"

namespace encdepth {

namespace {

const char* kind_name(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::duplicate_point: return "duplicate point";
    case DegeneracyKind::query_in_data: return "query point coincides with a data point";
    case DegeneracyKind::collinear_with_query: return "two data points collinear with the query point";
    case DegeneracyKind::antipodal_pair: return "two data points antipodal through the query point";
    case DegeneracyKind::degenerate_simplex: return "degenerate simplex";
    case DegeneracyKind::degenerate_hyperplane: return "defining points and query are affinely dependent";
    case DegeneracyKind::coincident_hyperplanes: return "two supports span the same hyperplane";
    case DegeneracyKind::point_on_hyperplane: return "data point lies on a support hyperplane";
    case DegeneracyKind::affinely_dependent: return "affinely dependent point subset";
  }
  return "degeneracy";
}

std::string format_message(DegeneracyKind kind, const std::vector<int>& indices) {
  std::ostringstream os;
  os << "degenerate input: " << kind_name(kind);
  if (!indices.empty()) {
    os << " (points";
    for (int i : indices) {
      os << ' ';
      if (i < 0)
        os << 'q';
      else
        os << i;
    }
    os << ')';
  }
  return os.str();
}

thread_local std::uint64_t g_predicate_calls = 0;

}  // namespace

DegeneracyError::DegeneracyError(DegeneracyKind kind, std::vector<int> indices)
    : std::runtime_error(format_message(kind, indices)), kind_(kind), indices_(std::move(indices)) {}

namespace stats {
std::uint64_t predicate_calls() { return g_predicate_calls; }
void reset_predicate_calls() { g_predicate_calls = 0; }
}  // namespace stats

Instance make_instance(std::vector<Point> points, Point query) {
  const int d = query.dim();
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  for (const auto& p : points)
    if (p.dim() != d) throw std::invalid_argument("dimension mismatch between points");
  Instance inst;
  inst.points = std::move(points);
  inst.query = std::move(query);
  inst.dimension = d;
  return inst;
}

Sign cross_sign(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  ++g_predicate_calls;
  thread_local Rational lhs, rhs;
  mpq_mul(lhs.get_mpq_t(), ax.get_mpq_t(), by.get_mpq_t());
  mpq_mul(rhs.get_mpq_t(), ay.get_mpq_t(), bx.get_mpq_t());
  int c = mpq_cmp(lhs.get_mpq_t(), rhs.get_mpq_t());
  return (c > 0) - (c < 0);
}

Sign orientation(const std::vector<Point>& simplex) {
  if (simplex.empty()) throw std::invalid_argument("orientation: no points");
  const int d = simplex[0].dim();
  if (static_cast<int>(simplex.size()) != d + 1)
    throw std::invalid_argument("orientation: need d+1 points of dimension d");
  for (const auto& p : simplex)
    if (p.dim() != d) throw std::invalid_argument("orientation: dimension mismatch");

  if (d == 2) {
    const Point& a = simplex[0];
    const Point& b = simplex[1];
    const Point& c = simplex[2];
    return cross_sign(b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]);
  }

  ++g_predicate_calls;
  Matrix rows(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) rows[r][c] = simplex[r + 1][c] - simplex[0][c];
  return sign_of(det(std::move(rows)));
}

Containment point_in_simplex(const std::vector<Point>& vertices, const Point& x) {
  const Sign base = orientation(vertices);
  if (base == 0) {
    std::vector<int> idx(vertices.size());
    std::iota(idx.begin(), idx.end(), 0);
    throw DegeneracyError(DegeneracyKind::degenerate_simplex, idx);
  }
  bool on_boundary = false;
  std::vector<Point> probe = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    probe[i] = x;
    Sign s = orientation(probe);
    probe[i] = vertices[i];
    if (s == 0)
      on_boundary = true;
    else if (s != base)
      return Containment::outside;
  }
  return on_boundary ? Containment::boundary : Containment::inside;
}

std::vector<Rational> hyperplane_normal(const Instance& inst, const std::vector<int>& defining) {
  const int d = inst.dimension;
  if (static_cast<int>(defining.size()) != d - 1)
    throw std::invalid_argument("hyperplane_normal: need d-1 defining points");

  if (d == 2) {
    const Point& p = inst.points[static_cast<std::size_t>(defining[0])];
    std::vector<Rational> n{inst.query[1] - p[1], p[0] - inst.query[0]};
    if (n[0] == 0 && n[1] == 0)
      throw DegeneracyError(DegeneracyKind::degenerate_hyperplane, defining);
    return n;
  }

  Matrix w(static_cast<std::size_t>(d - 1), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int r = 0; r < d - 1; ++r) {
    const Point& p = inst.points[static_cast<std::size_t>(defining[static_cast<std::size_t>(r)])];
    for (int c = 0; c < d; ++c) w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = p[c] - inst.query[c];
  }

  std::vector<Rational> normal(static_cast<std::size_t>(d));
  Matrix minor(static_cast<std::size_t>(d - 1), std::vector<Rational>(static_cast<std::size_t>(d - 1)));
  bool nonzero = false;
  for (int skip = 0; skip < d; ++skip) {
    for (int r = 0; r < d - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == skip) continue;
        minor[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc++)] =
            w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      }
    }
    Rational m = det(minor);
    normal[static_cast<std::size_t>(skip)] = (skip % 2 == 0) ? Rational(-m) : m;
    if (normal[static_cast<std::size_t>(skip)] != 0) nonzero = true;
  }
  if (!nonzero) throw DegeneracyError(DegeneracyKind::degenerate_hyperplane, defining);
  return normal;
}

Sign halfspace_side(const std::vector<Rational>& normal, Sign side, const Point& q, const Point& x) {
  ++g_predicate_calls;
  Rational dot(0);
  for (std::size_t i = 0; i < normal.size(); ++i) dot += normal[i] * (x.coords[i] - q.coords[i]);
  return sign_of(dot) * side;
}

Sign side_of_hyperplane(const Instance& inst, const OrientedHyperplane& h, const Point& x) {
  return halfspace_side(hyperplane_normal(inst, h.defining), h.side, inst.query, x);
}

namespace {

// Canonical direction representative for the planar line-through-q test:
// u folded into the upper half-plane (angle in [0, pi)).
struct Folded {
  Rational x, y;
  bool flipped;
};

Folded fold_direction(const Rational& ux, const Rational& uy) {
  bool upper = sign_of(uy) > 0 || (sign_of(uy) == 0 && sign_of(ux) > 0);
  if (upper) return {ux, uy, false};
  return {Rational(-ux), Rational(-uy), true};
}

void validate_planar(const Instance& inst) {
  const int n = inst.n();
  std::vector<Folded> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point& p = inst.points[static_cast<std::size_t>(i)];
    Rational ux = p[0] - inst.query[0];
    Rational uy = p[1] - inst.query[1];
    if (ux == 0 && uy == 0) throw DegeneracyError(DegeneracyKind::query_in_data, {i});
    w.push_back(fold_direction(ux, uy));
  }

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    Sign c = cross_sign(w[static_cast<std::size_t>(a)].x, w[static_cast<std::size_t>(a)].y,
                        w[static_cast<std::size_t>(b)].x, w[static_cast<std::size_t>(b)].y);
    if (c != 0) return c > 0;
    return a < b;
  });

  for (int t = 0; t + 1 < n; ++t) {
    int a = idx[static_cast<std::size_t>(t)];
    int b = idx[static_cast<std::size_t>(t + 1)];
    if (cross_sign(w[static_cast<std::size_t>(a)].x, w[static_cast<std::size_t>(a)].y,
                   w[static_cast<std::size_t>(b)].x, w[static_cast<std::size_t>(b)].y) != 0)
      continue;
    // Same line through q. Classify.
    if (inst.points[static_cast<std::size_t>(a)] == inst.points[static_cast<std::size_t>(b)])
      throw DegeneracyError(DegeneracyKind::duplicate_point, {a, b});
    if (w[static_cast<std::size_t>(a)].flipped == w[static_cast<std::size_t>(b)].flipped)
      throw DegeneracyError(DegeneracyKind::collinear_with_query, {a, b});
    throw DegeneracyError(DegeneracyKind::antipodal_pair, {a, b});
  }
}

void validate_general(const Instance& inst) {
  const int n = inst.n();
  for (int i = 0; i < n; ++i)
    if (inst.points[static_cast<std::size_t>(i)] == inst.query)
      throw DegeneracyError(DegeneracyKind::query_in_data, {i});

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  auto lex_less = [&](int a, int b) {
    const Point& pa = inst.points[static_cast<std::size_t>(a)];
    const Point& pb = inst.points[static_cast<std::size_t>(b)];
    for (int c = 0; c < inst.dimension; ++c) {
      int cmp_v = cmp(pa[c], pb[c]);
      if (cmp_v != 0) return cmp_v < 0;
    }
    return a < b;
  };
  std::sort(idx.begin(), idx.end(), lex_less);
  for (int t = 0; t + 1 < n; ++t) {
    int a = idx[static_cast<std::size_t>(t)];
    int b = idx[static_cast<std::size_t>(t + 1)];
    if (inst.points[static_cast<std::size_t>(a)] == inst.points[static_cast<std::size_t>(b)])
      throw DegeneracyError(DegeneracyKind::duplicate_point, {std::min(a, b), std::max(a, b)});
  }
}

}  // namespace

void validate_instance(const Instance& inst, ValidateMode mode) {
  if (mode == ValidateMode::planar) {
    if (inst.dimension != 2) throw std::invalid_argument("planar validation requires d = 2");
    validate_planar(inst);
  } else {
    validate_general(inst);
  }
}

}  // namespace encdepth
