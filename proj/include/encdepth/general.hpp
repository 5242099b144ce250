#pragma once

#include "encdepth/result.hpp"

namespace encdepth {

/// Whether the d+1 closed halfspaces through q described by their inward
/// normals intersect in {q} alone. True iff the unique solution of
/// sum(lambda_i a_i) = 0, sum(lambda_i) = 1 exists with every lambda_i > 0
/// (exact full-pivot solve); a singular system means the normals do not
/// positively span and yields false. Throws
/// DegeneracyError(coincident_hyperplanes) when two normals are parallel,
/// i.e. two of the hyperplanes coincide.
bool cone_is_trivial(const std::vector<std::vector<Rational>>& inward_normals);

/// Convenience overload building the inward normals from oriented
/// hyperplanes of an instance.
bool cone_is_trivial(const Instance& inst, const std::vector<OrientedHyperplane>& hs);

/// S_i = { s in S : side_of_hyperplane(h_j, s) >= 0 for all j != i }, for
/// i = 0..d. Closed halfspaces: boundary points count. Meaningful under
/// cone_is_trivial(hs); pure, never throws beyond normal construction.
std::vector<std::vector<int>> count_sets(const Instance& inst,
                                         const std::vector<OrientedHyperplane>& hs);

struct GeneralOptions {
  /// Early termination: stop once the best k reaches floor(n/(d+1)) and skip
  /// witness materialization for non-improving selections. Never changes the
  /// result; exists so tests can compare both paths.
  bool prune = true;
  /// Evaluate every one of the 2^(d+1) orientation assignments through the
  /// lambda-solve instead of deriving the qualifying pair from the kernel
  /// vector. Slow path for cross-validation in tests.
  bool exhaustive_orientations = false;
  /// Number of enumeration threads. Results are identical for any value.
  int threads = 1;
};

/// Enclosing depth in R^d (d >= 2): enumerate (d+1)-subsets of the
/// C(n, d-1) hyperplane supports together with orientation assignments,
/// keep selections whose cone is trivial, and maximize min_i |S_i|.
/// Polynomial for fixed d. Eagerly validates duplicates and q not in S;
/// degeneracies among hyperplanes raise DegeneracyError lazily.
DepthResult enclosing_depth_general(const Instance& inst, const GeneralOptions& opts = {});

/// Analytic d = 1 depth: min(#{s < q}, #{s > q}). No witness.
DepthResult enclosing_depth_1d(const Instance& inst);

}  // namespace encdepth
