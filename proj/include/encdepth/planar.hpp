#pragma once

#include <optional>

#include "encdepth/result.hpp"

namespace encdepth {

/// One pass of the planar subroutine: looks for a rank i such that
/// S1 = [i, i+k], S2 = [j-k, j] (j the right opposite neighbor of s_i) and
/// S3 = [m, m+k] (m the left opposite neighbor of s_{i+k}) are pairwise
/// disjoint and all 8 corner triangles strictly contain q; such a triple
/// (k+1)-encloses q. Returns the witness for the smallest successful rank,
/// or nullopt. Returns nullopt outright when n < 3 or 3(k+1) > n.
std::optional<PlanarWitness> check_enclosing(const RadialOrder& ro, int k);

/// Enclosing depth in the plane: radial preprocessing, then binary search for
/// the largest k with a successful check, depth = k+1 (0 when even k = 0
/// fails or n < 3). O(n log n). Throws DegeneracyError for invalid planar
/// instances.
DepthResult enclosing_depth_planar(const Instance& inst);

}  // namespace encdepth
