#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "encdepth/geometry.hpp"

namespace encdepth {

/// Enumeration size guard for the brute-force oracle was exceeded.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Largest n the brute-force oracle accepts for a given dimension
/// (12 for d=2, 8 for d=3).
int bruteforce_guard(int d);

/// True iff every transversal simplex (one point per block) contains q,
/// boundary included. Blocks hold indices into S.
bool encloses(const Instance& inst, const std::vector<std::vector<int>>& blocks);

/// Definition-level enclosing depth: the largest k such that some d+1
/// pairwise disjoint k-blocks of S enclose q, by descending enumeration of
/// unordered block families. Throws GuardError when n exceeds the guard.
/// families_tried, when given, receives the number of block families tested.
int enclosing_depth_bruteforce(const Instance& inst, std::uint64_t* families_tried = nullptr);

/// Tukey (halfspace) depth of q in the plane: the minimum over all closed
/// halfplanes with q on the boundary of |H ∩ S|. Rotating count over the
/// radial order, O(n log n). Upper-bounds the enclosing depth.
int tukey_depth_planar(const Instance& inst);

}  // namespace encdepth
