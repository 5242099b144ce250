#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "encdepth/geometry.hpp"
#include "encdepth/radial.hpp"

namespace encdepth {

/// Certificate for the planar driver: three pairwise disjoint radial
/// intervals of size k_plus_1 whose every transversal triangle contains q.
/// `blocks` holds the same intervals translated to original point indices
/// (counter-clockwise within each interval).
struct PlanarWitness {
  std::array<Interval, 3> intervals;
  int k_plus_1 = 0;
  std::array<std::vector<int>, 3> blocks;
};

/// Certificate for the general driver: d+1 oriented halfspaces through q
/// with a trivial cone, and the point sets S_i = {s : s in H_j for all
/// j != i}; k = min_i |S_i|.
struct GeneralWitness {
  std::vector<OrientedHyperplane> halfspaces;
  std::vector<std::vector<int>> sets;  // original indices, ascending
  int k = 0;
};

struct DepthStats {
  std::uint64_t subroutine_calls = 0;  // check_enclosing calls / general selections / oracle partitions
};

using Witness = std::variant<std::monostate, PlanarWitness, GeneralWitness>;

struct DepthResult {
  int depth = 0;
  Witness witness;
  DepthStats stats;

  const PlanarWitness* planar_witness() const { return std::get_if<PlanarWitness>(&witness); }
  const GeneralWitness* general_witness() const { return std::get_if<GeneralWitness>(&witness); }
};

}  // namespace encdepth
