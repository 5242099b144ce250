#include "encdepth/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace encdepth {

namespace {

// Memo for transversal simplex tests, keyed by the sorted vertex indices
// (16 bits each; d <= 3 fits). Shared across every partition of an instance.
class SimplexCache {
 public:
  explicit SimplexCache(const Instance& inst) : inst_(inst) {
    usable_ = inst.dimension <= 3 && inst.n() < (1 << 16);
  }

  bool contains_query(std::vector<int> vertex_indices) {
    std::sort(vertex_indices.begin(), vertex_indices.end());
    std::uint64_t key = 0;
    if (usable_) {
      for (int v : vertex_indices) key = (key << 16) | static_cast<std::uint64_t>(v);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    std::vector<Point> vertices;
    vertices.reserve(vertex_indices.size());
    for (int v : vertex_indices) vertices.push_back(inst_.points[static_cast<std::size_t>(v)]);
    bool inside = point_in_simplex(vertices, inst_.query) != Containment::outside;
    if (usable_) cache_.emplace(key, inside);
    return inside;
  }

 private:
  const Instance& inst_;
  bool usable_;
  std::unordered_map<std::uint64_t, bool> cache_;
};

bool encloses_impl(const Instance& inst, const std::vector<std::vector<int>>& blocks,
                   SimplexCache& cache) {
  const int h = static_cast<int>(blocks.size());
  std::vector<int> pick(static_cast<std::size_t>(h), 0);
  while (true) {
    std::vector<int> vertices(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i)
      vertices[static_cast<std::size_t>(i)] =
          blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
    if (!cache.contains_query(std::move(vertices))) return false;

    int i = h - 1;
    while (i >= 0 &&
           pick[static_cast<std::size_t>(i)] + 1 ==
               static_cast<int>(blocks[static_cast<std::size_t>(i)].size())) {
      pick[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return true;
    ++pick[static_cast<std::size_t>(i)];
  }
}

bool next_subset(std::vector<int>& c, const std::vector<int>& pool) {
  const int k = static_cast<int>(c.size());
  const int m = static_cast<int>(pool.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < m - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

// Unordered families of d+1 disjoint k-blocks, generated once each by
// requiring the block minima to increase. Returns true when some family
// encloses q.
bool search_blocks(const Instance& inst, std::vector<std::vector<int>>& blocks,
                   std::vector<int>& available, int blocks_left, int k, int min_floor,
                   SimplexCache& cache, std::uint64_t& families_tried) {
  if (blocks_left == 0) {
    ++families_tried;
    return encloses_impl(inst, blocks, cache);
  }
  const int m = static_cast<int>(available.size());
  if (m < k * blocks_left) return false;

  // Positions into `available`; the first chosen position anchors the block
  // minimum, which must exceed the previous block's minimum (min_floor).
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int first = 0; first <= m - k; ++first) {
    if (available[static_cast<std::size_t>(first)] <= min_floor) continue;
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = first + i;
    // Iterate k-subsets of available[first..] whose first element is `first`.
    while (true) {
      std::vector<int> block(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        block[static_cast<std::size_t>(i)] = available[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];

      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(m - k));
      {
        int pi = 0;
        for (int i = 0; i < m; ++i) {
          if (pi < k && pos[static_cast<std::size_t>(pi)] == i) {
            ++pi;
            continue;
          }
          rest.push_back(available[static_cast<std::size_t>(i)]);
        }
      }

      blocks.push_back(std::move(block));
      bool found = search_blocks(inst, blocks, rest, blocks_left - 1, k,
                                 blocks.back()[0], cache, families_tried);
      blocks.pop_back();
      if (found) return true;

      // Advance positions 1..k-1 only (position 0 is pinned to `first`).
      int i = k - 1;
      while (i >= 1 && pos[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 1) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return false;
}

}  // namespace

int bruteforce_guard(int d) {
  switch (d) {
    case 1: return 24;
    case 2: return 12;
    case 3: return 8;
    default: return d + 6;
  }
}

bool encloses(const Instance& inst, const std::vector<std::vector<int>>& blocks) {
  if (static_cast<int>(blocks.size()) != inst.dimension + 1)
    throw std::invalid_argument("encloses: need d+1 blocks");
  for (const auto& b : blocks)
    if (b.empty()) throw std::invalid_argument("encloses: empty block");
  SimplexCache cache(inst);
  return encloses_impl(inst, blocks, cache);
}

int enclosing_depth_bruteforce(const Instance& inst, std::uint64_t* families_tried) {
  const int d = inst.dimension;
  const int n = inst.n();
  if (n > bruteforce_guard(d))
    throw GuardError("bruteforce oracle guard exceeded: n = " + std::to_string(n) +
                     " > " + std::to_string(bruteforce_guard(d)) + " for d = " + std::to_string(d));

  std::uint64_t families = 0;
  if (families_tried) *families_tried = 0;

  if (d == 1) {
    int below = 0, above = 0;
    for (const auto& p : inst.points) {
      int c = cmp(p[0], inst.query[0]);
      if (c < 0) ++below;
      else if (c > 0) ++above;
    }
    return std::min(below, above);
  }

  SimplexCache cache(inst);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;

  int depth = 0;
  for (int k = n / (d + 1); k >= 1; --k) {
    std::vector<std::vector<int>> blocks;
    if (search_blocks(inst, blocks, all, d + 1, k, -1, cache, families)) {
      depth = k;
      break;
    }
  }
  if (families_tried) *families_tried = families;
  return depth;
}

int tukey_depth_planar(const Instance& inst) {
  if (inst.dimension != 2) throw std::invalid_argument("tukey_depth_planar: d must be 2");
  const int n = inst.n();
  if (n == 0) return 0;

  std::vector<std::array<Rational, 2>> u;
  u.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point& p = inst.points[static_cast<std::size_t>(i)];
    u.push_back({p[0] - inst.query[0], p[1] - inst.query[1]});
    if (u.back()[0] == 0 && u.back()[1] == 0)
      throw DegeneracyError(DegeneracyKind::query_in_data, {i});
  }

  // Every minimizing closed halfplane can be rotated onto a line through a
  // data point or swept just past one. Sweeping the line through q and s
  // counter-clockwise strands s and its co-ray points on the right while the
  // antipodal-ray points enter the left side, so the reachable minima at this
  // event are (strict left + antipodal) and (strict right + antipodal); the
  // other candidates are covered when the antipodal partner takes s's role.
  int best = n;
  for (int r = 0; r < n; ++r) {
    int left = 0, right = 0, anti = 0;
    for (int t = 0; t < n; ++t) {
      if (t == r) continue;
      Sign c = cross_sign(u[static_cast<std::size_t>(r)][0], u[static_cast<std::size_t>(r)][1],
                          u[static_cast<std::size_t>(t)][0], u[static_cast<std::size_t>(t)][1]);
      if (c > 0) {
        ++left;
      } else if (c < 0) {
        ++right;
      } else {
        // Same line through q: antipodal iff the dot with u_r is negative.
        Rational dot = u[static_cast<std::size_t>(r)][0] * u[static_cast<std::size_t>(t)][0] +
                       u[static_cast<std::size_t>(r)][1] * u[static_cast<std::size_t>(t)][1];
        if (sign_of(dot) < 0) ++anti;
      }
    }
    best = std::min(best, std::min(left + anti, right + anti));
  }
  return best;
}

}  // namespace encdepth
