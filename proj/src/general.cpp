#include "encdepth/general.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>

#include "encdepth/linalg.hpp"

namespace encdepth {

namespace {

bool vectors_parallel(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t d = p.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (p[i] * q[j] != p[j] * q[i]) return false;
  return true;
}

std::vector<Rational> inward_normal(const Instance& inst, const OrientedHyperplane& h) {
  std::vector<Rational> n = hyperplane_normal(inst, h.defining);
  if (h.side < 0)
    for (auto& c : n) c = -c;
  return n;
}

// Lexicographic successor of a k-combination of [0, m).
bool next_combination(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
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

std::uint64_t binom_saturated(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

// Lexicographic unranking of a k-combination of [0, m).
std::vector<int> unrank_combination(std::uint64_t rank, int m, int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  int v = 0;
  for (int pos = 0; pos < k; ++pos) {
    while (true) {
      std::uint64_t cnt = binom_saturated(static_cast<std::uint64_t>(m - 1 - v),
                                          static_cast<std::uint64_t>(k - 1 - pos));
      if (rank < cnt) break;
      rank -= cnt;
      ++v;
    }
    c[static_cast<std::size_t>(pos)] = v++;
  }
  return c;
}

struct Support {
  std::vector<int> defining;
  std::vector<Rational> normal;
  std::vector<signed char> row;  // sign of normal . (s_t - q) per point
};

// cmp-based ordering so canonical directions can key a map.
struct RatVecLess {
  bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

std::vector<Rational> canonical_direction(const std::vector<Rational>& n) {
  std::size_t f = 0;
  while (f < n.size() && n[f] == 0) ++f;
  std::vector<Rational> canon(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) canon[i] = n[i] / n[f];
  return canon;
}

// Precomputes all C(n, d-1) hyperplane supports, their normals and side-sign
// rows, raising the lazy degeneracy errors (zero normal, coincident
// hyperplanes, extra point on a hyperplane) as they are discovered.
std::vector<Support> build_supports(const Instance& inst) {
  const int d = inst.dimension;
  const int n = inst.n();
  std::vector<Support> supports;
  std::map<std::vector<Rational>, int, RatVecLess> seen;

  std::vector<int> comb(static_cast<std::size_t>(d - 1));
  for (int i = 0; i < d - 1; ++i) comb[static_cast<std::size_t>(i)] = i;
  do {
    Support s;
    s.defining = comb;
    s.normal = hyperplane_normal(inst, comb);

    auto [it, inserted] = seen.emplace(canonical_direction(s.normal), static_cast<int>(supports.size()));
    if (!inserted) {
      std::vector<int> both = supports[static_cast<std::size_t>(it->second)].defining;
      both.insert(both.end(), comb.begin(), comb.end());
      throw DegeneracyError(DegeneracyKind::coincident_hyperplanes, both);
    }

    s.row.resize(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
      Sign sg = halfspace_side(s.normal, +1, inst.query, inst.points[static_cast<std::size_t>(t)]);
      if (sg == 0 && std::find(comb.begin(), comb.end(), t) == comb.end()) {
        std::vector<int> idx = comb;
        idx.push_back(t);
        throw DegeneracyError(DegeneracyKind::point_on_hyperplane, idx);
      }
      s.row[static_cast<std::size_t>(t)] = static_cast<signed char>(sg);
    }
    supports.push_back(std::move(s));
  } while (next_combination(comb, n));
  return supports;
}

struct Candidate {
  int k = -1;
  std::uint64_t subset_rank = std::numeric_limits<std::uint64_t>::max();
  unsigned sigma_code = 0;
  std::vector<int> subset;

  bool better_than(const Candidate& o) const {
    if (k != o.k) return k > o.k;
    if (subset_rank != o.subset_rank) return subset_rank < o.subset_rank;
    return sigma_code < o.sigma_code;
  }
};

// min_i |S_i| for the selection, via the precomputed sign rows.
int selection_min_count(const std::vector<Support>& supports, const std::vector<int>& subset,
                        const std::vector<Sign>& sigma, int n) {
  const int h = static_cast<int>(subset.size());
  std::vector<int> counts(static_cast<std::size_t>(h), 0);
  for (int t = 0; t < n; ++t) {
    int violations = 0;
    int violator = -1;
    for (int j = 0; j < h; ++j) {
      int s = sigma[static_cast<std::size_t>(j)] *
              supports[static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])].row[static_cast<std::size_t>(t)];
      if (s < 0) {
        ++violations;
        violator = j;
        if (violations >= 2) break;
      }
    }
    if (violations == 0)
      for (int j = 0; j < h; ++j) ++counts[static_cast<std::size_t>(j)];
    else if (violations == 1)
      ++counts[static_cast<std::size_t>(violator)];
  }
  return *std::min_element(counts.begin(), counts.end());
}

std::vector<std::vector<int>> selection_sets(const std::vector<Support>& supports,
                                             const std::vector<int>& subset,
                                             const std::vector<Sign>& sigma, int n) {
  const int h = static_cast<int>(subset.size());
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(h));
  for (int t = 0; t < n; ++t) {
    int violations = 0;
    int violator = -1;
    for (int j = 0; j < h; ++j) {
      int s = sigma[static_cast<std::size_t>(j)] *
              supports[static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])].row[static_cast<std::size_t>(t)];
      if (s < 0) {
        ++violations;
        violator = j;
        if (violations >= 2) break;
      }
    }
    if (violations == 0)
      for (int j = 0; j < h; ++j) sets[static_cast<std::size_t>(j)].push_back(t);
    else if (violations == 1)
      sets[static_cast<std::size_t>(violator)].push_back(t);
  }
  return sets;
}

std::vector<Sign> sigma_from_code(unsigned code, int h) {
  std::vector<Sign> sigma(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i)
    sigma[static_cast<std::size_t>(i)] = (code >> static_cast<unsigned>(i)) & 1u ? -1 : +1;
  return sigma;
}

unsigned code_from_sigma(const std::vector<Sign>& sigma) {
  unsigned code = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] < 0) code |= 1u << static_cast<unsigned>(i);
  return code;
}

// The orientation assignments giving a trivial cone for this subset:
// none unless the kernel vector of the normal matrix has all entries
// nonzero, in which case exactly sign(kappa) and its negation qualify.
std::vector<unsigned> trivial_sigma_codes(const std::vector<Support>& supports,
                                          const std::vector<int>& subset, int d) {
  Matrix a(static_cast<std::size_t>(d), std::vector<Rational>(subset.size()));
  for (int r = 0; r < d; ++r)
    for (std::size_t i = 0; i < subset.size(); ++i)
      a[static_cast<std::size_t>(r)][i] =
          supports[static_cast<std::size_t>(subset[i])].normal[static_cast<std::size_t>(r)];
  std::vector<Rational> kappa = kernel_cofactor(a);

  std::vector<Sign> sigma(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Sign s = sign_of(kappa[i]);
    if (s == 0) return {};
    sigma[i] = s;
  }
  unsigned c1 = code_from_sigma(sigma);
  unsigned c2 = ~c1 & ((1u << subset.size()) - 1u);
  if (c1 > c2) std::swap(c1, c2);
  return {c1, c2};
}

struct WorkerSummary {
  Candidate best;
  std::uint64_t subsets_examined = 0;
};

void enumerate_range(const std::vector<Support>& supports, int d, int n, std::uint64_t begin,
                     std::uint64_t end, const GeneralOptions& opts, WorkerSummary& out) {
  if (begin >= end) return;
  const int h = d + 1;
  const int m = static_cast<int>(supports.size());
  const int cap = n / h;
  std::vector<int> subset = unrank_combination(begin, m, h);

  for (std::uint64_t rank = begin; rank < end; ++rank) {
    ++out.subsets_examined;
    std::vector<unsigned> codes;
    if (opts.exhaustive_orientations) {
      for (unsigned code = 0; code < (1u << h); ++code) {
        std::vector<std::vector<Rational>> normals;
        normals.reserve(static_cast<std::size_t>(h));
        std::vector<Sign> sigma = sigma_from_code(code, h);
        for (int i = 0; i < h; ++i) {
          std::vector<Rational> a = supports[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])].normal;
          if (sigma[static_cast<std::size_t>(i)] < 0)
            for (auto& cval : a) cval = -cval;
          normals.push_back(std::move(a));
        }
        if (cone_is_trivial(normals)) codes.push_back(code);
      }
    } else {
      codes = trivial_sigma_codes(supports, subset, d);
    }

    for (unsigned code : codes) {
      std::vector<Sign> sigma = sigma_from_code(code, h);
      int k = selection_min_count(supports, subset, sigma, n);
      Candidate cand{k, rank, code, subset};
      if (cand.better_than(out.best)) out.best = std::move(cand);
    }

    if (opts.prune && out.best.k >= cap) break;
    if (rank + 1 < end && !next_combination(subset, m)) break;
  }
}

}  // namespace

bool cone_is_trivial(const std::vector<std::vector<Rational>>& inward_normals) {
  const std::size_t h = inward_normals.size();
  if (h < 2) throw std::invalid_argument("cone_is_trivial: need d+1 normals");
  const std::size_t d = inward_normals[0].size();
  if (h != d + 1) throw std::invalid_argument("cone_is_trivial: need d+1 normals of dimension d");
  for (const auto& a : inward_normals)
    if (a.size() != d) throw std::invalid_argument("cone_is_trivial: dimension mismatch");

  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      if (vectors_parallel(inward_normals[i], inward_normals[j]))
        throw DegeneracyError(DegeneracyKind::coincident_hyperplanes,
                              {static_cast<int>(i), static_cast<int>(j)});

  Matrix m(d + 1, std::vector<Rational>(h));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i < h; ++i) m[r][i] = inward_normals[i][r];
  for (std::size_t i = 0; i < h; ++i) m[d][i] = 1;
  std::vector<Rational> rhs(d + 1);
  rhs[d] = 1;

  auto lambda = solve_full_pivot(std::move(m), std::move(rhs));
  if (!lambda) return false;
  for (const auto& l : *lambda)
    if (sign_of(l) <= 0) return false;
  return true;
}

bool cone_is_trivial(const Instance& inst, const std::vector<OrientedHyperplane>& hs) {
  std::vector<std::vector<Rational>> normals;
  normals.reserve(hs.size());
  for (const auto& h : hs) normals.push_back(inward_normal(inst, h));
  return cone_is_trivial(normals);
}

std::vector<std::vector<int>> count_sets(const Instance& inst,
                                         const std::vector<OrientedHyperplane>& hs) {
  const int n = inst.n();
  const int h = static_cast<int>(hs.size());
  std::vector<std::vector<Rational>> normals;
  normals.reserve(hs.size());
  for (const auto& hp : hs) normals.push_back(inward_normal(inst, hp));

  std::vector<std::vector<int>> sets(static_cast<std::size_t>(h));
  for (int t = 0; t < n; ++t) {
    const Point& p = inst.points[static_cast<std::size_t>(t)];
    int violations = 0;
    int violator = -1;
    for (int j = 0; j < h && violations < 2; ++j) {
      if (halfspace_side(normals[static_cast<std::size_t>(j)], +1, inst.query, p) < 0) {
        ++violations;
        violator = j;
      }
    }
    if (violations == 0)
      for (int j = 0; j < h; ++j) sets[static_cast<std::size_t>(j)].push_back(t);
    else if (violations == 1)
      sets[static_cast<std::size_t>(violator)].push_back(t);
  }
  return sets;
}

DepthResult enclosing_depth_general(const Instance& inst, const GeneralOptions& opts) {
  const int d = inst.dimension;
  if (d < 2) throw std::invalid_argument("enclosing_depth_general: d must be >= 2");
  validate_instance(inst, ValidateMode::general);

  DepthResult result;
  const int n = inst.n();
  if (n < d + 1) return result;

  const std::vector<Support> supports = build_supports(inst);
  const int m = static_cast<int>(supports.size());
  const int h = d + 1;
  if (m < h) return result;

  const std::uint64_t total = binom_saturated(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(h));
  int threads = std::max(1, opts.threads);
  if (total == std::numeric_limits<std::uint64_t>::max()) threads = 1;
  if (static_cast<std::uint64_t>(threads) > total) threads = static_cast<int>(std::max<std::uint64_t>(1, total));

  std::vector<WorkerSummary> summaries(static_cast<std::size_t>(threads));
  if (threads == 1) {
    enumerate_range(supports, d, n, 0, total, opts, summaries[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
      std::uint64_t begin = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(threads);
      std::uint64_t end = total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(threads);
      pool.emplace_back([&, w, begin, end] {
        enumerate_range(supports, d, n, begin, end, opts, summaries[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& t : pool) t.join();
  }

  Candidate best;
  for (auto& s : summaries) {
    result.stats.subroutine_calls += s.subsets_examined;
    if (s.best.k >= 0 && s.best.better_than(best)) best = std::move(s.best);
  }

  if (best.k >= 1) {
    std::vector<Sign> sigma = sigma_from_code(best.sigma_code, h);
    GeneralWitness w;
    w.k = best.k;
    w.sets = selection_sets(supports, best.subset, sigma, n);
    for (int i = 0; i < h; ++i)
      w.halfspaces.push_back(OrientedHyperplane{
          supports[static_cast<std::size_t>(best.subset[static_cast<std::size_t>(i)])].defining,
          sigma[static_cast<std::size_t>(i)]});
    result.depth = best.k;
    result.witness = std::move(w);
  } else {
    result.depth = std::max(best.k, 0);
  }
  return result;
}

DepthResult enclosing_depth_1d(const Instance& inst) {
  if (inst.dimension != 1) throw std::invalid_argument("enclosing_depth_1d: d must be 1");
  validate_instance(inst, ValidateMode::general);
  int below = 0, above = 0;
  for (const auto& p : inst.points) {
    int c = cmp(p[0], inst.query[0]);
    if (c < 0) ++below;
    else ++above;
  }
  DepthResult result;
  result.depth = std::min(below, above);
  return result;
}

}  // namespace encdepth
