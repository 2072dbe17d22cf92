#pragma once

// Test-only oracles. Each recomputes a quantity straight from its
// definition, with no use of the butterfly, the Krawtchouk table or the
// library's neighbor counters.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hypercolor/cube.hpp"

namespace hypercolor::testing {

inline VertexSet random_set(std::mt19937_64& rng, unsigned n, double density) {
  std::bernoulli_distribution coin(density);
  return VertexSet::from_predicate(n, [&](VertexIndex) { return coin(rng); });
}

/// Random non-constant set with a random density.
inline VertexSet random_nonconstant(std::mt19937_64& rng, unsigned n) {
  std::uniform_real_distribution<double> density(0.02, 0.98);
  while (true) {
    auto s = random_set(rng, n, density(rng));
    if (!s.is_constant()) return s;
  }
}

inline bool in_set(const VertexSet& s, std::uint64_t x) { return s.contains(static_cast<VertexIndex>(x)); }

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

/// â(v) = Σ_u χ(u) (-1)^<u,v>, O(4^n).
inline std::vector<std::int64_t> naive_spectrum(const VertexSet& s) {
  const std::uint64_t points = s.cube_size();
  std::vector<std::int64_t> out(points, 0);
  for (std::uint64_t v = 0; v < points; ++v)
    for (std::uint64_t u = 0; u < points; ++u)
      if (in_set(s, u)) out[v] += (popcount(u & v) % 2) ? -1 : 1;
  return out;
}

/// Ordered pairs of S at each distance, by a double loop over the cube.
inline std::vector<std::int64_t> naive_distance_counts(const VertexSet& s) {
  const unsigned n = s.dimension();
  std::vector<std::int64_t> out(n + 1, 0);
  const std::uint64_t points = s.cube_size();
  for (std::uint64_t u = 0; u < points; ++u)
    if (in_set(s, u))
      for (std::uint64_t v = 0; v < points; ++v)
        if (in_set(s, v)) ++out[popcount(u ^ v)];
  return out;
}

/// P_k(i) as the character sum Σ_{wt(v)=k} (-1)^<u,v> for any u of weight i.
inline std::int64_t character_krawtchouk(unsigned n, unsigned k, unsigned i) {
  const std::uint64_t u = (std::uint64_t{1} << i) - 1;
  std::int64_t sum = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
    if (popcount(v) == static_cast<int>(k)) sum += (popcount(u & v) % 2) ? -1 : 1;
  return sum;
}

/// Is S a perfect coloring with (b,c) in the (S, complement) row order?
/// Counts neighbors by flipping coordinates of vertex strings.
struct NaiveColoring {
  bool perfect = false;
  int b = -1;
  int c = -1;
};

inline NaiveColoring naive_coloring(const VertexSet& s) {
  const unsigned n = s.dimension();
  NaiveColoring out;
  out.perfect = true;
  for (std::uint64_t x = 0; x < s.cube_size(); ++x) {
    const bool inside = in_set(s, x);
    int opposite = 0;
    for (unsigned j = 0; j < n; ++j) opposite += in_set(s, x ^ (std::uint64_t{1} << j)) != inside;
    int& slot = inside ? out.b : out.c;
    if (slot < 0)
      slot = opposite;
    else if (slot != opposite)
      out.perfect = false;
  }
  return out;
}

/// Correlation immune of order t by counting every face directly: for each y
/// with wt(y) = t and every z, |{x in S : [x,y] = [z,y]}|.
inline bool naive_ci(const VertexSet& s, unsigned t) {
  const std::uint64_t points = s.cube_size();
  for (std::uint64_t y = 0; y < points; ++y) {
    if (popcount(y) != static_cast<int>(t)) continue;
    std::int64_t first = -1;
    for (std::uint64_t z = 0; z < points; ++z) {
      if ((z & ~y) != 0) continue;
      std::int64_t count = 0;
      for (std::uint64_t x = 0; x < points; ++x) count += in_set(s, x) && (x & y) == z;
      if (first < 0) first = count;
      if (count != first) return false;
    }
  }
  return true;
}

/// Every subset of E^n (n <= 4), as masks 0 .. 2^(2^n) - 1.
inline void for_each_subset(unsigned n, const std::function<void(const VertexSet&)>& fn) {
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  for (std::uint64_t mask = 0; mask < count; ++mask) fn(VertexSet(n, {mask}));
}

}  // namespace hypercolor::testing
