#pragma once

#include <cstdint>
#include <vector>

#include "hypercolor/cube.hpp"
#include "hypercolor/spectral.hpp"

namespace hypercolor {

/// Binomial coefficient C(n, k); zero when k > n.
std::int64_t binomial(unsigned n, unsigned k);

/// Binary Krawtchouk values P_k(i) = Σ_j (-1)^j C(i,j) C(n-i,k-j), 0 <= k,i <= n.
struct KrawtchoukTable {
  unsigned dim = 0;
  std::vector<std::int64_t> values;  // row-major, (n+1) x (n+1)

  std::int64_t at(unsigned k, unsigned i) const { return values[k * (dim + 1) + i]; }
};

KrawtchoukTable krawtchouk(unsigned n);

/**
 * Distance distribution of S. counts[i] is the number of ordered pairs
 * (u,v) in S×S with d(u,v) = i; B_i = counts[i] / |S|.
 */
struct DistanceDistribution {
  unsigned dim = 0;
  std::uint64_t size = 0;
  std::vector<std::int64_t> counts;

  Rational normalized(unsigned i) const {
    return Rational(counts[i], static_cast<std::int64_t>(size));
  }
};

/**
 * MacWilliams dual of S carried as D_k = Σ_{wt(v)=k} â(v)^2; the normalized
 * value is B'_k = D_k / |S|^2.
 */
struct DualDistribution {
  unsigned dim = 0;
  std::uint64_t size = 0;
  std::vector<std::int64_t> duals;

  Rational normalized(unsigned k) const {
    const auto s = static_cast<std::int64_t>(size);
    return Rational(duals[k], s * s);
  }

  friend bool operator==(const DualDistribution&, const DualDistribution&) = default;
};

/// Pairwise scan when |S| <= kPairwiseLimit, spectral route otherwise.
DistanceDistribution distance_distribution(const VertexSet& s);

inline constexpr std::size_t kPairwiseLimit = std::size_t{1} << 12;

/// O(|S|^2) scan over ordered pairs.
DistanceDistribution distance_distribution_pairwise(const VertexSet& s);

/// Spectrum -> D_k -> inverse MacWilliams. Requires n <= kMaxSpectrumDimension.
DistanceDistribution distance_distribution_spectral(const VertexSet& s);

/// D_k = Σ_i N_i P_k(i).
DualDistribution macwilliams_from_distances(const DistanceDistribution& d, const KrawtchoukTable& k);

/// D_k = Σ_{wt(v)=k} â(v)^2.
DualDistribution macwilliams_from_spectrum(const Spectrum& sp, std::uint64_t size);

/// N_k = 2^-n Σ_i D_i P_k(i). Throws InvalidArgument if the input is not
/// the dual of an integral distribution.
DistanceDistribution inverse_macwilliams(const DualDistribution& d, std::uint64_t size,
                                         const KrawtchoukTable& k);

}  // namespace hypercolor
