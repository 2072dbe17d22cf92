#include "hypercolor/macwilliams.hpp"

#include <limits>

namespace hypercolor {

namespace {

__extension__ using Wide = __int128;

std::int64_t narrow(Wide value, const char* what) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    throw DimensionError(std::string(what) + ": value exceeds 64-bit range");
  return static_cast<std::int64_t>(value);
}

void require_same_dimension(unsigned a, unsigned b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

}  // namespace

std::int64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (unsigned j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

KrawtchoukTable krawtchouk(unsigned n) {
  if (n < 1) throw DimensionError("krawtchouk: n must be at least 1");
  KrawtchoukTable table{n, std::vector<std::int64_t>((n + 1) * (n + 1), 0)};
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned i = 0; i <= n; ++i) {
      std::int64_t sum = 0;
      for (unsigned j = 0; j <= std::min(i, k); ++j) {
        const auto term = binomial(i, j) * binomial(n - i, k - j);
        sum += (j % 2 == 0) ? term : -term;
      }
      table.values[k * (n + 1) + i] = sum;
    }
  }
  return table;
}

DistanceDistribution distance_distribution_pairwise(const VertexSet& s) {
  if (s.empty()) throw ConstantSetError("distance_distribution: S is empty");
  DistanceDistribution out{s.dimension(), s.size(), std::vector<std::int64_t>(s.dimension() + 1, 0)};
  const auto members = s.members();
  out.counts[0] = static_cast<std::int64_t>(members.size());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) out.counts[weight(members[a] ^ members[b])] += 2;
  return out;
}

DistanceDistribution distance_distribution_spectral(const VertexSet& s) {
  if (s.empty()) throw ConstantSetError("distance_distribution: S is empty");
  const auto dual = macwilliams_from_spectrum(transform(s), s.size());
  return inverse_macwilliams(dual, s.size(), krawtchouk(s.dimension()));
}

DistanceDistribution distance_distribution(const VertexSet& s) {
  if (s.size() <= kPairwiseLimit || s.dimension() > kMaxSpectrumDimension)
    return distance_distribution_pairwise(s);
  return distance_distribution_spectral(s);
}

DualDistribution macwilliams_from_distances(const DistanceDistribution& d, const KrawtchoukTable& k) {
  require_same_dimension(d.dim, k.dim, "macwilliams_from_distances");
  DualDistribution out{d.dim, d.size, std::vector<std::int64_t>(d.dim + 1, 0)};
  for (unsigned kk = 0; kk <= d.dim; ++kk) {
    Wide sum = 0;
    for (unsigned i = 0; i <= d.dim; ++i) sum += static_cast<Wide>(d.counts[i]) * k.at(kk, i);
    out.duals[kk] = narrow(sum, "macwilliams_from_distances");
  }
  return out;
}

DualDistribution macwilliams_from_spectrum(const Spectrum& sp, std::uint64_t size) {
  if (size == 0) throw ConstantSetError("macwilliams_from_spectrum: |S| = 0");
  DualDistribution out{sp.dim, size, std::vector<std::int64_t>(sp.dim + 1, 0)};
  for (std::size_t v = 0; v < sp.coeffs.size(); ++v)
    out.duals[weight(static_cast<VertexIndex>(v))] += sp.coeffs[v] * sp.coeffs[v];
  return out;
}

DistanceDistribution inverse_macwilliams(const DualDistribution& d, std::uint64_t size,
                                         const KrawtchoukTable& k) {
  require_same_dimension(d.dim, k.dim, "inverse_macwilliams");
  if (size == 0) throw ConstantSetError("inverse_macwilliams: |S| = 0");
  const Wide points = Wide{1} << d.dim;
  DistanceDistribution out{d.dim, size, std::vector<std::int64_t>(d.dim + 1, 0)};
  for (unsigned kk = 0; kk <= d.dim; ++kk) {
    Wide sum = 0;
    for (unsigned i = 0; i <= d.dim; ++i) sum += static_cast<Wide>(d.duals[i]) * k.at(kk, i);
    if (sum % points != 0) throw InvalidArgument("inverse_macwilliams: input is not an integral dual");
    out.counts[kk] = narrow(sum / points, "inverse_macwilliams");
  }
  return out;
}

}  // namespace hypercolor
