#include "hypercolor/spectral.hpp"

#include <bit>
#include <cassert>

namespace hypercolor {

void walsh_hadamard(std::span<std::int64_t> values) {
  const std::size_t size = values.size();
  assert(std::has_single_bit(size));
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      auto* lo = values.data() + block;
      auto* hi = lo + half;
      for (std::size_t i = 0; i < half; ++i) {
        const auto a = lo[i];
        const auto b = hi[i];
        lo[i] = a + b;
        hi[i] = a - b;
      }
    }
  }
}

Spectrum transform(const VertexSet& s) {
  const unsigned n = s.dimension();
  if (n > kMaxSpectrumDimension)
    throw DimensionError("transform: dimension " + std::to_string(n) + " exceeds spectrum cap " +
                         std::to_string(kMaxSpectrumDimension));
  // |â(v)| <= 2^n <= 2^20, far inside int64.
  Spectrum sp{n, std::vector<std::int64_t>(s.cube_size(), 0)};
  for (auto x : s.members()) sp.coeffs[x] = 1;
  walsh_hadamard(sp.coeffs);
  return sp;
}

FunctionTable inverse_transform(const Spectrum& sp) {
  const std::int64_t points = std::int64_t{1} << sp.dim;
  if (static_cast<std::int64_t>(sp.coeffs.size()) != points)
    throw DimensionError("inverse_transform: coefficient count is not 2^n");

  std::vector<std::int64_t> scaled = sp.coeffs;
  walsh_hadamard(scaled);

  FunctionTable out;
  out.dim = sp.dim;
  out.values.reserve(scaled.size());
  out.is_boolean = true;
  std::vector<VertexIndex> support;
  for (std::size_t u = 0; u < scaled.size(); ++u) {
    out.values.emplace_back(scaled[u], points);
    if (scaled[u] == points)
      support.push_back(static_cast<VertexIndex>(u));
    else if (scaled[u] != 0)
      out.is_boolean = false;
  }
  if (out.is_boolean) out.set = VertexSet::from_indices(sp.dim, support);
  return out;
}

unsigned cor_order(const Spectrum& sp) {
  unsigned least = sp.dim + 1;
  for (std::size_t v = 1; v < sp.coeffs.size(); ++v)
    if (sp.coeffs[v] != 0) least = std::min(least, weight(static_cast<VertexIndex>(v)));
  if (least > sp.dim) throw ConstantSetError("cor_order: function is constant");
  return least - 1;
}

unsigned cor_order(const VertexSet& s) {
  if (s.is_constant()) throw ConstantSetError("cor_order: S is empty or the whole cube");
  return cor_order(transform(s));
}

bool cor_order_direct(const VertexSet& s, unsigned t) {
  const unsigned n = s.dimension();
  if (t > n) return false;
  if (t == 0) return true;

  const auto members = s.members();
  std::vector<std::uint64_t> counts(s.cube_size(), 0);
  const VertexIndex full = static_cast<VertexIndex>(s.cube_size() - 1);

  // Walk every y of weight t (Gosper's hack) and count S on each of the
  // 2^t faces E_y(z), keyed by [z,y].
  for (VertexIndex y = (VertexIndex{1} << t) - 1; y <= full;) {
    for (auto x : members) ++counts[x & y];
    const std::uint64_t expected = counts[0];
    bool equal = true;
    for (VertexIndex z = y;; z = (z - 1) & y) {
      if (counts[z] != expected) equal = false;
      counts[z] = 0;
      if (z == 0) break;
    }
    if (!equal) return false;

    if (y == full) break;
    const VertexIndex low = y & (~y + 1);
    const VertexIndex ripple = y + low;
    y = (((ripple ^ y) >> 2) / low) | ripple;
    if (y > full) break;
  }
  return true;
}

}  // namespace hypercolor
