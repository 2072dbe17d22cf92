#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypercolor/cube.hpp"

namespace hypercolor {

/// Walsh/Fourier coefficients â(v) = Σ_u a(u)(-1)^<u,v>, indexed by idx(v).
struct Spectrum {
  unsigned dim = 0;
  std::vector<std::int64_t> coeffs;

  std::int64_t at(VertexIndex v) const { return coeffs[v]; }
};

/**
 * In-place unnormalized Walsh-Hadamard butterfly over log2(values.size())
 * rounds. Applying it twice multiplies every entry by values.size().
 * The size must be a power of two.
 */
void walsh_hadamard(std::span<std::int64_t> values);

/// Spectrum of χ^S. Requires n <= kMaxSpectrumDimension.
Spectrum transform(const VertexSet& s);

/// Function values recovered by the inverse transform.
struct FunctionTable {
  unsigned dim = 0;
  std::vector<Rational> values;
  /// True iff every value is 0 or 1; then `set` holds the support.
  bool is_boolean = false;
  std::optional<VertexSet> set;
};

FunctionTable inverse_transform(const Spectrum& sp);

/// Maximum correlation-immunity order: (least nonzero weight of v with
/// â(v) != 0) - 1. Throws ConstantSetError for S = ∅ or E^n.
unsigned cor_order(const VertexSet& s);
unsigned cor_order(const Spectrum& sp);

/// True iff every face obtained by fixing t coordinates meets S in the
/// same number of points. Decided by direct face counting.
bool cor_order_direct(const VertexSet& s, unsigned t);

}  // namespace hypercolor
