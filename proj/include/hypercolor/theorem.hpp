#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hypercolor/coloring.hpp"
#include "hypercolor/cube.hpp"

namespace hypercolor {

/**
 * Exact evaluation of the neighbor/immunity/density inequality
 *
 *     nei(S) + 2(cor(S) + 1)(1 - ρ(S)) <= n     (for ρ(S) <= 1/2)
 *
 * with equality exactly for perfect colorings. All fields describe the
 * analyzed set, which is E^n \ S when `complemented` is set.
 */
struct TheoremReport {
  unsigned n = 0;
  std::uint64_t size = 0;
  bool complemented = false;
  Rational rho;
  unsigned cor = 0;
  Rational nei;
  Rational lhs;
  Rational slack;
  /// slack · |S| · 2^n; an integer by construction.
  std::int64_t slack_scaled = 0;
  bool equality_form = false;
  bool is_perfect = false;
  std::optional<ParameterMatrix> matrix;
  bool fdf_bound_ok = false;
  bool bf_bound_ok = false;
};

struct VerifyOptions {
  /// Analyze E^n \ S when ρ(S) > 1/2; otherwise such input is a DensityError.
  bool allow_complement = true;
};

TheoremReport verify(const VertexSet& s, VerifyOptions options = {});

/// nei(S) == ρn + (n - 2(cor+1))(1 - ρ), on the same (possibly complemented)
/// set that verify analyzes.
bool equality_form(const VertexSet& s);

/// Unbalanced sets satisfy cor <= 2n/3 - 1, i.e. 3(cor + 1) <= 2n.
inline bool fdf_bound_holds(unsigned n, std::uint64_t size, unsigned cor) {
  const auto points = std::uint64_t{1} << n;
  return 2 * size == points || 3 * (std::uint64_t{cor} + 1) <= 2 * std::uint64_t{n};
}

/// ρ >= 1 - n / (2(cor + 1)), cleared: 2(cor+1)|S| + n 2^n >= 2(cor+1) 2^n.
inline bool bf_bound_holds(unsigned n, std::uint64_t size, unsigned cor) {
  const auto points = std::int64_t{1} << n;
  const auto k = 2 * (std::int64_t{cor} + 1);
  return k * static_cast<std::int64_t>(size) + std::int64_t{n} * points >= k * points;
}

inline bool bf_bound_tight(unsigned n, std::uint64_t size, unsigned cor) {
  const auto points = std::int64_t{1} << n;
  const auto k = 2 * (std::int64_t{cor} + 1);
  return k * static_cast<std::int64_t>(size) + std::int64_t{n} * points == k * points;
}

bool fdf_bound(const VertexSet& s);
bool bf_bound(const VertexSet& s);
bool bf_tight(const VertexSet& s);

/**
 * Checks the perfect-code rigidity statement on one instance: if cor(S)
 * and ρ(S) equal those of a perfect code of length n = 2^m - 1, namely
 * (n-1)/2 and 2^-m, then S must itself be a perfect code. Returns whether
 * the implication holds for S (vacuously true when the premise fails).
 */
bool code_rigidity(const VertexSet& s, unsigned reference_n);

/// Outcome of checking every non-constant subset of E^n.
struct SweepSummary {
  unsigned n = 0;
  std::uint64_t subsets = 0;
  std::uint64_t equality_cases = 0;
  std::uint64_t perfect_colorings = 0;
  std::uint64_t bf_equality_cases = 0;
  /// First failing subset (smallest mask) and the failed check.
  std::optional<std::uint64_t> violation_mask;
  std::string violation;
  double seconds = 0.0;
};

inline constexpr unsigned kMaxSweepDimension = 4;

/// Exhaustive check of the inequality, the equality criterion, both prior
/// bounds and BF tightness => perfect, over all non-constant S ⊂ E^n, n <= 4.
SweepSummary sweep(unsigned n);

}  // namespace hypercolor
