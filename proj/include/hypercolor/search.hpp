#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hypercolor/coloring.hpp"
#include "hypercolor/cube.hpp"

namespace hypercolor {

/// {x : <x,v> = eps}; perfect with b = c = wt(v).
struct AffineConstruction {
  Vertex normal;
  bool eps = false;
};

/// Hamming code of length n = 2^m - 1: the kernel of the parity-check matrix
/// whose i-th column is the binary expansion of i.
struct HammingConstruction {
  unsigned m = 0;
};

/// {x : x_coordinate = 0}; perfect with b = c = 1.
struct HalfCubeConstruction {
  unsigned dim = 0;
  unsigned coordinate = 1;
};

using Construction = std::variant<AffineConstruction, HammingConstruction, HalfCubeConstruction>;

/// Matrix the construction is guaranteed to have.
ParameterMatrix expected_matrix(const Construction& c);

/// Builds the set and certifies it against expected_matrix.
VertexSet construct(const Construction& c);

/// Representative of S under translations: the smallest mask among all S ⊕ t.
VertexSet canonical_translate(const VertexSet& s);

/// |S| forced by b|S| = c(2^n - |S|). Throws InfeasibleParameters when b, c
/// cannot belong to a non-constant perfect coloring (range, parity, balance).
std::uint64_t feasible_size(const ParameterMatrix& target);

struct SearchResult {
  unsigned n = 0;
  std::optional<ParameterMatrix> target;
  /// Certified sets in increasing mask order.
  std::vector<VertexSet> found;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
};

inline constexpr unsigned kMaxEnumerateDimension = 4;
inline constexpr unsigned kMaxBacktrackDimension = 16;

/// Every perfect coloring of E^n (n <= 4), optionally only those with
/// `target`, optionally one representative per translation class.
SearchResult enumerate_perfect(unsigned n, std::optional<ParameterMatrix> target, bool canonical = false);

struct BacktrackOptions {
  std::uint64_t budget = 10'000'000;
  /// Stop after this many sets; 0 means no limit.
  std::size_t max_results = 0;
  bool canonical = false;
};

/**
 * Depth-first colour assignment in vertex-index order with pruning on
 * neighbor counts and on the forced class sizes. `exhaustive` is set only
 * when the whole tree was explored without hitting the budget or the
 * result limit.
 */
SearchResult backtrack_search(const ParameterMatrix& target, BacktrackOptions options = {});

}  // namespace hypercolor
