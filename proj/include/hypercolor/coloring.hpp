#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hypercolor/cube.hpp"

namespace hypercolor {

/**
 * Parameters of a perfect 2-coloring {S, E^n \ S} with rows ordered
 * (S, complement):
 *
 *     ( n-b   b  )     b: neighbors outside S of every vertex of S
 *     (  c   n-c )     c: neighbors inside S of every vertex outside S
 *
 * In this orientation a perfect code S has matrix ((0,n),(1,n-1)),
 * nei(S) = n - b and ρ(S) = c / (b + c).
 */
struct ParameterMatrix {
  unsigned dim = 0;
  unsigned b = 0;
  unsigned c = 0;

  std::array<std::array<unsigned, 2>, 2> rows() const { return {{{dim - b, b}, {c, dim - c}}}; }

  friend bool operator==(const ParameterMatrix&, const ParameterMatrix&) = default;
};

/// A vertex whose count of opposite-class neighbors differs from the count
/// seen at the first vertex of its class (in index order).
struct Witness {
  Vertex vertex;
  bool in_set = false;
  unsigned observed = 0;
  unsigned expected = 0;
};

struct ColoringVerdict {
  bool is_perfect = false;
  std::optional<ParameterMatrix> matrix;
  std::optional<Witness> witness;
};

/// Decides perfectness by counting neighbors of every vertex. The witness,
/// if any, is the violating vertex of smallest index.
ColoringVerdict check_perfect(const VertexSet& s);

/// (b + c)/2 - 1. Throws InvalidArgument when b + c is odd or below 2.
unsigned cor_from_matrix(const ParameterMatrix& m);

/// Sorted weights {wt(v) : â(v) != 0}.
std::vector<unsigned> spectral_support(const VertexSet& s);

/// Perfect coloring with b = n, c = 1.
bool is_perfect_code(const VertexSet& s);

}  // namespace hypercolor
