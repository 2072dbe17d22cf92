#include "hypercolor/coloring.hpp"

#include <set>

#include "hypercolor/spectral.hpp"

namespace hypercolor {

ColoringVerdict check_perfect(const VertexSet& s) {
  if (s.is_constant()) throw ConstantSetError("check_perfect: constant coloring");
  const unsigned n = s.dimension();
  std::optional<unsigned> reference[2];  // [0] outside S, [1] inside S

  const std::uint64_t points = s.cube_size();
  for (std::uint64_t i = 0; i < points; ++i) {
    const auto x = static_cast<VertexIndex>(i);
    const bool inside = s.contains(x);
    unsigned opposite = 0;
    for (unsigned j = 0; j < n; ++j) opposite += s.contains(x ^ (VertexIndex{1} << j)) != inside;

    auto& ref = reference[inside ? 1 : 0];
    if (!ref) {
      ref = opposite;
    } else if (*ref != opposite) {
      ColoringVerdict verdict;
      verdict.witness = Witness{Vertex{n, x}, inside, opposite, *ref};
      return verdict;
    }
  }

  ColoringVerdict verdict;
  verdict.is_perfect = true;
  verdict.matrix = ParameterMatrix{n, *reference[1], *reference[0]};
  return verdict;
}

unsigned cor_from_matrix(const ParameterMatrix& m) {
  const unsigned sum = m.b + m.c;
  if (sum % 2 != 0) throw InvalidArgument("cor_from_matrix: b + c is odd");
  if (sum < 2) throw InvalidArgument("cor_from_matrix: b + c must be at least 2");
  return sum / 2 - 1;
}

std::vector<unsigned> spectral_support(const VertexSet& s) {
  if (s.is_constant()) throw ConstantSetError("spectral_support: constant set");
  const auto sp = transform(s);
  std::set<unsigned> weights;
  for (std::size_t v = 0; v < sp.coeffs.size(); ++v)
    if (sp.coeffs[v] != 0) weights.insert(weight(static_cast<VertexIndex>(v)));
  return {weights.begin(), weights.end()};
}

bool is_perfect_code(const VertexSet& s) {
  if (s.is_constant()) return false;
  const auto verdict = check_perfect(s);
  return verdict.is_perfect && verdict.matrix->b == s.dimension() && verdict.matrix->c == 1;
}

}  // namespace hypercolor
