#include "hypercolor/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypercolor {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void certify(const VertexSet& s, const ParameterMatrix& expected) {
  const auto verdict = check_perfect(s);
  if (!verdict.is_perfect || *verdict.matrix != expected)
    throw std::logic_error("certification failed: set does not have the claimed parameter matrix");
}

bool is_canonical(const VertexSet& s) { return canonical_translate(s) == s; }

void sort_by_mask(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return compare_masks(a, b) < 0; });
}

}  // namespace

ParameterMatrix expected_matrix(const Construction& c) {
  return std::visit(
      overloaded{
          [](const AffineConstruction& a) { return ParameterMatrix{a.normal.dim, weight(a.normal.bits), weight(a.normal.bits)}; },
          [](const HammingConstruction& h) {
            const unsigned n = (1u << h.m) - 1;
            return ParameterMatrix{n, n, 1};
          },
          [](const HalfCubeConstruction& h) { return ParameterMatrix{h.dim, 1, 1}; },
      },
      c);
}

VertexSet construct(const Construction& c) {
  VertexSet s = std::visit(
      overloaded{
          [](const AffineConstruction& a) {
            check_dimension(a.normal.dim);
            if (a.normal.bits == 0) throw InvalidArgument("affine construction needs a nonzero normal vector");
            const unsigned eps = a.eps ? 1u : 0u;
            return VertexSet::from_predicate(a.normal.dim,
                                             [&](VertexIndex x) { return inner_product(x, a.normal.bits) == eps; });
          },
          [](const HammingConstruction& h) {
            if (h.m < 2 || (1u << h.m) - 1 > kMaxDimension)
              throw InvalidArgument("hamming construction needs 2 <= m with 2^m - 1 <= " +
                                    std::to_string(kMaxDimension));
            const unsigned n = (1u << h.m) - 1;
            // Syndrome: XOR of the positions i (1-based) with x_i = 1.
            return VertexSet::from_predicate(n, [n](VertexIndex x) {
              unsigned syndrome = 0;
              for (unsigned i = 1; i <= n; ++i)
                if (x & coordinate_bit(n, i)) syndrome ^= i;
              return syndrome == 0;
            });
          },
          [](const HalfCubeConstruction& h) {
            check_dimension(h.dim);
            if (h.coordinate < 1 || h.coordinate > h.dim)
              throw InvalidArgument("half-cube coordinate must be in [1, n]");
            const VertexIndex bit = coordinate_bit(h.dim, h.coordinate);
            return VertexSet::from_predicate(h.dim, [bit](VertexIndex x) { return (x & bit) == 0; });
          },
      },
      c);
  certify(s, expected_matrix(c));
  return s;
}

VertexSet canonical_translate(const VertexSet& s) {
  VertexSet best = s;
  const auto points = s.cube_size();
  for (std::uint64_t t = 1; t < points; ++t) {
    auto candidate = translate(s, static_cast<VertexIndex>(t));
    if (compare_masks(candidate, best) < 0) best = std::move(candidate);
  }
  return best;
}

std::uint64_t feasible_size(const ParameterMatrix& target) {
  const unsigned n = target.dim;
  if (n < 1 || n > kMaxDimension) throw InfeasibleParameters("dimension out of range");
  if (target.b > n || target.c > n) throw InfeasibleParameters("b and c must lie in [0, n]");
  if (target.b == 0 || target.c == 0)
    throw InfeasibleParameters("b = 0 or c = 0 forces a constant coloring");
  if ((target.b + target.c) % 2 != 0)
    throw InfeasibleParameters("b + c is odd; a perfect coloring has cor = (b+c)/2 - 1 integral");
  const std::uint64_t points = std::uint64_t{1} << n;
  const std::uint64_t scaled = std::uint64_t{target.c} * points;
  if (scaled % (target.b + target.c) != 0)
    throw InfeasibleParameters("b|S| = c(2^n - |S|) has no integral solution");
  return scaled / (target.b + target.c);
}

SearchResult enumerate_perfect(unsigned n, std::optional<ParameterMatrix> target, bool canonical) {
  if (n < 1 || n > kMaxEnumerateDimension)
    throw DimensionError("enumerate_perfect: exhaustive mode needs 1 <= n <= " +
                         std::to_string(kMaxEnumerateDimension));
  if (target && target->dim != n) throw DimensionError("enumerate_perfect: target dimension differs from n");

  SearchResult out;
  out.n = n;
  out.target = target;
  const std::uint64_t last = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  for (std::uint64_t mask = 1; mask < last; ++mask) {
    ++out.nodes;
    VertexSet s(n, {mask});
    const auto verdict = check_perfect(s);
    if (!verdict.is_perfect) continue;
    if (target && *verdict.matrix != *target) continue;
    if (canonical && !is_canonical(s)) continue;
    out.found.push_back(std::move(s));
  }
  out.exhaustive = true;
  return out;
}

SearchResult backtrack_search(const ParameterMatrix& target, BacktrackOptions options) {
  const unsigned n = target.dim;
  if (n < 1 || n > kMaxBacktrackDimension)
    throw DimensionError("backtrack_search: n must be in [1, " + std::to_string(kMaxBacktrackDimension) + "]");
  const std::uint64_t want_inside = feasible_size(target);

  const std::size_t points = std::size_t{1} << n;
  const std::uint64_t want_outside = points - want_inside;
  const unsigned need_in_s = n - target.b;  // S-neighbors of a vertex in S
  const unsigned need_out_s = target.c;     // S-neighbors of a vertex outside S
  const unsigned need_lo = std::min(need_in_s, need_out_s);
  const unsigned need_hi = std::max(need_in_s, need_out_s);

  std::vector<std::int8_t> color(points, -1);
  std::vector<unsigned> inside_nbrs(points, 0);
  std::vector<unsigned> decided_nbrs(points, 0);
  std::uint64_t inside = 0, outside = 0;

  auto assign = [&](std::size_t v, std::int8_t col) {
    color[v] = col;
    (col ? inside : outside) += 1;
    for (unsigned j = 0; j < n; ++j) {
      const auto w = v ^ (std::size_t{1} << j);
      ++decided_nbrs[w];
      inside_nbrs[w] += static_cast<unsigned>(col);
    }
  };
  auto unassign = [&](std::size_t v) {
    const auto col = color[v];
    (col ? inside : outside) -= 1;
    for (unsigned j = 0; j < n; ++j) {
      const auto w = v ^ (std::size_t{1} << j);
      --decided_nbrs[w];
      inside_nbrs[w] -= static_cast<unsigned>(col);
    }
    color[v] = -1;
  };
  auto vertex_ok = [&](std::size_t w) {
    const unsigned have = inside_nbrs[w];
    const unsigned reachable = have + (n - decided_nbrs[w]);
    if (color[w] < 0) {
      if (have > need_hi || reachable < need_lo) return false;
      return (have <= need_in_s && need_in_s <= reachable) || (have <= need_out_s && need_out_s <= reachable);
    }
    const unsigned need = color[w] ? need_in_s : need_out_s;
    return have <= need && need <= reachable;
  };
  auto consistent = [&](std::size_t v) {
    if (inside > want_inside || outside > want_outside) return false;
    if (!vertex_ok(v)) return false;
    for (unsigned j = 0; j < n; ++j)
      if (!vertex_ok(v ^ (std::size_t{1} << j))) return false;
    return true;
  };

  SearchResult out;
  out.n = n;
  out.target = target;

  // tried[v] counts the colours already attempted at depth v; S-membership first.
  constexpr std::int8_t kOrder[2] = {1, 0};
  std::vector<std::uint8_t> tried(points, 0);
  std::size_t pos = 0;
  bool stopped = false;
  while (true) {
    if (tried[pos] == 2) {
      tried[pos] = 0;
      if (pos == 0) break;
      --pos;
      unassign(pos);
      continue;
    }
    if (out.nodes >= options.budget) {
      stopped = true;
      break;
    }
    ++out.nodes;
    assign(pos, kOrder[tried[pos]++]);
    if (!consistent(pos)) {
      unassign(pos);
      continue;
    }
    if (++pos < points) continue;

    std::vector<std::uint64_t> words(VertexSet::word_count(n), 0);
    for (std::size_t v = 0; v < points; ++v)
      if (color[v] == 1) words[v >> 6] |= std::uint64_t{1} << (v & 63);
    VertexSet s(n, std::move(words));
    certify(s, target);
    if (!options.canonical || is_canonical(s)) out.found.push_back(std::move(s));

    --pos;
    unassign(pos);
    if (options.max_results != 0 && out.found.size() >= options.max_results) {
      stopped = true;
      break;
    }
  }

  sort_by_mask(out.found);
  out.exhaustive = !stopped;
  return out;
}

}  // namespace hypercolor
