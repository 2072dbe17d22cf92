#include "hypercolor/cube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hypercolor {

void check_dimension(unsigned n) {
  if (n < 1 || n > kMaxDimension)
    throw DimensionError("cube dimension " + std::to_string(n) + " outside [1, " +
                         std::to_string(kMaxDimension) + "]");
}

Vertex parse_vertex(std::string_view text) {
  if (text.empty() || text.size() > kMaxDimension)
    throw ParseError("vertex string must have 1.." + std::to_string(kMaxDimension) + " characters");
  Vertex v{static_cast<unsigned>(text.size()), 0};
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw ParseError("vertex '" + std::string(text) + "' is not over {0,1}");
    v.bits = (v.bits << 1) | static_cast<VertexIndex>(ch - '0');
  }
  return v;
}

Vertex parse_vertex(std::string_view text, unsigned n) {
  if (text.size() != n)
    throw ParseError("vertex '" + std::string(text) + "' does not have " + std::to_string(n) +
                     " coordinates");
  return parse_vertex(text);
}

std::string to_string(const Vertex& v) {
  std::string out(v.dim, '0');
  for (unsigned i = 1; i <= v.dim; ++i)
    if (coordinate(v, i)) out[i - 1] = '1';
  return out;
}

VertexSet::VertexSet(unsigned n) : n_(n) {
  check_dimension(n);
  words_.assign(word_count(n), 0);
}

VertexSet::VertexSet(unsigned n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  check_dimension(n);
  if (words_.size() != word_count(n)) throw DimensionError("mask word count does not match dimension");
  if (n < 6 && (words_[0] >> (std::uint64_t{1} << n)) != 0)
    throw DimensionError("mask has bits set beyond 2^n");
  for (auto w : words_) size_ += static_cast<std::size_t>(std::popcount(w));
}

VertexSet VertexSet::from_indices(unsigned n, std::span<const VertexIndex> indices) {
  check_dimension(n);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (auto idx : indices) {
    if ((std::uint64_t{idx} >> n) != 0) throw DimensionError("vertex index out of range");
    words[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  }
  return VertexSet(n, std::move(words));
}

bool VertexSet::contains(const Vertex& v) const {
  if (v.dim != n_) throw DimensionError("vertex dimension does not match set dimension");
  return contains(v.bits);
}

std::vector<VertexIndex> VertexSet::members() const {
  std::vector<VertexIndex> out;
  out.reserve(size_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      auto low = static_cast<unsigned>(std::countr_zero(bits));
      out.push_back(static_cast<VertexIndex>(w * 64 + low));
      bits &= bits - 1;
    }
  }
  return out;
}

std::strong_ordering compare_masks(const VertexSet& a, const VertexSet& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("comparing masks of different dimension");
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = wa.size(); i-- > 0;)
    if (wa[i] != wb[i]) return wa[i] <=> wb[i];
  return std::strong_ordering::equal;
}

VertexSet make_set(unsigned n, std::span<const std::string> vertices) {
  check_dimension(n);
  std::vector<VertexIndex> indices;
  indices.reserve(vertices.size());
  for (const auto& text : vertices) indices.push_back(parse_vertex(text, n).bits);
  return VertexSet::from_indices(n, indices);
}

unsigned hamming_distance(const Vertex& x, const Vertex& y) {
  if (x.dim != y.dim) throw DimensionError("hamming_distance: dimension mismatch");
  return weight(x.bits ^ y.bits);
}

VertexSet ball(const Vertex& x) {
  std::vector<VertexIndex> indices{x.bits};
  for (unsigned j = 0; j < x.dim; ++j) indices.push_back(x.bits ^ (VertexIndex{1} << j));
  return VertexSet::from_indices(x.dim, indices);
}

VertexSet face_vertices(const Face& f) {
  const VertexIndex target = f.anchor & f.fixed;
  return VertexSet::from_predicate(f.dim, [&](VertexIndex x) { return (x & f.fixed) == target; });
}

CubeStats stats(const VertexSet& s) {
  if (s.empty()) throw ConstantSetError("stats: S is empty");
  const unsigned n = s.dimension();
  CubeStats out;
  out.size = s.size();
  out.density = Rational(static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(s.cube_size()));
  for (auto x : s.members()) {
    std::uint64_t inside = 1;
    for (unsigned j = 0; j < n; ++j) inside += s.contains(x ^ (VertexIndex{1} << j));
    out.neighbor_sum += inside;
  }
  out.nei = Rational(static_cast<std::int64_t>(out.neighbor_sum), static_cast<std::int64_t>(out.size)) - 1;
  return out;
}

VertexSet complement(const VertexSet& s) {
  std::vector<std::uint64_t> words(s.words().begin(), s.words().end());
  for (auto& w : words) w = ~w;
  if (s.dimension() < 6) words[0] &= (std::uint64_t{1} << s.cube_size()) - 1;
  return VertexSet(s.dimension(), std::move(words));
}

VertexSet translate(const VertexSet& s, VertexIndex t) {
  auto members = s.members();
  for (auto& x : members) x ^= t;
  return VertexSet::from_indices(s.dimension(), members);
}

VertexSet permute_coordinates(const VertexSet& s, std::span<const unsigned> perm) {
  const unsigned n = s.dimension();
  if (perm.size() != n) throw DimensionError("permutation length does not match dimension");
  std::vector<unsigned> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  for (unsigned i = 0; i < n; ++i)
    if (sorted[i] != i + 1) throw InvalidArgument("not a permutation of 1..n");

  auto members = s.members();
  for (auto& x : members) {
    VertexIndex image = 0;
    for (unsigned i = 1; i <= n; ++i)
      if (x & coordinate_bit(n, i)) image |= coordinate_bit(n, perm[i - 1]);
    x = image;
  }
  return VertexSet::from_indices(n, members);
}

}  // namespace hypercolor
