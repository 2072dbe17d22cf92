#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercolor/errors.hpp"
#include "hypercolor/rational.hpp"

namespace hypercolor {

/// Largest cube dimension a VertexSet can hold (2^24 membership bits).
inline constexpr unsigned kMaxDimension = 24;

/// Largest dimension for which a full spectrum is materialized.
inline constexpr unsigned kMaxSpectrumDimension = 20;

using VertexIndex = std::uint32_t;

/**
 * A vertex u of E^n stored by its index idx(u). Coordinate 1 is the most
 * significant bit, so the string "0110" has index 6 in E^4.
 */
struct Vertex {
  unsigned dim = 0;
  VertexIndex bits = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Parses a string over {0,1}; its length is the dimension.
Vertex parse_vertex(std::string_view text);

/// Parses a string over {0,1} that must have exactly `n` characters.
Vertex parse_vertex(std::string_view text, unsigned n);

std::string to_string(const Vertex& v);

/// Value of the 1-based coordinate i of v.
inline unsigned coordinate(const Vertex& v, unsigned i) {
  return (v.bits >> (v.dim - i)) & 1u;
}

/// Index bit carrying the 1-based coordinate i in dimension n.
inline VertexIndex coordinate_bit(unsigned n, unsigned i) {
  return VertexIndex{1} << (n - i);
}

inline unsigned weight(VertexIndex v) { return static_cast<unsigned>(__builtin_popcount(v)); }

/// Parity of the inner product <u,v> (0 or 1).
inline unsigned inner_product(VertexIndex u, VertexIndex v) { return weight(u & v) & 1u; }

void check_dimension(unsigned n);

/**
 * A subset S of E^n as a 2^n-bit membership mask: bit idx(u) is set iff
 * u is in S. Immutable once built.
 */
class VertexSet {
 public:
  /// The empty subset of E^n.
  explicit VertexSet(unsigned n);

  /// Membership words, little-endian: bit i of the whole mask lives in
  /// words[i / 64] at position i % 64. Bits at positions >= 2^n must be clear.
  VertexSet(unsigned n, std::vector<std::uint64_t> words);

  static VertexSet from_indices(unsigned n, std::span<const VertexIndex> indices);

  /// Every vertex u with pred(idx(u)) true.
  template <class Pred>
  static VertexSet from_predicate(unsigned n, Pred&& pred) {
    check_dimension(n);
    std::vector<std::uint64_t> words(word_count(n), 0);
    const std::uint64_t points = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < points; ++i)
      if (pred(static_cast<VertexIndex>(i))) words[i >> 6] |= std::uint64_t{1} << (i & 63);
    return VertexSet(n, std::move(words));
  }

  unsigned dimension() const { return n_; }
  std::size_t size() const { return size_; }
  std::uint64_t cube_size() const { return std::uint64_t{1} << n_; }
  bool empty() const { return size_ == 0; }
  bool is_constant() const { return size_ == 0 || size_ == cube_size(); }

  bool contains(VertexIndex idx) const { return (words_[idx >> 6] >> (idx & 63)) & 1u; }
  bool contains(const Vertex& v) const;

  /// Member indices in increasing order.
  std::vector<VertexIndex> members() const;

  std::span<const std::uint64_t> words() const { return words_; }

  static std::size_t word_count(unsigned n) { return n >= 6 ? (std::size_t{1} << (n - 6)) : 1; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Orders masks of equal dimension as 2^n-bit integers (bit i has weight 2^i).
std::strong_ordering compare_masks(const VertexSet& a, const VertexSet& b);

/// Builds S from vertex strings; duplicates collapse.
VertexSet make_set(unsigned n, std::span<const std::string> vertices);

unsigned hamming_distance(const Vertex& x, const Vertex& y);

/// Unit ball B(x): x and its n neighbors.
VertexSet ball(const Vertex& x);

/**
 * The face E^n_y(z) = {x : [x,y] = [z,y]}. `fixed` is y (the selected
 * coordinates), `anchor` is z; bits of z outside y are ignored.
 */
struct Face {
  unsigned dim = 0;
  VertexIndex fixed = 0;
  VertexIndex anchor = 0;
};

VertexSet face_vertices(const Face& f);

struct CubeStats {
  std::size_t size = 0;
  Rational density;
  /// Sum over x in S of |B(x) ∩ S|.
  std::uint64_t neighbor_sum = 0;
  Rational nei;
};

CubeStats stats(const VertexSet& s);

VertexSet complement(const VertexSet& s);

/// S ⊕ t = {x ⊕ t : x in S}.
VertexSet translate(const VertexSet& s, VertexIndex t);

/// Image of S under the coordinate map sending coordinate i to perm[i-1]
/// (both 1-based). `perm` must be a permutation of 1..n.
VertexSet permute_coordinates(const VertexSet& s, std::span<const unsigned> perm);

}  // namespace hypercolor
