#include "doctest.h"

#include "hypercolor/search.hpp"
#include "hypercolor/spectral.hpp"
#include "hypercolor/theorem.hpp"
#include "support.hpp"

using namespace hypercolor;

namespace {

VertexSet of(unsigned n, std::vector<std::string> vertices) { return make_set(n, vertices); }

/// Largest t with every t-fixed face hit equally, by direct face counting.
unsigned naive_cor(const VertexSet& s) {
  unsigned t = 0;
  while (t + 1 <= s.dimension() && testing::naive_ci(s, t + 1)) ++t;
  return t;
}

/// n - (nei + 2(cor+1)(1-ρ)) in rational arithmetic from naive quantities.
Rational naive_slack(const VertexSet& s) {
  const auto n = static_cast<std::int64_t>(s.dimension());
  const auto size = static_cast<std::int64_t>(s.size());
  const Rational rho(size, static_cast<std::int64_t>(s.cube_size()));
  const Rational nei(testing::naive_distance_counts(s)[1], size);
  const auto cor = static_cast<std::int64_t>(naive_cor(s));
  return Rational(n) - (nei + Rational(2 * (cor + 1)) * (Rational(1) - rho));
}

}  // namespace

TEST_CASE("verify examples") {
  auto r = verify(construct(HammingConstruction{3}));
  CHECK(r.size == 16);
  CHECK_FALSE(r.complemented);
  CHECK(r.rho == Rational(1, 8));
  CHECK(r.cor == 3);
  CHECK(r.nei == Rational(0));
  CHECK(r.lhs == Rational(7));
  CHECK(r.slack == Rational(0));
  CHECK(r.slack_scaled == 0);
  CHECK(r.is_perfect);
  CHECK(r.equality_form);
  CHECK(*r.matrix == ParameterMatrix{7, 7, 1});

  r = verify(of(3, {"000"}));
  CHECK(r.lhs == Rational(7, 4));
  CHECK(r.slack == Rational(5, 4));
  CHECK_FALSE(r.is_perfect);
  CHECK_FALSE(r.matrix.has_value());

  for (unsigned n = 1; n <= 10; ++n) {
    r = verify(construct(HalfCubeConstruction{n, 1}));
    CHECK(r.nei == Rational(n - 1));
    CHECK(r.lhs == Rational(n));
    CHECK(r.slack == Rational(0));
    CHECK(r.is_perfect);
    CHECK(*r.matrix == ParameterMatrix{n, 1, 1});
  }
}

TEST_CASE("verify complements dense sets") {
  const auto dense = complement(of(3, {"000"}));
  const auto r = verify(dense);
  CHECK(r.complemented);
  CHECK(r.size == 1);
  CHECK(r.slack == Rational(5, 4));
  CHECK_THROWS_AS(verify(dense, VerifyOptions{false}), DensityError);
  CHECK_THROWS_AS(verify(VertexSet(4)), ConstantSetError);
  CHECK_THROWS_AS(verify(complement(VertexSet(4))), ConstantSetError);
}

TEST_CASE("integer-cleared slack matches rational evaluation of naive quantities") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const unsigned n = 2 + trial % 6;
    auto s = testing::random_nonconstant(rng, n);
    if (2 * s.size() > s.cube_size()) s = complement(s);
    const auto r = verify(s);
    REQUIRE(r.slack == naive_slack(s));
    REQUIRE(r.slack * Rational(static_cast<std::int64_t>(s.size() * s.cube_size())) == Rational(r.slack_scaled));
  }
}

TEST_CASE("equality_form") {
  CHECK(equality_form(construct(HammingConstruction{3})));
  CHECK_FALSE(equality_form(of(3, {"000"})));
  for (unsigned n = 2; n <= 4; ++n) {
    const auto parity = VertexSet::from_predicate(n, [](VertexIndex x) { return weight(x) % 2 == 0; });
    CHECK(equality_form(parity) == testing::naive_coloring(parity).perfect);
  }
  CHECK_THROWS_AS(equality_form(VertexSet(2)), ConstantSetError);
}

TEST_CASE("prior bounds examples") {
  const auto hamming = construct(HammingConstruction{3});
  CHECK(fdf_bound(hamming));
  CHECK(bf_bound(hamming));
  CHECK(bf_tight(hamming));

  const auto parity = VertexSet::from_predicate(5, [](VertexIndex x) { return weight(x) % 2 == 0; });
  CHECK(cor_order(parity) == 4);
  CHECK(fdf_bound(parity));  // balanced: exempt although 3·5 > 10

  CHECK(bf_bound(of(3, {"000"})));
  CHECK_FALSE(bf_tight(of(3, {"000"})));

  CHECK(fdf_bound_holds(6, 8, 3));
  CHECK_FALSE(fdf_bound_holds(6, 8, 4));
  CHECK(bf_bound_holds(7, 16, 3));
  CHECK_FALSE(bf_bound_holds(7, 15, 3));

  CHECK_THROWS_AS(fdf_bound(VertexSet(2)), ConstantSetError);
  CHECK_THROWS_AS(bf_bound(VertexSet(2)), ConstantSetError);
}

TEST_CASE("code_rigidity") {
  CHECK(code_rigidity(construct(HammingConstruction{3}), 7));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = testing::random_set(rng, 7, 0.3);
    if (s.size() == 16) continue;
    CHECK(code_rigidity(s, 7));
  }
  CHECK_THROWS_AS(code_rigidity(VertexSet(4), 4), InvalidArgument);
  CHECK_THROWS_AS(code_rigidity(VertexSet(7), 3), DimensionError);

  // n = 3, H = {000, 111}: every S with cor = 1 and ρ = 1/4 is a perfect code.
  std::uint64_t matched = 0;
  testing::for_each_subset(3, [&](const VertexSet& s) {
    REQUIRE(code_rigidity(s, 3));
    if (s.size() == 2 && cor_order(s) == 1) {
      ++matched;
      REQUIRE(is_perfect_code(s));
    }
  });
  CHECK(matched == 4);  // the four antipodal pairs
}

TEST_CASE("theorem and bounds hold, randomized n = 5..10") {
  std::mt19937_64 rng(43);
  for (unsigned n = 5; n <= 10; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const auto s = testing::random_nonconstant(rng, n);
      const auto r = verify(s);
      REQUIRE(r.slack_scaled >= 0);
      REQUIRE((r.slack_scaled == 0) == testing::naive_coloring(s).perfect);
      REQUIRE(r.equality_form == (r.slack_scaled == 0));
      REQUIRE(fdf_bound(s));
      REQUIRE(bf_bound(s));
    }
  // Known equality cases at these sizes.
  for (auto s : {construct(HammingConstruction{3}), construct(AffineConstruction{parse_vertex("110110111"), false}),
                 construct(HalfCubeConstruction{10, 7})}) {
    const auto r = verify(s);
    REQUIRE(r.slack_scaled == 0);
    REQUIRE(r.is_perfect);
  }
}

TEST_CASE("sweep") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto summary = sweep(n);
    CHECK_FALSE(summary.violation_mask.has_value());
    CHECK(summary.subsets == (std::uint64_t{1} << (1u << n)) - 2);
    CHECK(summary.equality_cases == summary.perfect_colorings);
  }
  CHECK_THROWS_AS(sweep(5), DimensionError);
}
