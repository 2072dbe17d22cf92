#include "doctest.h"

#include "hypercolor/macwilliams.hpp"
#include "hypercolor/search.hpp"
#include "support.hpp"

using namespace hypercolor;

namespace {

VertexSet of(unsigned n, std::vector<std::string> vertices) { return make_set(n, vertices); }

std::vector<Rational> normalized(const DistanceDistribution& d) {
  std::vector<Rational> out;
  for (unsigned i = 0; i <= d.dim; ++i) out.push_back(d.normalized(i));
  return out;
}

std::vector<Rational> normalized(const DualDistribution& d) {
  std::vector<Rational> out;
  for (unsigned i = 0; i <= d.dim; ++i) out.push_back(d.normalized(i));
  return out;
}

std::vector<Rational> ints(std::vector<std::int64_t> values) {
  std::vector<Rational> out(values.begin(), values.end());
  return out;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(24, 12) == 2704156);
  CHECK(binomial(3, 4) == 0);
}

TEST_CASE("krawtchouk anchors") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto table = krawtchouk(n);
    for (unsigned i = 0; i <= n; ++i) {
      CHECK(table.at(0, i) == 1);
      CHECK(table.at(1, i) == static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(i));
    }
    for (unsigned k = 0; k <= n; ++k) CHECK(table.at(k, 0) == binomial(n, k));
  }
  // n = 4 row k = 2, from the character-sum oracle: (6, 0, -2, 0, 6).
  const auto t4 = krawtchouk(4);
  const std::vector<std::int64_t> row2{6, 0, -2, 0, 6};
  for (unsigned i = 0; i <= 4; ++i) {
    CHECK(testing::character_krawtchouk(4, 2, i) == row2[i]);
    CHECK(t4.at(2, i) == row2[i]);
  }
}

TEST_CASE("krawtchouk equals the character sum over weight-k vectors") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto table = krawtchouk(n);
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned i = 0; i <= n; ++i) REQUIRE(table.at(k, i) == testing::character_krawtchouk(n, k, i));
  }
}

TEST_CASE("krawtchouk orthogonality, n <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto table = krawtchouk(n);
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned l = 0; l <= n; ++l) {
        std::int64_t sum = 0;
        for (unsigned i = 0; i <= n; ++i) sum += binomial(n, i) * table.at(k, i) * table.at(l, i);
        REQUIRE(sum == (k == l ? (std::int64_t{1} << n) * binomial(n, k) : 0));
      }
  }
}

TEST_CASE("distance_distribution examples") {
  const auto hamming = construct(HammingConstruction{3});
  auto d = distance_distribution(hamming);
  CHECK(d.counts == testing::naive_distance_counts(hamming));
  CHECK(normalized(d) == ints({1, 0, 0, 7, 7, 0, 0, 1}));

  d = distance_distribution(of(4, {"0110"}));
  CHECK(normalized(d) == ints({1, 0, 0, 0, 0}));

  d = distance_distribution(of(2, {"00", "11"}));
  CHECK(d.counts == std::vector<std::int64_t>{2, 0, 2});
  CHECK(normalized(d) == ints({1, 0, 1}));

  CHECK_THROWS_AS(distance_distribution(VertexSet(3)), ConstantSetError);
}

TEST_CASE("pairwise and spectral distance routes agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 1 + trial % 10;
    const auto s = testing::random_set(rng, n, 0.4);
    if (s.empty()) continue;
    const auto pairwise = distance_distribution_pairwise(s);
    REQUIRE(pairwise.counts == distance_distribution_spectral(s).counts);
    if (n <= 7) REQUIRE(pairwise.counts == testing::naive_distance_counts(s));
    REQUIRE(pairwise.counts[0] == static_cast<std::int64_t>(s.size()));
  }
  // Above the pairwise limit the dispatcher takes the spectral route.
  const auto big = testing::random_set(rng, 14, 0.5);
  REQUIRE(big.size() > kPairwiseLimit);
  const auto d = distance_distribution(big);
  std::int64_t total = 0;
  for (auto c : d.counts) total += c;
  CHECK(total == static_cast<std::int64_t>(big.size() * big.size()));
  CHECK(d.counts == distance_distribution_pairwise(big).counts);
}

TEST_CASE("macwilliams examples") {
  const auto hamming = construct(HammingConstruction{3});
  const auto k7 = krawtchouk(7);
  const auto dual = macwilliams_from_distances(distance_distribution(hamming), k7);
  CHECK(normalized(dual) == ints({1, 0, 0, 0, 7, 0, 0, 0}));
  Rational total = 0;
  for (auto b : normalized(dual)) total += b;
  CHECK(total == Rational(128, 16));
  CHECK(macwilliams_from_spectrum(transform(hamming), hamming.size()) == dual);

  const auto diag = of(2, {"00", "11"});
  const auto d2 = macwilliams_from_distances(distance_distribution(diag), krawtchouk(2));
  CHECK(d2.duals == std::vector<std::int64_t>{4, 0, 4});
  CHECK(normalized(d2) == ints({1, 0, 1}));

  const auto parity = VertexSet::from_predicate(3, [](VertexIndex x) { return weight(x) % 2 == 0; });
  CHECK(macwilliams_from_spectrum(transform(parity), parity.size()).duals == std::vector<std::int64_t>{16, 0, 0, 16});

  const auto point = of(3, {"000"});
  const auto dp = macwilliams_from_spectrum(transform(point), 1);
  CHECK(dp.duals == std::vector<std::int64_t>{1, 3, 3, 1});

  CHECK_THROWS_AS(macwilliams_from_spectrum(transform(point), 0), ConstantSetError);
  CHECK_THROWS_AS(macwilliams_from_distances(distance_distribution(point), krawtchouk(4)), DimensionError);
}

TEST_CASE("inverse_macwilliams") {
  const auto k7 = krawtchouk(7);
  DualDistribution hamming_dual{7, 16, {256, 0, 0, 0, 7 * 256, 0, 0, 0}};
  const auto back = inverse_macwilliams(hamming_dual, 16, k7);
  CHECK(normalized(back) == ints({1, 0, 0, 7, 7, 0, 0, 1}));

  const auto point = of(5, {"10101"});
  const auto k5 = krawtchouk(5);
  const auto singleton = inverse_macwilliams(macwilliams_from_spectrum(transform(point), 1), 1, k5);
  CHECK(singleton.counts == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0});

  CHECK_THROWS_AS(inverse_macwilliams(hamming_dual, 16, k5), DimensionError);
  DualDistribution bogus{2, 1, {1, 0, 0}};
  CHECK_THROWS_AS(inverse_macwilliams(bogus, 1, krawtchouk(2)), InvalidArgument);
}

TEST_CASE("corollary identities, exhaustive n <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto table = krawtchouk(n);
    testing::for_each_subset(n, [&](const VertexSet& s) {
      if (s.empty()) return;
      const auto size = static_cast<std::int64_t>(s.size());
      const auto distances = distance_distribution(s);
      const auto dual = macwilliams_from_distances(distances, table);
      REQUIRE(dual == macwilliams_from_spectrum(transform(s), s.size()));
      REQUIRE(inverse_macwilliams(dual, s.size(), table).counts == distances.counts);

      std::int64_t sum = 0;
      for (auto d : dual.duals) {
        REQUIRE(d >= 0);
        sum += d;
      }
      REQUIRE(dual.duals[0] == size * size);
      REQUIRE(sum == static_cast<std::int64_t>(s.cube_size()) * size);
      if (!s.is_constant()) {
        const unsigned cor = cor_order(s);
        for (unsigned k = 1; k <= cor; ++k) REQUIRE(dual.duals[k] == 0);
      }
    });
  }
}

TEST_CASE("dual distribution is translation invariant") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = 2 + trial % 8;
    const auto s = testing::random_nonconstant(rng, n);
    const auto t = static_cast<VertexIndex>(rng() & (s.cube_size() - 1));
    const auto moved = translate(s, t);
    const auto table = krawtchouk(n);
    REQUIRE(macwilliams_from_spectrum(transform(s), s.size()) ==
            macwilliams_from_spectrum(transform(moved), moved.size()));
    REQUIRE(macwilliams_from_distances(distance_distribution(s), table) ==
            macwilliams_from_distances(distance_distribution(moved), table));
  }
}
