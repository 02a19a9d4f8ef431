#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frinkmetric/errors.hpp"
#include "frinkmetric/kernel.hpp"
#include "frinkmetric/relation.hpp"
#include "oracles.hpp"

using namespace frinkmetric;

namespace {

BinaryRelation random_relation(std::mt19937_64& rng, Index n, double density) {
  std::bernoulli_distribution coin(density);
  BinaryRelation r(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (coin(rng)) r.set(i, j);
  return r;
}

oracle::Pairs to_pairs(const BinaryRelation& r) {
  oracle::Pairs out;
  for (Index i = 0; i < r.size(); ++i)
    for (Index j = 0; j < r.size(); ++j)
      if (r.test(i, j)) out.emplace(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace

TEST_CASE("level sets") {
  const auto k = newtonian_kernel(4, 1.0, 2.0);
  CHECK(level_set(k, 1.0, Comparison::at_least) == BinaryRelation::band(4, 1));
  CHECK(level_set(k, 1.0, Comparison::strictly_greater) == BinaryRelation::diagonal(4));
  CHECK(level_set(k, -1.0, Comparison::strictly_greater).is_full());
  CHECK(level_set(k, k.max_entry(), Comparison::strictly_greater).count() == 0);
  CHECK(level_set(k, 0.4, Comparison::at_least).is_symmetric());
}

TEST_CASE("composition examples") {
  const auto tri = BinaryRelation::band(4, 1);
  CHECK(compose(tri, tri) == BinaryRelation::band(4, 2));
  CHECK(to_pairs(compose(tri, tri)) == oracle::compose(to_pairs(tri), to_pairs(tri), 4));
  CHECK(compose(BinaryRelation::diagonal(4), tri) == tri);
  CHECK(compose(BinaryRelation::empty(4), tri).count() == 0);
  CHECK_THROWS_AS(compose(tri, BinaryRelation::band(5, 1)), DimensionMismatch);
}

TEST_CASE("power3 examples") {
  CHECK(power3(BinaryRelation::band(4, 1)).is_full());
  CHECK(power3(BinaryRelation::band(8, 1)) == BinaryRelation::band(8, 3));
  CHECK(power3(BinaryRelation::diagonal(6)) == BinaryRelation::diagonal(6));
}

TEST_CASE("is_full and covering index") {
  CHECK(is_full(BinaryRelation::full(5)));
  CHECK_FALSE(is_full(BinaryRelation::band(4, 1)));
  CHECK(is_full(power3(BinaryRelation::band(4, 1))));

  // Half-width after m compositions is m, so X x X needs m = n - 1.
  CHECK(covering_index(BinaryRelation::band(4, 1), 10) == 3);
  CHECK(covering_index(BinaryRelation::band(4, 1), 2) == std::nullopt);
  CHECK(covering_index(BinaryRelation::full(4), 10) == 1);
  CHECK(covering_index(BinaryRelation::diagonal(4), 100) == std::nullopt);
}

TEST_CASE("covering index agrees with brute-force iteration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Index n = 3 + trial % 9;
    auto u = random_relation(rng, n, 0.15);
    for (Index i = 0; i < n; ++i) u.set(i, i);
    const auto p = to_pairs(u);
    auto acc = p;
    std::optional<int> expected;
    for (int m = 1; m <= n; ++m) {
      if (static_cast<Index>(acc.size()) == n * n) {
        expected = m;
        break;
      }
      acc = oracle::compose(acc, p, static_cast<int>(n));
    }
    CHECK(covering_index(u, static_cast<int>(n)) == expected);
  }
}

TEST_CASE("compose matches the set definition on random relations") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 20;
    const double density = 0.05 + 0.9 * (trial % 7) / 7.0;
    const auto u = random_relation(rng, n, density);
    const auto v = random_relation(rng, n, density);
    CHECK(to_pairs(compose(u, v)) == oracle::compose(to_pairs(u), to_pairs(v), static_cast<int>(n)));
  }
}

TEST_CASE("compose crosses word boundaries") {
  std::mt19937_64 rng(99);
  for (const Index n : {63, 64, 65, 130}) {
    const auto u = random_relation(rng, n, 0.03);
    const auto v = random_relation(rng, n, 0.03);
    CHECK(to_pairs(compose(u, v)) == oracle::compose(to_pairs(u), to_pairs(v), static_cast<int>(n)));
  }
}

TEST_CASE("composition laws") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 15;
    const auto u = random_relation(rng, n, 0.3);
    const auto v = random_relation(rng, n, 0.3);
    const auto w = random_relation(rng, n, 0.3);
    CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));

    // monotone in both arguments
    auto u2 = u;
    auto v2 = v;
    u2.set(trial % n, (trial * 7) % n);
    v2.set((trial * 3) % n, trial % n);
    CHECK(compose(u, v).is_subset_of(compose(u2, v2)));

    // symmetric and reflexive => contained in its cube
    auto s = random_relation(rng, n, 0.2);
    for (Index i = 0; i < n; ++i) {
      s.set(i, i);
      for (Index j = 0; j < n; ++j)
        if (s.test(i, j)) s.set(j, i);
    }
    CHECK(s.is_symmetric());
    CHECK(s.is_subset_of(power3(s)));

    // anything containing the three main diagonals eventually covers
    auto banded = random_relation(rng, n, 0.1);
    for (Index i = 0; i < n; ++i) {
      banded.set(i, i);
      if (i + 1 < n) {
        banded.set(i, i + 1);
        banded.set(i + 1, i);
      }
    }
    const auto m = covering_index(banded, static_cast<int>(n));
    REQUIRE(m.has_value());
    CHECK(*m <= n);
  }
}

TEST_CASE("bit strings") {
  const auto b = BinaryRelation::band(3, 1);
  const std::vector<std::string> expected{"110", "111", "011"};
  CHECK(to_bit_strings(b) == expected);
  CHECK(from_bit_strings(expected) == b);
  CHECK(b.transpose() == b);
}
