#include <doctest.h>

#include <algorithm>

#include "dioph/errors.hpp"
#include "dioph/monomial_order.hpp"
#include "support.hpp"

using namespace dioph;

namespace {

using Gens = std::vector<ExponentVector>;

SaturatedSet sat(std::size_t r, Gens g) { return SaturatedSet(r, std::move(g)); }

bool in_threshold(const WeightVector& t, const Rational& x, const std::vector<std::uint32_t>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += t[i] * b[i];
  return s >= x;
}

WeightVector random_weights(std::mt19937_64& g, std::size_t r) {
  while (true) {
    std::vector<Rational> t;
    for (std::size_t i = 0; i < r; ++i) {
      t.push_back(testing::uniform(g, 0, 3) == 0 ? Rational(0) : testing::random_rational(g, 1, 5, 4));
    }
    if (std::any_of(t.begin(), t.end(), [](const Rational& v) { return v > 0; })) {
      return WeightVector(t);
    }
  }
}

std::uint32_t box_side(const WeightVector& t, const Rational& x) {
  Rational least = 0;
  for (const auto& v : t.entries()) {
    if (v > 0 && (least == 0 || v < least)) least = v;
  }
  return static_cast<std::uint32_t>(ceil_of(x / least).get_ui()) + 1;
}

SaturatedSet random_saturated(std::mt19937_64& g, std::size_t r) {
  Gens gens;
  const int count = testing::uniform(g, 1, 4);
  for (int k = 0; k < count; ++k) {
    std::vector<std::uint32_t> e(r);
    for (auto& v : e) v = testing::uniform(g, 0, 3);
    gens.emplace_back(e);
  }
  return sat(r, gens);
}

}  // namespace

TEST_CASE("threshold sets: worked examples") {
  CHECK(threshold_set(WeightVector({1}), Rational(5, 2)).generators() == Gens{{3}});
  CHECK(threshold_set(WeightVector({1, 1}), 2).generators() == Gens{{0, 2}, {1, 1}, {2, 0}});
  CHECK(threshold_set(WeightVector({1, 2}), 2).generators() == Gens{{0, 1}, {2, 0}});
  CHECK(threshold_set(WeightVector({1, 1, 1}), 1).generators() ==
        Gens{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(threshold_set(WeightVector({1, 0}), 2).generators() == Gens{{2, 0}});
  CHECK(threshold_set(WeightVector({1, 2}), 0) == SaturatedSet::whole(2));
}

TEST_CASE("threshold sets: errors") {
  CHECK_THROWS_AS(threshold_set(WeightVector({1}), -1), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({0, 0}), InvalidArgument);
  CHECK_THROWS_AS(WeightVector({1, -1}), InvalidArgument);
  CHECK_THROWS_AS(ExponentVector(std::vector<std::uint32_t>{}), InvalidArgument);
}

TEST_CASE("threshold sets match a box oracle") {
  auto g = testing::rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = testing::uniform(g, 1, 3);
    const auto t = random_weights(g, r);
    const Rational x = testing::random_rational(g, 0, 8, 3);
    const auto set = threshold_set(t, x);
    for (const auto& b : testing::box(r, box_side(t, x))) {
      CHECK(set.contains(ExponentVector(b)) == in_threshold(t, x, b));
    }
    // Saturation and minimality of the stored generators.
    for (const auto& gen : set.generators()) {
      for (std::size_t i = 0; i < r; ++i) CHECK(set.contains(gen.plus_unit(i)));
      for (std::size_t i = 0; i < r; ++i) {
        if (gen[i] == 0) continue;
        auto e = gen.entries();
        --e[i];
        CHECK_FALSE(set.contains(ExponentVector(e)));
      }
    }
  }
}

TEST_CASE("intersections of saturated sets") {
  CHECK(intersect_saturated(sat(2, {{1, 0}}), sat(2, {{0, 1}})).generators() == Gens{{1, 1}});
  CHECK(intersect_saturated(sat(2, {{2, 0}, {0, 1}}), sat(2, {{1, 0}})).generators() ==
        Gens{{1, 1}, {2, 0}});
  CHECK_THROWS_AS(intersect_saturated(sat(2, {{1, 0}}), sat(3, {{1, 0, 0}})), DimensionMismatch);

  auto g = testing::rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = testing::uniform(g, 1, 3);
    const auto a = random_saturated(g, r), b = random_saturated(g, r), c = random_saturated(g, r);
    const auto ab = intersect_saturated(a, b);
    CHECK(ab == intersect_saturated(b, a));
    CHECK(intersect_saturated(ab, c) == intersect_saturated(a, intersect_saturated(b, c)));
    CHECK(intersect_saturated(a, a) == a);
    for (const auto& e : testing::box(r, 7)) {
      const ExponentVector v(e);
      CHECK(ab.contains(v) == (a.contains(v) && b.contains(v)));
    }
  }
}

TEST_CASE("weight expansion") {
  const std::vector<std::uint32_t> eps{2, 1};
  CHECK(expand_weights(WeightVector({1, 2}), eps) == WeightVector({1, 1, 2}));
  const std::vector<std::uint32_t> ones{1, 1};
  CHECK(expand_weights(WeightVector({1, 2}), ones) == WeightVector({1, 2}));
  const std::vector<std::uint32_t> two{2};
  CHECK(expand_weights(WeightVector({3}), two) == WeightVector({3, 3}));
  const std::vector<std::uint32_t> bad{1, 0};
  CHECK_THROWS_AS(expand_weights(WeightVector({1, 2}), bad), InvalidArgument);
}

TEST_CASE("block splitting commutes with thresholds") {
  auto g = testing::rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = testing::uniform(g, 1, 3);
    std::vector<std::uint32_t> eps(r);
    for (auto& e : eps) e = testing::uniform(g, 1, 2);
    const auto t = random_weights(g, r);
    const Rational x = testing::random_rational(g, 0, 6, 3);
    const auto expanded = threshold_set(expand_weights(t, eps), x);
    const auto split = split_blocks(threshold_set(t, x), eps);
    CHECK(expanded == split);
  }
}

TEST_CASE("weight vector parsing and arithmetic") {
  const auto t = WeightVector::parse("1, 1/2,0");
  CHECK(t == WeightVector({1, Rational(1, 2), 0}));
  CHECK(t.dot(ExponentVector{2, 2, 5}) == 3);
  CHECK(t.scaled(2) == WeightVector({2, 1, 0}));
  CHECK_THROWS_AS(t.scaled(0), InvalidArgument);
  CHECK(t.blend(WeightVector({0, Rational(1, 2), 1}), Rational(1, 2)) ==
        WeightVector({Rational(1, 2), Rational(1, 2), Rational(1, 2)}));
  CHECK_THROWS_AS(WeightVector::parse("1,x"), ParseError);
}
