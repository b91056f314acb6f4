#include <doctest.h>

#include "dioph/errors.hpp"
#include "dioph/linalg.hpp"
#include "support.hpp"

using namespace dioph;
using linalg::RationalVector;

namespace {

// rows x cols matrix of rank <= k, built as a product with big entries.
std::vector<RationalVector> low_rank(std::mt19937_64& g, int rows, int cols, int k, int mag) {
  std::vector<RationalVector> a(rows, RationalVector(k)), b(k, RationalVector(cols));
  for (auto& r : a) {
    for (auto& c : r) c = testing::uniform(g, -mag, mag);
  }
  for (auto& r : b) {
    for (auto& c : r) c = testing::random_rational(g, -mag, mag, 7);
  }
  std::vector<RationalVector> out(rows, RationalVector(cols, Rational(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      for (int l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
    }
  }
  return out;
}

}  // namespace

TEST_CASE("multi-modular rank equals fraction-free rank") {
  auto g = testing::rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const int rows = testing::uniform(g, 1, 14), cols = testing::uniform(g, 1, 14);
    const int k = testing::uniform(g, 0, std::min(rows, cols));
    const int mag = trial % 3 == 0 ? 1000000 : 5;
    const auto m = low_rank(g, rows, cols, k, mag);
    CHECK(linalg::rank(m, cols) == linalg::rank_fraction_free(m, cols));
  }
}

TEST_CASE("rank of special shapes") {
  CHECK(linalg::rank(std::vector<RationalVector>{}, 4) == 0);
  std::vector<RationalVector> zero(3, RationalVector(5, Rational(0)));
  CHECK(linalg::rank(zero, 5) == 0);
  std::vector<RationalVector> dup{{1, 2}, {2, 4}, {-1, -2}};
  CHECK(linalg::rank(dup, 2) == 1);
  std::vector<RationalVector> units{{0, 1, 0}, {1, 0, 0}, {0, 1, 0}};
  CHECK(linalg::rank(units, 3) == 2);
  // Entries whose modular images collide with small primes.
  const Integer big = Integer(1) << 200;
  std::vector<RationalVector> near{{Rational(big), Rational(big + 1)}, {Rational(big - 1), Rational(big)}};
  CHECK(linalg::rank(near, 2) == 2);
  CHECK(linalg::rank_fraction_free(near, 2) == 2);
}

TEST_CASE("subspace intersection and sum satisfy the dimension identity") {
  auto g = testing::rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform(g, 1, 7);
    auto u = low_rank(g, testing::uniform(g, 0, n), n, testing::uniform(g, 0, n), 4);
    auto v = low_rank(g, testing::uniform(g, 0, n), n, testing::uniform(g, 0, n), 4);
    const auto U = linalg::Subspace::span(u, n);
    const auto V = linalg::Subspace::span(v, n);
    const auto S = U.sum(V);
    const auto I = U.intersect(V);
    CHECK(U.dim() + V.dim() == S.dim() + I.dim());
    CHECK(U.contains(I));
    CHECK(V.contains(I));
    CHECK(S.contains(U));
    CHECK(S.contains(V));
    const auto comp = U.complement_of(I);
    CHECK(comp.size() == U.dim() - I.dim());
    auto rebuilt = I;
    for (const auto& c : comp) CHECK(rebuilt.insert(c));
    CHECK(rebuilt == U);
  }
}

TEST_CASE("subspace rejects mismatched vectors") {
  linalg::Subspace s(3);
  CHECK_THROWS_AS(s.insert(RationalVector{1, 2}), DimensionMismatch);
  CHECK(s.insert(RationalVector{1, 2, 3}));
  CHECK_FALSE(s.insert(RationalVector{2, 4, 6}));
  CHECK(s.contains(RationalVector{Rational(1, 2), 1, Rational(3, 2)}));
  CHECK(linalg::Subspace::whole(3).dim() == 3);
}

TEST_CASE("primitive integer rows") {
  const auto r = linalg::primitive_integer_row({Rational(1, 2), Rational(-3, 4), 0});
  CHECK(r == linalg::IntegerVector{2, -3, 0});
  CHECK(linalg::primitive_integer_row({0, 0}) == linalg::IntegerVector{0, 0});
}
