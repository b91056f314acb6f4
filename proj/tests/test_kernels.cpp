#include <doctest.h>

#include <vector>

#include "dioph/kernels.hpp"
#include "dioph/linalg.hpp"
#include "support.hpp"

using namespace dioph;
using namespace dioph::kernels;

namespace {

std::vector<double> residues(std::mt19937_64& g, std::size_t len, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<double> v(len);
  for (auto& x : v) x = d(g);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match plain integer arithmetic") {
  auto g = testing::rng(11);
  const std::uint32_t p = 67108859;  // largest prime below 2^26
  const Modulus m = make_modulus(p);
  for (int trial = 0; trial < 50; ++trial) {
    auto dst = residues(g, 37, p);
    const auto src = residues(g, 37, p);
    const double f = residues(g, 1, p)[0];
    std::vector<std::uint64_t> expect(dst.size());
    for (std::size_t i = 0; i < dst.size(); ++i) {
      const auto prod = static_cast<unsigned __int128>(f) * static_cast<std::uint64_t>(src[i]);
      const std::uint64_t r = static_cast<std::uint64_t>(prod % p);
      expect[i] = (static_cast<std::uint64_t>(dst[i]) + p - r) % p;
    }
    axpy_mod_scalar(dst, src, f, m);
    for (std::size_t i = 0; i < dst.size(); ++i) CHECK(dst[i] == static_cast<double>(expect[i]));
  }
}

TEST_CASE("vector kernels agree with scalar kernels bit for bit") {
  if (!isa_available(Isa::Avx2)) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  const auto& simd = kernels_for(Isa::Avx2);
  const auto& ref = kernels_for(Isa::Scalar);
  auto g = testing::rng(12);
  for (std::uint32_t p : {3u, 65521u, 16777213u, 67108859u}) {
    const Modulus m = make_modulus(p);
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 8u, 15u, 16u, 33u, 257u}) {
      auto a = residues(g, len, p);
      auto b = a;
      const auto src = residues(g, len, p);
      const double f = residues(g, 1, p)[0];
      ref.axpy(a, src, f, m);
      simd.axpy(b, src, f, m);
      CHECK(a == b);
      ref.scale(a, f, m);
      simd.scale(b, f, m);
      CHECK(a == b);
    }
  }
}

TEST_CASE("extreme residues do not overflow the fix-up path") {
  const std::uint32_t p = 67108859;
  const Modulus m = make_modulus(p);
  std::vector<double> dst(9, 0.0), src(9, p - 1.0);
  const double f = p - 1.0;
  auto check_with = [&](const KernelTable& k) {
    auto d = dst;
    k.axpy(d, src, f, m);
    for (double v : d) CHECK(v == static_cast<double>(p - 1));  // 0 - 1 mod p
  };
  check_with(kernels_for(Isa::Scalar));
  if (isa_available(Isa::Avx2)) check_with(kernels_for(Isa::Avx2));
}

TEST_CASE("rank is independent of the kernel table") {
  auto g = testing::rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = testing::uniform(g, 1, 12), cols = testing::uniform(g, 1, 12);
    std::vector<linalg::RationalVector> m(rows, linalg::RationalVector(cols));
    for (auto& r : m) {
      for (auto& c : r) c = testing::random_rational(g, -3, 3, 4);
    }
    const std::size_t scalar = linalg::rank(m, cols, kernels_for(Isa::Scalar));
    CHECK(scalar == linalg::rank_fraction_free(m, cols));
    if (isa_available(Isa::Avx2)) CHECK(linalg::rank(m, cols, kernels_for(Isa::Avx2)) == scalar);
  }
}

TEST_CASE("inverse modulo p") {
  const Modulus m = make_modulus(65521);
  for (double a : {1.0, 2.0, 12345.0, 65520.0}) CHECK(mul_mod(a, inv_mod(a, m), m) == 1.0);
  CHECK_THROWS(make_modulus(kMaxModulus));
}
