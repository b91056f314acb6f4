// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "dioph/kernels.hpp"

namespace dioph::kernels {

namespace {

inline __m256d mul_mod4(__m256d a, __m256d b, __m256d p, __m256d inv) {
  const __m256d prod = _mm256_mul_pd(a, b);
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, inv));
  __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(q, p));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

}  // namespace

void axpy_mod_avx2(std::span<double> dst, std::span<const double> src, double factor,
                   const Modulus& m) {
  const __m256d p = _mm256_set1_pd(m.p);
  const __m256d inv = _mm256_set1_pd(m.inv);
  const __m256d f = _mm256_set1_pd(factor);
  const __m256d zero = _mm256_setzero_pd();
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_loadu_pd(src.data() + i);
    const __m256d d0 = _mm256_loadu_pd(dst.data() + i);
    __m256d d = _mm256_sub_pd(d0, mul_mod4(f, s, p, inv));
    d = _mm256_add_pd(d, _mm256_and_pd(_mm256_cmp_pd(d, zero, _CMP_LT_OQ), p));
    _mm256_storeu_pd(dst.data() + i, d);
  }
  if (i < n) axpy_mod_scalar(dst.subspan(i), src.subspan(i), factor, m);
}

void scale_mod_avx2(std::span<double> row, double factor, const Modulus& m) {
  const __m256d p = _mm256_set1_pd(m.p);
  const __m256d inv = _mm256_set1_pd(m.inv);
  const __m256d f = _mm256_set1_pd(factor);
  const std::size_t n = row.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(row.data() + i);
    _mm256_storeu_pd(row.data() + i, mul_mod4(f, x, p, inv));
  }
  if (i < n) scale_mod_scalar(row.subspan(i), factor, m);
}

}  // namespace dioph::kernels
