#include <cmath>
#include <cstdint>

#include "dioph/errors.hpp"
#include "dioph/kernels.hpp"

namespace dioph::kernels {

Modulus make_modulus(std::uint32_t p) {
  if (p < 2 || p >= kMaxModulus) throw InvalidArgument("modulus out of range");
  return Modulus{static_cast<double>(p), 1.0 / static_cast<double>(p)};
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

double mul_mod(double a, double b, const Modulus& m) {
  const double prod = a * b;
  const double q = std::floor(prod * m.inv);
  double r = prod - q * m.p;
  if (r < 0) r += m.p;
  if (r >= m.p) r -= m.p;
  return r;
}

double inv_mod(double a, const Modulus& m) {
  // Extended Euclid on exact integers.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m.p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InvalidArgument("residue not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m.p);
  return static_cast<double>(t);
}

void axpy_mod_scalar(std::span<double> dst, std::span<const double> src, double factor,
                     const Modulus& m) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    double d = dst[i] - mul_mod(factor, src[i], m);
    if (d < 0) d += m.p;
    dst[i] = d;
  }
}

void scale_mod_scalar(std::span<double> row, double factor, const Modulus& m) {
  for (double& x : row) x = mul_mod(factor, x, m);
}

}  // namespace dioph::kernels
