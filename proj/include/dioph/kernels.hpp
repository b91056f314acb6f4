#pragma once

// Modular row-update kernels used by the multi-modular rank routine.
//
// Residues are stored as doubles holding integers in [0, p) with p < 2^26, so
// every product of two residues is an exact double (< 2^52). The scalar
// kernels are the reference; vector variants must agree bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace dioph::kernels {

/// Largest admissible modulus (exclusive).
inline constexpr std::uint32_t kMaxModulus = 1u << 26;

struct Modulus {
  double p = 0.0;
  double inv = 0.0;  // 1/p, rounded
};

Modulus make_modulus(std::uint32_t p);

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// dst[i] <- (dst[i] - factor * src[i]) mod p. Spans have equal length.
using AxpyFn = void (*)(std::span<double> dst, std::span<const double> src, double factor,
                        const Modulus& m);
/// row[i] <- (factor * row[i]) mod p.
using ScaleFn = void (*)(std::span<double> row, double factor, const Modulus& m);

struct KernelTable {
  Isa isa;
  AxpyFn axpy;
  ScaleFn scale;
};

void axpy_mod_scalar(std::span<double> dst, std::span<const double> src, double factor,
                     const Modulus& m);
void scale_mod_scalar(std::span<double> row, double factor, const Modulus& m);

#if defined(__x86_64__) || defined(_M_X64)
#define DIOPH_HAVE_AVX2_KERNELS 1
void axpy_mod_avx2(std::span<double> dst, std::span<const double> src, double factor,
                   const Modulus& m);
void scale_mod_avx2(std::span<double> row, double factor, const Modulus& m);
#endif

/// True when the ISA was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Table for a specific ISA; throws Unsupported when unavailable.
const KernelTable& kernels_for(Isa isa);

/// Best available table. DIOPH_FORCE_SCALAR=1 in the environment pins the
/// scalar kernels.
const KernelTable& active_kernels();

/// Scalar helpers shared by callers.
double mul_mod(double a, double b, const Modulus& m);
double inv_mod(double a, const Modulus& m);

}  // namespace dioph::kernels
