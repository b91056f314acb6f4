#include <cstdlib>
#include <string>

#include "dioph/errors.hpp"
#include "dioph/kernels.hpp"

namespace dioph::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &axpy_mod_scalar, &scale_mod_scalar};
#ifdef DIOPH_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Isa::Avx2, &axpy_mod_avx2, &scale_mod_avx2};
#endif

bool force_scalar() {
  const char* env = std::getenv("DIOPH_FORCE_SCALAR");
  return env != nullptr && std::string(env) != "0" && std::string(env) != "";
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#ifdef DIOPH_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw Unsupported("kernel ISA not available: " + std::string(isa_name(isa)));
  }
#ifdef DIOPH_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [&]() -> const KernelTable& {
    if (!force_scalar() && isa_available(Isa::Avx2)) return kernels_for(Isa::Avx2);
    return kScalar;
  }();
  return table;
}

}  // namespace dioph::kernels
