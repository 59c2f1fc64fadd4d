#include <cstdlib>
#include <string>

#include "etrans/kernels.hpp"
#include "etrans/types.hpp"

namespace etrans::kernels {

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(ETRANS_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(ETRANS_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable kScalar{Isa::scalar, &scalar::dot, &scalar::weighted_dot_conj};
#if defined(ETRANS_HAVE_AVX2)
const KernelTable kAvx2{Isa::avx2, &avx2::dot, &avx2::weighted_dot_conj};
#endif
#if defined(ETRANS_HAVE_NEON)
const KernelTable kNeon{Isa::neon, &neon::dot, &neon::weighted_dot_conj};
#endif

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa i : {Isa::scalar, Isa::avx2, Isa::neon})
    if (cpu_has(i)) out.push_back(i);
  return out;
}

const KernelTable& table(Isa isa) {
  if (!cpu_has(isa)) throw Unsupported("kernel variant '" + std::string(to_string(isa)) + "' is not available");
  switch (isa) {
    case Isa::scalar: return kScalar;
#if defined(ETRANS_HAVE_AVX2)
    case Isa::avx2: return kAvx2;
#endif
#if defined(ETRANS_HAVE_NEON)
    case Isa::neon: return kNeon;
#endif
    default: break;
  }
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& chosen = []() -> const KernelTable& {
    if (const char* env = std::getenv("ETRANS_SIMD")) {
      std::string v(env);
      for (Isa i : {Isa::scalar, Isa::avx2, Isa::neon})
        if (v == to_string(i) && cpu_has(i)) return table(i);
    }
    auto av = available();
    return table(av.back());
  }();
  return chosen;
}

}  // namespace etrans::kernels
