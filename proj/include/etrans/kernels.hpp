#pragma once

// Dense complex reduction kernels used by the discrete transforms. Complex
// vectors are passed as split real/imaginary arrays.
//
// Every variant accumulates into four interleaved lanes (element k goes to
// lane k % 4) with fused multiply-adds and reduces them as
// ((l0 + l1) + (l2 + l3)), so the scalar reference and the vector variants
// return bit-identical results.

#include <cstddef>
#include <string_view>
#include <vector>

namespace etrans::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

struct ComplexSum {
  double re = 0.0;
  double im = 0.0;
};

/// sum_k a_k * b_k
using DotFn = ComplexSum (*)(std::size_t n, const double* a_re, const double* a_im,
                             const double* b_re, const double* b_im);
/// sum_k w_k * a_k * conj(b_k), with w real
using WeightedDotConjFn = ComplexSum (*)(std::size_t n, const double* w, const double* a_re,
                                         const double* a_im, const double* b_re,
                                         const double* b_im);

struct KernelTable {
  Isa isa = Isa::scalar;
  DotFn dot = nullptr;
  WeightedDotConjFn weighted_dot_conj = nullptr;
};

/// Variants compiled in and supported by the running CPU, scalar first.
std::vector<Isa> available();

/// Throws etrans::Unsupported if the variant is not available.
const KernelTable& table(Isa isa);

/// Best available variant, unless ETRANS_SIMD=scalar|avx2|neon overrides it.
const KernelTable& active();

namespace scalar {
ComplexSum dot(std::size_t n, const double* a_re, const double* a_im, const double* b_re,
               const double* b_im);
ComplexSum weighted_dot_conj(std::size_t n, const double* w, const double* a_re,
                             const double* a_im, const double* b_re, const double* b_im);
}  // namespace scalar

#if defined(ETRANS_HAVE_AVX2)
namespace avx2 {
ComplexSum dot(std::size_t n, const double* a_re, const double* a_im, const double* b_re,
               const double* b_im);
ComplexSum weighted_dot_conj(std::size_t n, const double* w, const double* a_re,
                             const double* a_im, const double* b_re, const double* b_im);
}  // namespace avx2
#endif

#if defined(ETRANS_HAVE_NEON)
namespace neon {
ComplexSum dot(std::size_t n, const double* a_re, const double* a_im, const double* b_re,
               const double* b_im);
ComplexSum weighted_dot_conj(std::size_t n, const double* w, const double* a_re,
                             const double* a_im, const double* b_re, const double* b_im);
}  // namespace neon
#endif

}  // namespace etrans::kernels
