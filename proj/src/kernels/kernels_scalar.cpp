// Reference kernels. Compiled with -ffp-contract=off: every rounding step is
// spelled out so the vector variants can reproduce it exactly.

#include <cmath>

#include "etrans/kernels.hpp"

namespace etrans::kernels::scalar {

ComplexSum dot(std::size_t n, const double* a_re, const double* a_im, const double* b_re,
               const double* b_im) {
  double re[4] = {0.0, 0.0, 0.0, 0.0};
  double im[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t l = k & 3u;
    re[l] = std::fma(a_re[k], b_re[k], re[l]);
    re[l] = std::fma(-a_im[k], b_im[k], re[l]);
    im[l] = std::fma(a_re[k], b_im[k], im[l]);
    im[l] = std::fma(a_im[k], b_re[k], im[l]);
  }
  return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3])};
}

ComplexSum weighted_dot_conj(std::size_t n, const double* w, const double* a_re,
                             const double* a_im, const double* b_re, const double* b_im) {
  double re[4] = {0.0, 0.0, 0.0, 0.0};
  double im[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t l = k & 3u;
    const double tr = w[k] * a_re[k];
    const double ti = w[k] * a_im[k];
    re[l] = std::fma(tr, b_re[k], re[l]);
    re[l] = std::fma(ti, b_im[k], re[l]);
    im[l] = std::fma(ti, b_re[k], im[l]);
    im[l] = std::fma(-tr, b_im[k], im[l]);
  }
  return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3])};
}

}  // namespace etrans::kernels::scalar
