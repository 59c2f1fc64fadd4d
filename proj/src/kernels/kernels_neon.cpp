#include <arm_neon.h>

#include <cmath>

#include "etrans/kernels.hpp"

namespace etrans::kernels::neon {

// Two float64x2 accumulators per component hold lanes {0,1} and {2,3}.

ComplexSum dot(std::size_t n, const double* a_re, const double* a_im, const double* b_re,
               const double* b_im) {
  float64x2_t re01 = vdupq_n_f64(0.0), re23 = vdupq_n_f64(0.0);
  float64x2_t im01 = vdupq_n_f64(0.0), im23 = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    float64x2_t ar0 = vld1q_f64(a_re + k), ar1 = vld1q_f64(a_re + k + 2);
    float64x2_t ai0 = vld1q_f64(a_im + k), ai1 = vld1q_f64(a_im + k + 2);
    float64x2_t br0 = vld1q_f64(b_re + k), br1 = vld1q_f64(b_re + k + 2);
    float64x2_t bi0 = vld1q_f64(b_im + k), bi1 = vld1q_f64(b_im + k + 2);
    re01 = vfmaq_f64(re01, ar0, br0);
    re23 = vfmaq_f64(re23, ar1, br1);
    re01 = vfmsq_f64(re01, ai0, bi0);
    re23 = vfmsq_f64(re23, ai1, bi1);
    im01 = vfmaq_f64(im01, ar0, bi0);
    im23 = vfmaq_f64(im23, ar1, bi1);
    im01 = vfmaq_f64(im01, ai0, br0);
    im23 = vfmaq_f64(im23, ai1, br1);
  }
  double re[4], im[4];
  vst1q_f64(re, re01);
  vst1q_f64(re + 2, re23);
  vst1q_f64(im, im01);
  vst1q_f64(im + 2, im23);
  for (; k < n; ++k) {
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
  float64x2_t re01 = vdupq_n_f64(0.0), re23 = vdupq_n_f64(0.0);
  float64x2_t im01 = vdupq_n_f64(0.0), im23 = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    float64x2_t w0 = vld1q_f64(w + k), w1 = vld1q_f64(w + k + 2);
    float64x2_t tr0 = vmulq_f64(w0, vld1q_f64(a_re + k)), tr1 = vmulq_f64(w1, vld1q_f64(a_re + k + 2));
    float64x2_t ti0 = vmulq_f64(w0, vld1q_f64(a_im + k)), ti1 = vmulq_f64(w1, vld1q_f64(a_im + k + 2));
    float64x2_t br0 = vld1q_f64(b_re + k), br1 = vld1q_f64(b_re + k + 2);
    float64x2_t bi0 = vld1q_f64(b_im + k), bi1 = vld1q_f64(b_im + k + 2);
    re01 = vfmaq_f64(re01, tr0, br0);
    re23 = vfmaq_f64(re23, tr1, br1);
    re01 = vfmaq_f64(re01, ti0, bi0);
    re23 = vfmaq_f64(re23, ti1, bi1);
    im01 = vfmaq_f64(im01, ti0, br0);
    im23 = vfmaq_f64(im23, ti1, br1);
    im01 = vfmsq_f64(im01, tr0, bi0);
    im23 = vfmsq_f64(im23, tr1, bi1);
  }
  double re[4], im[4];
  vst1q_f64(re, re01);
  vst1q_f64(re + 2, re23);
  vst1q_f64(im, im01);
  vst1q_f64(im + 2, im23);
  for (; k < n; ++k) {
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

}  // namespace etrans::kernels::neon
