#include <immintrin.h>

#include <cmath>

#include "etrans/kernels.hpp"

namespace etrans::kernels::avx2 {

namespace {

inline ComplexSum finish(__m256d vre, __m256d vim, std::size_t done, std::size_t n,
                         const double* a_re, const double* a_im, const double* b_re,
                         const double* b_im, const double* w, bool conj) {
  alignas(32) double re[4], im[4];
  _mm256_store_pd(re, vre);
  _mm256_store_pd(im, vim);
  for (std::size_t k = done; k < n; ++k) {
    const std::size_t l = k & 3u;
    if (!conj) {
      re[l] = std::fma(a_re[k], b_re[k], re[l]);
      re[l] = std::fma(-a_im[k], b_im[k], re[l]);
      im[l] = std::fma(a_re[k], b_im[k], im[l]);
      im[l] = std::fma(a_im[k], b_re[k], im[l]);
    } else {
      const double tr = w[k] * a_re[k];
      const double ti = w[k] * a_im[k];
      re[l] = std::fma(tr, b_re[k], re[l]);
      re[l] = std::fma(ti, b_im[k], re[l]);
      im[l] = std::fma(ti, b_re[k], im[l]);
      im[l] = std::fma(-tr, b_im[k], im[l]);
    }
  }
  return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3])};
}

}  // namespace

ComplexSum dot(std::size_t n, const double* a_re, const double* a_im, const double* b_re,
               const double* b_im) {
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d ar = _mm256_loadu_pd(a_re + k);
    const __m256d ai = _mm256_loadu_pd(a_im + k);
    const __m256d br = _mm256_loadu_pd(b_re + k);
    const __m256d bi = _mm256_loadu_pd(b_im + k);
    re = _mm256_fmadd_pd(ar, br, re);
    re = _mm256_fnmadd_pd(ai, bi, re);
    im = _mm256_fmadd_pd(ar, bi, im);
    im = _mm256_fmadd_pd(ai, br, im);
  }
  return finish(re, im, k, n, a_re, a_im, b_re, b_im, nullptr, false);
}

ComplexSum weighted_dot_conj(std::size_t n, const double* w, const double* a_re,
                             const double* a_im, const double* b_re, const double* b_im) {
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d wk = _mm256_loadu_pd(w + k);
    const __m256d tr = _mm256_mul_pd(wk, _mm256_loadu_pd(a_re + k));
    const __m256d ti = _mm256_mul_pd(wk, _mm256_loadu_pd(a_im + k));
    const __m256d br = _mm256_loadu_pd(b_re + k);
    const __m256d bi = _mm256_loadu_pd(b_im + k);
    re = _mm256_fmadd_pd(tr, br, re);
    re = _mm256_fmadd_pd(ti, bi, re);
    im = _mm256_fmadd_pd(ti, br, im);
    im = _mm256_fnmadd_pd(tr, bi, im);
  }
  return finish(re, im, k, n, a_re, a_im, b_re, b_im, w, true);
}

}  // namespace etrans::kernels::avx2
