// Copyright 2026 the opuc-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2 variants of the array kernels.  Multiplications use mul + addsub
// (not FMA) so each lane performs the same rounding sequence as the scalar
// reference; the equivalence tests compare the two paths exactly.

#include "opuc/kern.hpp"

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

namespace opuc::kern {

namespace {

// [a0r a0i a1r a1i] * [b0r b0i b1r b1i], interleaved complex product.
inline __m256d cmul2(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_unpackhi_pd(b, b);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a, b_re), _mm256_mul_pd(a_sw, b_im));
}

void mul_cc_avx2(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* pd = reinterpret_cast<double*>(dst);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(pd + 2 * i, cmul2(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void mul_rc_avx2(cplx* dst, const double* r, const cplx* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  double* pd = reinterpret_cast<double*>(dst);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vr = _mm256_loadu_pd(r + i);
    const __m256d lo = _mm256_permute4x64_pd(vr, _MM_SHUFFLE(1, 1, 0, 0));
    const __m256d hi = _mm256_permute4x64_pd(vr, _MM_SHUFFLE(3, 3, 2, 2));
    _mm256_storeu_pd(pd + 2 * i, _mm256_mul_pd(lo, _mm256_loadu_pd(pa + 2 * i)));
    _mm256_storeu_pd(pd + 2 * i + 4, _mm256_mul_pd(hi, _mm256_loadu_pd(pa + 2 * i + 4)));
  }
  for (; i < n; ++i) dst[i] = r[i] * a[i];
}

void mag2_avx2(double* dst, const cplx* a, std::size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v1 = _mm256_loadu_pd(pa + 2 * i);
    const __m256d v2 = _mm256_loadu_pd(pa + 2 * i + 4);
    const __m256d s1 = _mm256_mul_pd(v1, v1);
    const __m256d s2 = _mm256_mul_pd(v2, v2);
    const __m256d m1 = _mm256_add_pd(s1, _mm256_permute_pd(s1, 0x5));
    const __m256d m2 = _mm256_add_pd(s2, _mm256_permute_pd(s2, 0x5));
    // m1 = [q0 q0 q1 q1], m2 = [q2 q2 q3 q3] -> [q0 q1 q2 q3]
    const __m256d packed = _mm256_shuffle_pd(m1, m2, 0x0);
    _mm256_storeu_pd(dst + i, _mm256_permute4x64_pd(packed, _MM_SHUFFLE(3, 1, 2, 0)));
  }
  for (; i < n; ++i) {
    const double re = a[i].real(), im = a[i].imag();
    dst[i] = re * re + im * im;
  }
}

void axpby_cc_avx2(cplx* dst, cplx alpha, const cplx* x, cplx beta, const cplx* y,
                   std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const __m256d br = _mm256_set1_pd(beta.real());
  const __m256d bi = _mm256_set1_pd(beta.imag());
  const double* px = reinterpret_cast<const double*>(x);
  const double* py = reinterpret_cast<const double*>(y);
  double* pd = reinterpret_cast<double*>(dst);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d vy = _mm256_loadu_pd(py + 2 * i);
    const __m256d ax =
        _mm256_addsub_pd(_mm256_mul_pd(vx, ar), _mm256_mul_pd(_mm256_permute_pd(vx, 0x5), ai));
    const __m256d by =
        _mm256_addsub_pd(_mm256_mul_pd(vy, br), _mm256_mul_pd(_mm256_permute_pd(vy, 0x5), bi));
    _mm256_storeu_pd(pd + 2 * i, _mm256_add_pd(ax, by));
  }
  for (; i < n; ++i) dst[i] = alpha * x[i] + beta * y[i];
}

void recip_scale_avx2(double* dst, const double* src, double s, std::size_t n) {
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_div_pd(vs, _mm256_loadu_pd(src + i)));
  }
  for (; i < n; ++i) dst[i] = s / src[i];
}

}  // namespace

const Ops* avx2_ops_impl() {
  static const Ops ops{mul_cc_avx2, mul_rc_avx2, mag2_avx2, axpby_cc_avx2,
                       recip_scale_avx2, "avx2"};
  return &ops;
}

}  // namespace opuc::kern

#endif  // __AVX2__ && __x86_64__
