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

#pragma once

#include <complex>
#include <cstddef>

namespace opuc::kern {

using cplx = std::complex<double>;

// Array kernels behind the grid-pointwise hot loops.  Two implementations
// exist: a scalar reference and an AVX2 variant (x86-64 builds only).  The
// active set is chosen once at startup from CPU capabilities; set
// OPUC_FORCE_SCALAR=1 to pin the reference path.  The scalar and SIMD
// variants are equivalence-tested against each other in the test suite.
struct Ops {
  // dst[i] = a[i] * b[i]
  void (*mul_cc)(cplx* dst, const cplx* a, const cplx* b, std::size_t n);
  // dst[i] = r[i] * a[i]
  void (*mul_rc)(cplx* dst, const double* r, const cplx* a, std::size_t n);
  // dst[i] = |a[i]|^2
  void (*mag2)(double* dst, const cplx* a, std::size_t n);
  // dst[i] = alpha*x[i] + beta*y[i]
  void (*axpby_cc)(cplx* dst, cplx alpha, const cplx* x, cplx beta, const cplx* y,
                   std::size_t n);
  // dst[i] = s / src[i]
  void (*recip_scale)(double* dst, const double* src, double s, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

/// AVX2 implementation; null when the build or the CPU lacks AVX2.
const Ops* avx2_ops();

/// Runtime-selected implementation.
const Ops& ops();

}  // namespace opuc::kern
