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

#include "opuc/kern.hpp"

namespace opuc::kern {

namespace {

void mul_cc_scalar(cplx* dst, const cplx* a, const cplx* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void mul_rc_scalar(cplx* dst, const double* r, const cplx* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = r[i] * a[i];
}

void mag2_scalar(double* dst, const cplx* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a[i].real();
    const double im = a[i].imag();
    dst[i] = re * re + im * im;
  }
}

void axpby_cc_scalar(cplx* dst, cplx alpha, const cplx* x, cplx beta, const cplx* y,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = alpha * x[i] + beta * y[i];
}

void recip_scale_scalar(double* dst, const double* src, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = s / src[i];
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{mul_cc_scalar, mul_rc_scalar, mag2_scalar, axpby_cc_scalar,
                       recip_scale_scalar, "scalar"};
  return ops;
}

}  // namespace opuc::kern
