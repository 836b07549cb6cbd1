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
#include <span>
#include <vector>

namespace opuc::fft {

using cplx = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n);

/// In-place radix-2 transform, unnormalized.
/// sign = -1: X[m] = sum_k x[k] exp(-2*pi*i*k*m/N)   (forward DFT)
/// sign = +1: X[m] = sum_k x[k] exp(+2*pi*i*k*m/N)   (inverse, caller divides by N)
/// Requires a.size() to be a power of two.
void transform(std::span<cplx> a, int sign);

/// Naive O(N^2) DFT with the same convention; test oracle.
std::vector<cplx> dft_reference(std::span<const cplx> a, int sign);

}  // namespace opuc::fft
