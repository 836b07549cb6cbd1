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

#include "opuc/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opuc::fft {

namespace {

// Half-size twiddle table, w[j] = exp(-2*pi*i*j/n).  Entries come straight
// from sincos so table accuracy is ~1 ulp independent of n.
const std::vector<cplx>& twiddles(std::size_t n) {
  thread_local std::size_t cached_n = 0;
  thread_local std::vector<cplx> table;
  if (cached_n != n) {
    table.resize(n / 2);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n / 2; ++j) {
      const double a = step * static_cast<double>(j);
      table[j] = {std::cos(a), std::sin(a)};
    }
    cached_n = n;
  }
  return table;
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void transform(std::span<cplx> a, int sign) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
  if (n == 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const auto& w = twiddles(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx tw = w[j * stride];
        if (sign > 0) tw = std::conj(tw);
        const cplx u = a[i + j];
        const cplx v = a[i + j + len / 2] * tw;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

std::vector<cplx> dft_reference(std::span<const cplx> a, int sign) {
  const std::size_t n = a.size();
  std::vector<cplx> out(n);
  const double step = 2.0 * std::numbers::pi * sign / static_cast<double>(n);
  for (std::size_t m = 0; m < n; ++m) {
    cplx acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const double ang = step * static_cast<double>(k * m % n);
      acc += a[k] * cplx{std::cos(ang), std::sin(ang)};
    }
    out[m] = acc;
  }
  return out;
}

}  // namespace opuc::fft
