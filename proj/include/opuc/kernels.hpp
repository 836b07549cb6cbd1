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

#include <vector>

#include "opuc/complex_poly.hpp"
#include "opuc/trig_series.hpp"

namespace opuc {

/// Fourier multipliers of a smoothing kernel with unit mass: convolving a
/// series with the kernel maps c_j -> c_j * m[|j|], and m[0] = 1.
struct MultiplierSeq {
  std::vector<double> m;  // indexed by |j|; zero beyond the stored support
  int order = 0;

  double at(int j) const {
    const int a = j < 0 ? -j : j;
    return a < static_cast<int>(m.size()) ? m[a] : 0.0;
  }
  int support() const { return static_cast<int>(m.size()) - 1; }
};

/// Triangle multipliers 1 - j/n, support j <= n-1.
MultiplierSeq fejer_multipliers(int n);

/// Multipliers of the square-of-triangle kernel normalized to unit mass;
/// nonnegative, nonincreasing, support j <= 2n-2.
MultiplierSeq jackson_multipliers(int n);

/// The normalization constant c_n of the squared kernel (1 / integral of
/// the unscaled square).
double jackson_c(int n);

TrigSeries apply_multipliers(const TrigSeries& s, const MultiplierSeq& m);

/// One-sided expansion (1 - z)^a = sum_k b_k z^k with
/// b_0 = 1, b_{k+1} = b_k (k - a) / (k + 1).
struct FracPowerSeries {
  double exponent = 0.0;
  std::vector<double> coeffs;

  /// Throws std::domain_error for a <= -1 (coefficients not summable).
  static FracPowerSeries make(double a, int truncation);

  /// Principal-branch closed form (1 - e^{i theta})^a.
  static cplx closed_form(double a, double theta);
};

/// h = 2 (1 - e^{i theta})^eps smoothed by the degree-n triangle kernel;
/// a polynomial of degree n-1 with h(0) = 2 and strictly positive real
/// part on the circle.
ComplexPoly build_h_n(double eps, int n);

/// H = 2 (1 - e^{i theta})^alpha smoothed by the squared kernel of order
/// floor(n/2); degree <= n-2, H(0) = 2, Re H > 0 on the circle.
ComplexPoly build_H_n(double alpha, int n);

/// Q = (1 - z)^{-alpha/2} smoothed by the degree-n triangle kernel;
/// degree n-1, Q(0) = 1, Re Q > 0 on the circle.
ComplexPoly build_Q_n(double alpha, int n);

}  // namespace opuc
