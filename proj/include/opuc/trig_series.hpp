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
#include <vector>

#include "opuc/complex_poly.hpp"
#include "opuc/grid.hpp"

namespace opuc {

/// Two-sided Fourier series f = sum_{|j| <= J} c_j e^{i j theta} with the
/// convention c_j = (2 pi)^{-1} integral f e^{-i j theta} d theta.
class TrigSeries {
 public:
  explicit TrigSeries(int bandwidth);

  int bandwidth() const { return bandwidth_; }

  cplx coeff(int j) const;
  void set_coeff(int j, cplx value);

  cplx mean() const { return coeff(0); }

  /// 2*pi*c_0, the exact integral over [-pi, pi].
  cplx integrate() const { return 2.0 * std::numbers::pi * coeff(0); }

  /// Max |c_{-j} - conj(c_j)|; zero for series of real-valued functions.
  double realness_defect() const;

  bool is_real(double tol = 1e-12) const { return realness_defect() <= tol; }

  cplx eval(double theta) const;

  /// Drops |j| > new_bandwidth, or zero-extends.
  TrigSeries resized(int new_bandwidth) const;

  /// The analytic part sum_{j>=0} c_j z^j as a polynomial.
  ComplexPoly analytic_part() const;

 private:
  int bandwidth_;
  std::vector<cplx> c_;  // index j + bandwidth_
};

/// Trapezoid/DFT Fourier coefficients of grid samples, |j| <= J.
/// Requires g.size() >= 2J + 2.
TrigSeries series_from_samples(std::span<const cplx> samples, const Grid& g, int J);
TrigSeries series_from_real_samples(std::span<const double> samples, const Grid& g, int J);

std::vector<cplx> eval_on_grid(const TrigSeries& s, const Grid& g);

/// sum 2*pi*|c_j|^2 (equals the L^2 mass of the function).
double parseval_mass(const TrigSeries& s);

}  // namespace opuc
