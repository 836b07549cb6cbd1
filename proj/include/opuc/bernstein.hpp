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

#include "opuc/measure.hpp"
#include "opuc/trig_series.hpp"

namespace opuc {

/// Band [n1, n2] of Fourier modes.
struct ProjectionSpec {
  int n1 = 0;
  int n2 = 0;
};

/// Keeps modes n1..n2 and zeroes the rest; idempotent and self-adjoint.
TrigSeries project(const TrigSeries& f, ProjectionSpec p);

struct FixedPointResult {
  ComplexPoly phi;                  // monic polynomial of degree n
  bool converged = false;
  bool contractive = false;         // kappa * max(w) <= 1 at entry
  int iterations = 0;
  double kappa = 0.0;
  double residual = 0.0;            // sup coefficient of the band projection of w*phi
  std::vector<double> trace;        // per-iteration sup coefficient change
};

/// Iterates f <- z^n + (band projection of (1 - kappa w) f) from f0 = z^n
/// until the sup coefficient change drops below tol.  kappa <= 0 selects
/// the default 1 / max(w).
FixedPointResult monic_fixed_point(const MeasureSpec& w, int n, double kappa = 0.0,
                                   double tol = 1e-12, int max_iter = 2000);

struct PNormProfile {
  double p = 0.0;
  std::vector<int> n;
  std::vector<double> p_norm;        // grid L^p norm of the monic polynomial
  std::vector<double> sup_norm;      // grid sup norm
  std::vector<double> envelope;      // n^{1/p} * p_norm
  double fitted_constant = 0.0;      // max_n sup_norm / envelope
};

/// Grid L^p norms of the monic polynomials for each n, plus the
/// sup-norm envelope constant.
PNormProfile p_norm_profile(const MeasureSpec& w, const std::vector<int>& n_list, double p);

}  // namespace opuc
