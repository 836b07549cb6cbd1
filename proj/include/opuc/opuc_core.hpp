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
#include "opuc/measure.hpp"
#include "opuc/trig_series.hpp"

namespace opuc {

/// Recursion coefficients gamma_j with |gamma_j| < 1, plus the cached
/// complementary parameters rho_j = sqrt(1 - |gamma_j|^2).
class VerblunskySeq {
 public:
  VerblunskySeq() = default;
  explicit VerblunskySeq(std::vector<cplx> gamma);

  std::span<const cplx> gamma() const { return gamma_; }
  std::span<const double> rho() const { return rho_; }
  int size() const { return static_cast<int>(gamma_.size()); }

  /// Concatenation helper for spliced coefficient sequences.
  static VerblunskySeq spliced(const VerblunskySeq& head, const VerblunskySeq& tail);

 private:
  std::vector<cplx> gamma_;
  std::vector<double> rho_;
};

/// First- and second-kind orthonormal polynomials at degree n together with
/// their reversed companions.
struct OrthoPolySet {
  ComplexPoly phi;
  ComplexPoly phi_star;
  ComplexPoly psi;
  ComplexPoly psi_star;
  int n = 0;
};

/// Trigonometric moments c_k = integral e^{-ik theta} d sigma, k = 0..K.
/// Throws std::domain_error when the associated Toeplitz form degenerates.
std::vector<cplx> moments(const MeasureSpec& m, int K);

struct VerblunskyResult {
  VerblunskySeq seq;
  ComplexPoly monic;        // Phi_n
  double monic_norm = 0.0;  // L^2(d sigma) norm of Phi_n
  ComplexPoly orthonormal;  // phi_n = Phi_n / norm
};

/// Recursion coefficients of the measure, extracted degree by degree from
/// quadrature inner products.  Re-orthogonalizes the running monic
/// polynomial against the accumulated orthonormal family every 16 steps.
VerblunskyResult verblunsky_extract(const MeasureSpec& m, int n);

VerblunskySeq verblunsky_from_measure(const MeasureSpec& m, int n);

/// Coefficient-space recursion from gamma_0..gamma_{n-1}; second kind uses
/// the sign-flipped coefficients.
OrthoPolySet szego_recursion(const VerblunskySeq& v, int n);

/// Truncated measure with density 1 / (2 pi |phi_n|^2); reproduces the
/// first n recursion coefficients of the source measure.
MeasureSpec bernstein_szego(const OrthoPolySet& o);

/// psi_n^*(z) / phi_n^*(z); requires |z| < 1.
cplx caratheodory(const OrthoPolySet& o, cplx z);

struct SzegoData {
  double lambda = 0.0;            // exp((1/4pi) int log(2 pi w))
  double Lambda = 0.0;            // sqrt of the weight's mass
  TrigSeries log_outer{0};        // boundary series of log Pi (analytic side)
  std::vector<cplx> outer;        // Pi(e^{i theta_k}) on the measure's grid
  double boundary_residual = 0.0; // max rel. defect of |Pi|^{-2} = 2 pi w
};

/// Szego data of a weight bounded below by a positive constant.
/// Throws std::domain_error when min w <= 0.
SzegoData szego_data(const MeasureSpec& m);

struct LocalizationReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  cplx phi1_at_one;
  cplx phi2_at_one;
};

/// Both sides of the localization inequality for weights agreeing on
/// [-eps_arc, eps_arc].  Throws std::invalid_argument when the agreement
/// precondition fails on the grid.
LocalizationReport localization_bound(const MeasureSpec& w1, const MeasureSpec& w2,
                                      double eps_arc, int n);

}  // namespace opuc
