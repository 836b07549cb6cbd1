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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "opuc/complex_poly.hpp"
#include "opuc/measure.hpp"
#include "opuc/opuc_core.hpp"

namespace opuc {

struct DeviationStats {
  double global_min = 0.0;
  double global_max = 0.0;
  double interval_min = 0.0;
  double interval_max = 0.0;
  double interval_mean = 0.0;
};

/// Verblunsky splice consistency between a weight assembled from a
/// zero-free polynomial plus a Caratheodory tail and its two building
/// blocks computed independently.
struct SpliceReport {
  double head_max_err = 0.0;       // coefficients 0..2n-1 vs the truncated measure
  std::vector<double> tail_err;    // coefficients 2n.. vs the tail measure
  double phi_max_err = 0.0;        // recomputed orthonormal polynomial vs input
  double mean_defect = 0.0;        // |mean Re F - 1|
  double norm_residual = 0.0;      // |int |phi*|^{-2} - 2 pi|
  bool ok = false;
};

/// Full record of one extremal construction.
struct ConstructionReport {
  std::string regime;
  double param = 0.0;              // eps (small) or alpha (large)
  double tau = 0.0;                // 1 - alpha, large regime only
  int n = 0;                       // half degree: phi has degree 2n
  double normalization = 0.0;      // the positive scale on the defining sum
  double upsilon = 0.0;            // pi * normalization^2 / 2
  double value_at_one = 0.0;       // |phi_{2n}(1)|
  double interval_half_width = 0.0;
  double mass_factor = 0.0;        // rescale applied to reach mass 2 pi
  double normalization_residual = 0.0;
  double route_agreement = 0.0;    // max rel diff of the two density routes
  double xi_modulus_defect = 0.0;  // max | |xi| - 1 | over the grid
  double im_base_at_one = 0.0;     // |Im q(1)| relative to |q(1)|
  double T_achieved = 0.0;         // max w1 / min w1
  double deviation_constant = 0.0; // (max w1 - 1) / param
  bool interval_resolvable = true; // interval wider than one grid cell
  DeviationStats sigma_stats;      // mass-2pi density
  std::map<std::string, double> metrics;  // regime-specific fitted bands

  MeasureSpec sigma;               // density, mass 2 pi
  MeasureSpec sigma_probability;   // density, mass 1
  MeasureSpec rescaled;            // sigma' / min_I sigma' everywhere
  MeasureSpec clipped;             // w1: 1 off the interval
  ComplexPoly phi;                 // degree 2n, orthonormal for sigma_probability
  ComplexPoly phi_star;
  ComplexPoly base;                // q_n (small) or Q_n (large)
  ComplexPoly aux;                 // h_n (small) or H_n (large)

  double decop_consistency = -1.0; // head error of the splice check when run
};

/// Small-deviation construction; eps in (0, 1], n even and >= 8.
/// The clip interval is eps^{2/eps}, usefully resolvable for eps >= 0.4.
ConstructionReport build_small_deviation(double eps, int n, bool run_splice_check = false);

/// Large-deviation construction; alpha in (1/2, 1), n even and >= 16.
/// Clip interval is interval_scale * tau^{2/alpha}.
ConstructionReport build_large_deviation(double alpha, int n, bool run_splice_check = false,
                                         double interval_scale = 0.1);

/// w1 = 1 off [-half_width, half_width], sigma / min_I sigma on it.
/// `interval_min` <= the true minimum overrides the grid minimum when the
/// caller has a finer estimate.
MeasureSpec clip_weight(const MeasureSpec& sigma, double half_width,
                        double interval_min = 0.0);

/// Produces samples of a circle function on any requested grid.
using GridEvaluator = std::function<std::vector<cplx>(const Grid&)>;

/// Two-route Verblunsky splice check; tail_count coefficients past 2n are
/// compared against the tail measure Re F d theta / (2 pi).  Runs on a grid
/// fine enough to keep the spectral tail of the assembled density below the
/// comparison tolerances.
SpliceReport decop_splice_check(const ComplexPoly& phi2n_star, const GridEvaluator& f_tilde,
                                int two_n, int tail_count);

struct ArcSpec {
  double center = 0.0;
  double width = 0.0;
  int degree = 0;  // polynomial degree evaluated at the arc center
};

struct ArcResult {
  ArcSpec arc;
  double single_arc_value = 0.0;  // |phi_k(1, w1)| for the stand-alone clip
  double global_value = 0.0;      // |phi_k(e^{i center}, w)| for the union weight
};

struct GlobalWeightReport {
  MeasureSpec weight;
  std::vector<ArcResult> arcs;
};

/// Union weight equal to 1 off the arcs and to the rotated clipped
/// construction on each; arcs must be disjoint with total width < 2 pi.
GlobalWeightReport assemble_global_weight(const std::string& regime, double param,
                                          const std::vector<ArcSpec>& arcs);

}  // namespace opuc
