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

#include <cstdint>
#include <string>
#include <vector>

#include "opuc/bernstein.hpp"
#include "opuc/extremal.hpp"
#include "opuc/measure.hpp"
#include "opuc/opuc_core.hpp"

namespace opuc::experiments {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double stderr_slope = 0.0;
  int points = 0;
};

/// Ordinary least squares of y against x.
FitResult ols_fit(std::span<const double> x, std::span<const double> y);

/// OLS on (log x, log y).
FitResult ols_loglog(std::span<const double> x, std::span<const double> y);

/// Deterministic weight in [lo, hi] built from a handful of random
/// trigonometric modes; identical output for identical seeds.
MeasureSpec random_trig_weight(std::uint64_t seed, const Grid& g, double lo, double hi,
                               int modes = 5);

struct GrowthScan {
  std::string regime;            // "small" | "large" | "constant"
  double param = 0.0;
  std::vector<int> n;            // construction half-degrees
  std::vector<double> value_at_one;
  std::vector<double> sup_norm;
  FitResult fit;                 // log |phi_{2n}(1)| vs log (2n)
  FitResult sup_fit;
  bool sup_dominates = true;     // sup norm >= value at one at every n
};

GrowthScan run_growth_scan(const std::string& regime, double param,
                           const std::vector<int>& n_list);

struct EnvelopeRow {
  double t = 0.0;
  std::string regime;
  double param = 0.0;
  double lower_slope = 0.0;
  double lower_stderr = 0.0;
  double upper_slope = 0.0;  // 1/p + max(0, fitted p-norm slope)
  double p = 0.0;
  bool ordered = false;      // lower <= upper + 0.05
  bool report_only = false;  // clip interval unresolvable at this parameter
};

std::vector<EnvelopeRow> run_upper_lower_envelope(const std::vector<double>& t_list);

struct LocalizationCase {
  std::string name;
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double swapped_lhs = 0.0;   // roles of the weights exchanged
  double band_constant = 0.0; // smallest C with eps*m1/(C*m2) <= lhs <= C*m2/(eps*m1)
  bool precondition_ok = true;
  std::string error;
};

struct LocalizationSuite {
  std::vector<LocalizationCase> cases;
  bool all_hold = false;
};

/// Constructed (rescaled sigma, clipped w1) pairs at several degrees.
LocalizationSuite run_localization_suite(const std::vector<int>& n_list = {8, 16, 32, 64});

struct BandCheck {
  std::string name;
  double value = 0.0;
  double floor = 0.0;    // pass requires value >= floor ...
  double ceiling = 0.0;  // ... and value <= ceiling (ignored when 0)
  bool report_only = false;
  bool pass = true;
  int first_n_pass = 0;  // smallest scanned n at which the band held
};

struct AppendixReport {
  std::vector<BandCheck> checks;
  bool all_pass = false;
};

AppendixReport run_appendix_suites(const std::vector<double>& eps_list = {0.2, 0.35, 0.5},
                                   const std::vector<double>& alpha_list = {0.8},
                                   const std::vector<int>& n_list = {256, 1024});

struct SzegoRow {
  int n = 0;
  double residual = 0.0;       // sup |phi_n - e^{in theta} conj(Pi)|
  double sup_over_sqrt_n = 0.0;
};

struct SzegoAsymptotics {
  std::vector<SzegoRow> rows;
  bool decreasing_ok = true;   // each residual < 2x the previous
};

SzegoAsymptotics run_szego_asymptotics(const MeasureSpec& w, const std::vector<int>& n_list,
                                       bool assert_decrease);

}  // namespace opuc::experiments
