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

#include <span>
#include <string>
#include <vector>

#include "opuc/grid.hpp"

namespace opuc {

/// Absolutely continuous measure w(theta) d theta sampled on a uniform
/// grid.  Samples must be nonnegative and not all zero.
class MeasureSpec {
 public:
  MeasureSpec(Grid grid, std::vector<double> samples, std::string label = {});

  const Grid& grid() const { return grid_; }
  std::span<const double> samples() const { return w_; }
  const std::string& label() const { return label_; }

  /// Integral of the weight, (2 pi / N) * sum of samples.
  double total_mass() const { return mass_; }

  double min_value() const;
  double max_value() const;

  MeasureSpec scaled(double alpha) const;

  /// Rescaled to total mass 1.
  MeasureSpec probability() const { return scaled(1.0 / mass_); }

  /// Rescaled to total mass 2 pi (weight ~ 1 scale).
  MeasureSpec mass_two_pi() const;

  /// Same weight resampled on a different grid size via exact evaluation of
  /// the band-limited interpolant.  Intended for spectrally smooth weights.
  MeasureSpec resampled(int grid_size) const;

 private:
  Grid grid_;
  std::vector<double> w_;
  double mass_;
  std::string label_;
};

/// Weight identically equal to `value`.
MeasureSpec constant_weight(const Grid& g, double value, std::string label = "constant");

}  // namespace opuc
