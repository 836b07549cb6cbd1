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

#include "opuc/measure.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "opuc/trig_series.hpp"

namespace opuc {

MeasureSpec::MeasureSpec(Grid grid, std::vector<double> samples, std::string label)
    : grid_(grid), w_(std::move(samples)), mass_(0.0), label_(std::move(label)) {
  if (static_cast<int>(w_.size()) != grid_.size())
    throw std::invalid_argument("MeasureSpec: sample count differs from grid size");
  bool any_positive = false;
  for (double v : w_) {
    if (v < 0.0) throw std::invalid_argument("MeasureSpec: negative weight sample");
    if (v > 0.0) any_positive = true;
    mass_ += v;
  }
  if (!any_positive) throw std::invalid_argument("MeasureSpec: weight vanishes identically");
  mass_ *= grid_.spacing();
}

double MeasureSpec::min_value() const { return *std::min_element(w_.begin(), w_.end()); }

double MeasureSpec::max_value() const { return *std::max_element(w_.begin(), w_.end()); }

MeasureSpec MeasureSpec::scaled(double alpha) const {
  if (!(alpha > 0.0)) throw std::invalid_argument("MeasureSpec::scaled: factor must be positive");
  std::vector<double> v(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) v[i] = alpha * w_[i];
  return MeasureSpec(grid_, std::move(v), label_);
}

MeasureSpec MeasureSpec::mass_two_pi() const { return scaled(2.0 * std::numbers::pi / mass_); }

MeasureSpec MeasureSpec::resampled(int grid_size) const {
  if (grid_size == grid_.size()) return *this;
  const Grid target(grid_size);
  const int J = std::min(grid_.size(), grid_size) / 2 - 1;
  const auto series = series_from_real_samples(w_, grid_, J);
  const auto vals = opuc::eval_on_grid(series, target);
  std::vector<double> v(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) v[i] = std::max(0.0, vals[i].real());
  return MeasureSpec(target, std::move(v), label_);
}

MeasureSpec constant_weight(const Grid& g, double value, std::string label) {
  return MeasureSpec(g, std::vector<double>(g.size(), value), std::move(label));
}

}  // namespace opuc
