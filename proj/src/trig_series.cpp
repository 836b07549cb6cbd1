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

#include "opuc/trig_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opuc {

TrigSeries::TrigSeries(int bandwidth) : bandwidth_(bandwidth) {
  if (bandwidth < 0) throw std::invalid_argument("TrigSeries: negative bandwidth");
  c_.assign(2 * bandwidth + 1, cplx{0.0});
}

cplx TrigSeries::coeff(int j) const {
  if (j < -bandwidth_ || j > bandwidth_) return cplx{0.0};
  return c_[j + bandwidth_];
}

void TrigSeries::set_coeff(int j, cplx value) {
  if (j < -bandwidth_ || j > bandwidth_)
    throw std::out_of_range("TrigSeries::set_coeff: index beyond bandwidth");
  c_[j + bandwidth_] = value;
}

double TrigSeries::realness_defect() const {
  double worst = 0.0;
  for (int j = 0; j <= bandwidth_; ++j) {
    worst = std::max(worst, std::abs(coeff(-j) - std::conj(coeff(j))));
  }
  return worst;
}

cplx TrigSeries::eval(double theta) const {
  // Two Horner sweeps in e^{i theta} and e^{-i theta}.
  const cplx z{std::cos(theta), std::sin(theta)};
  cplx pos{0.0};
  for (int j = bandwidth_; j >= 1; --j) pos = (pos + coeff(j)) * z;
  cplx neg{0.0};
  const cplx zc = std::conj(z);
  for (int j = bandwidth_; j >= 1; --j) neg = (neg + coeff(-j)) * zc;
  return pos + neg + coeff(0);
}

TrigSeries TrigSeries::resized(int new_bandwidth) const {
  TrigSeries out(new_bandwidth);
  const int j_max = std::min(bandwidth_, new_bandwidth);
  for (int j = -j_max; j <= j_max; ++j) out.set_coeff(j, coeff(j));
  return out;
}

ComplexPoly TrigSeries::analytic_part() const {
  std::vector<cplx> v(bandwidth_ + 1);
  for (int j = 0; j <= bandwidth_; ++j) v[j] = coeff(j);
  return ComplexPoly(std::move(v));
}

TrigSeries series_from_samples(std::span<const cplx> samples, const Grid& g, int J) {
  const int n = g.size();
  if (static_cast<int>(samples.size()) != n)
    throw std::invalid_argument("series_from_samples: sample count differs from grid size");
  if (n < 2 * J + 2)
    throw std::invalid_argument("series_from_samples: grid too small for requested bandwidth");

  // c_j = (1/N) sum_k f_k e^{-i j theta_k} = (-1)^j (1/N) (DFT f)_[j mod N].
  std::vector<cplx> buf(samples.begin(), samples.end());
  fft::transform(buf, -1);
  TrigSeries out(J);
  for (int j = -J; j <= J; ++j) {
    const int bin = (j % n + n) % n;
    const cplx v = buf[bin] / static_cast<double>(n);
    out.set_coeff(j, (j % 2 == 0) ? v : -v);
  }
  return out;
}

TrigSeries series_from_real_samples(std::span<const double> samples, const Grid& g, int J) {
  std::vector<cplx> c(samples.size());
  std::copy(samples.begin(), samples.end(), c.begin());
  return series_from_samples(c, g, J);
}

std::vector<cplx> eval_on_grid(const TrigSeries& s, const Grid& g) {
  const int n = g.size();
  if (n < 2 * s.bandwidth() + 2)
    throw std::invalid_argument("eval_on_grid: grid too small for series bandwidth");
  std::vector<cplx> buf(n, cplx{0.0});
  for (int j = -s.bandwidth(); j <= s.bandwidth(); ++j) {
    const int bin = (j % n + n) % n;
    buf[bin] += (j % 2 == 0) ? s.coeff(j) : -s.coeff(j);
  }
  fft::transform(buf, +1);
  return buf;
}

double parseval_mass(const TrigSeries& s) {
  double acc = 0.0;
  for (int j = -s.bandwidth(); j <= s.bandwidth(); ++j) acc += std::norm(s.coeff(j));
  return 2.0 * std::numbers::pi * acc;
}

}  // namespace opuc
