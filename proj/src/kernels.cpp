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

#include "opuc/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace opuc {

MultiplierSeq fejer_multipliers(int n) {
  if (n < 1) throw std::invalid_argument("fejer_multipliers: order must be >= 1");
  MultiplierSeq out;
  out.order = n;
  out.m.resize(n);
  for (int j = 0; j < n; ++j) out.m[j] = 1.0 - static_cast<double>(j) / n;
  return out;
}

MultiplierSeq jackson_multipliers(int n) {
  if (n < 1) throw std::invalid_argument("jackson_multipliers: order must be >= 1");
  // Discrete autocorrelation of the two-sided triangle t_j = 1 - |j|/n.
  std::vector<double> t(2 * n - 1);
  for (int j = -(n - 1); j <= n - 1; ++j)
    t[j + n - 1] = 1.0 - static_cast<double>(j < 0 ? -j : j) / n;

  MultiplierSeq out;
  out.order = n;
  out.m.assign(2 * n - 1, 0.0);
  for (int j = 0; j <= 2 * n - 2; ++j) {
    double acc = 0.0;
    for (int k = j - (n - 1); k <= n - 1; ++k) {
      if (k < -(n - 1)) continue;
      acc += t[k + n - 1] * t[k - j + n - 1];
    }
    out.m[j] = acc;
  }
  const double a0 = out.m[0];
  for (double& v : out.m) v /= a0;
  return out;
}

double jackson_c(int n) {
  // Kernel mass of the unscaled square is sum t_j^2 / (2 pi).
  double acc = 0.0;
  for (int j = -(n - 1); j <= n - 1; ++j) {
    const double t = 1.0 - static_cast<double>(j < 0 ? -j : j) / n;
    acc += t * t;
  }
  return 2.0 * std::numbers::pi / acc;
}

TrigSeries apply_multipliers(const TrigSeries& s, const MultiplierSeq& m) {
  TrigSeries out(std::min(s.bandwidth(), m.support()));
  for (int j = -out.bandwidth(); j <= out.bandwidth(); ++j)
    out.set_coeff(j, s.coeff(j) * m.at(j));
  return out;
}

FracPowerSeries FracPowerSeries::make(double a, int truncation) {
  if (a <= -1.0)
    throw std::domain_error("FracPowerSeries: exponent must be > -1");
  if (truncation < 0) throw std::invalid_argument("FracPowerSeries: negative truncation");
  FracPowerSeries out;
  out.exponent = a;
  out.coeffs.resize(truncation + 1);
  out.coeffs[0] = 1.0;
  for (int k = 0; k < truncation; ++k)
    out.coeffs[k + 1] = out.coeffs[k] * (k - a) / (k + 1);
  return out;
}

cplx FracPowerSeries::closed_form(double a, double theta) {
  const cplx base = 1.0 - cplx{std::cos(theta), std::sin(theta)};
  return std::pow(base, cplx{a, 0.0});
}

ComplexPoly build_h_n(double eps, int n) {
  if (n < 2) throw std::invalid_argument("build_h_n: n must be >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("build_h_n: eps must be in (0,1)");
  const auto b = FracPowerSeries::make(eps, n - 1);
  const auto m = fejer_multipliers(n);
  std::vector<cplx> c(n);
  for (int k = 0; k < n; ++k) c[k] = 2.0 * b.coeffs[k] * m.at(k);
  return ComplexPoly(std::move(c));
}

ComplexPoly build_H_n(double alpha, int n) {
  if (n < 4) throw std::invalid_argument("build_H_n: n must be >= 4");
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("build_H_n: alpha must be in (1/2,1)");
  const int l = n / 2;
  const auto m = jackson_multipliers(l);
  const int deg = m.support();  // 2l - 2 <= n - 2
  const auto b = FracPowerSeries::make(alpha, deg);
  std::vector<cplx> c(deg + 1);
  for (int k = 0; k <= deg; ++k) c[k] = 2.0 * b.coeffs[k] * m.at(k);
  return ComplexPoly(std::move(c));
}

ComplexPoly build_Q_n(double alpha, int n) {
  if (n < 2) throw std::invalid_argument("build_Q_n: n must be >= 2");
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("build_Q_n: alpha must be in (1/2,1)");
  const auto b = FracPowerSeries::make(-alpha / 2.0, n - 1);
  const auto m = fejer_multipliers(n);
  std::vector<cplx> c(n);
  for (int k = 0; k < n; ++k) c[k] = b.coeffs[k] * m.at(k);
  return ComplexPoly(std::move(c));
}

}  // namespace opuc
