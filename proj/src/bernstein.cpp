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

#include "opuc/bernstein.hpp"

#include <cmath>
#include <stdexcept>

#include "opuc/kern.hpp"

namespace opuc {

TrigSeries project(const TrigSeries& f, ProjectionSpec p) {
  if (p.n1 > p.n2) throw std::invalid_argument("project: band edges out of order");
  TrigSeries out(f.bandwidth());
  for (int j = -f.bandwidth(); j <= f.bandwidth(); ++j) {
    if (j >= p.n1 && j <= p.n2) out.set_coeff(j, f.coeff(j));
  }
  return out;
}

FixedPointResult monic_fixed_point(const MeasureSpec& w, int n, double kappa, double tol,
                                   int max_iter) {
  if (n < 1) throw std::invalid_argument("monic_fixed_point: degree must be >= 1");
  if (!(w.min_value() > 0.0))
    throw std::invalid_argument("monic_fixed_point: weight must be positive");
  const double wmax = w.max_value();
  if (kappa <= 0.0) kappa = 1.0 / wmax;

  // The iteration multiplies by (1 - kappa w) pointwise, which raises the
  // bandwidth by that of w; run on a grid large enough for degree n plus
  // the weight's spectral tail.
  const Grid g = w.grid().size() >= Grid::for_degree(n).size()
                     ? w.grid()
                     : Grid(Grid::for_degree(n).size());
  const MeasureSpec wg = w.grid().size() == g.size() ? w : w.resampled(g.size());
  const int N = g.size();
  const auto& K = kern::ops();

  std::vector<double> factor(N);
  for (int k = 0; k < N; ++k) factor[k] = 1.0 - kappa * wg.samples()[k];

  FixedPointResult out;
  out.kappa = kappa;
  out.contractive = kappa * wmax <= 1.0 + 1e-12;

  std::vector<cplx> coeff(n + 1, cplx{0.0});
  coeff[n] = 1.0;
  std::vector<cplx> samples(N), prod(N);

  auto band_coeffs_of_product = [&](std::vector<cplx>& dst) {
    // dst[0..n-1] = Fourier coefficients 0..n-1 of factor * current iterate.
    ComplexPoly poly{std::vector<cplx>(coeff)};
    samples = eval_on_grid(poly, g);
    K.mul_rc(prod.data(), factor.data(), samples.data(), N);
    const auto series = series_from_samples(prod, g, n);
    for (int j = 0; j < n; ++j) dst[j] = series.coeff(j);
  };

  std::vector<cplx> update(n, cplx{0.0});
  for (int it = 0; it < max_iter; ++it) {
    band_coeffs_of_product(update);
    double change = 0.0;
    for (int j = 0; j < n; ++j) {
      change = std::max(change, std::abs(update[j] - coeff[j]));
      coeff[j] = update[j];
    }
    out.trace.push_back(change);
    out.iterations = it + 1;
    if (change < tol) {
      out.converged = true;
      break;
    }
  }

  out.phi = ComplexPoly(coeff);

  // Residual: the band part of w * phi must vanish at a fixed point.
  samples = eval_on_grid(out.phi, g);
  std::vector<cplx> wphi(N);
  K.mul_rc(wphi.data(), wg.samples().data(), samples.data(), N);
  const auto series = series_from_samples(wphi, g, n);
  double res = 0.0;
  for (int j = 0; j < n; ++j) res = std::max(res, std::abs(series.coeff(j)));
  out.residual = res;
  return out;
}

PNormProfile p_norm_profile(const MeasureSpec& w, const std::vector<int>& n_list, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p_norm_profile: p must be >= 1");
  PNormProfile out;
  out.p = p;
  for (int n : n_list) {
    const auto fp = monic_fixed_point(w, n);
    if (!fp.converged)
      throw std::runtime_error("p_norm_profile: fixed point did not converge at n = " +
                               std::to_string(n));
    const Grid g = Grid::for_degree(n);
    const auto samples = eval_on_grid(fp.phi, g);
    double acc = 0.0;
    double sup = 0.0;
    for (const cplx& v : samples) {
      const double a = std::abs(v);
      acc += std::pow(a, p);
      sup = std::max(sup, a);
    }
    const double pn = std::pow(acc * g.spacing(), 1.0 / p);
    out.n.push_back(n);
    out.p_norm.push_back(pn);
    out.sup_norm.push_back(sup);
    out.envelope.push_back(std::pow(n, 1.0 / p) * pn);
  }
  double c = 0.0;
  for (std::size_t i = 0; i < out.n.size(); ++i)
    c = std::max(c, out.sup_norm[i] / out.envelope[i]);
  out.fitted_constant = c;
  return out;
}

}  // namespace opuc
