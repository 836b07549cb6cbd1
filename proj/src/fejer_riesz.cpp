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

#include "opuc/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "opuc/kern.hpp"
#include "opuc/roots.hpp"

namespace opuc {

namespace {

double factorization_residual(const ComplexPoly& q, const std::vector<double>& t_samples,
                              const Grid& g) {
  const auto qs = eval_on_grid(q, g);
  double worst = 0.0;
  for (std::size_t k = 0; k < qs.size(); ++k)
    worst = std::max(worst, std::abs(std::norm(qs[k]) - t_samples[k]));
  return worst;
}

ComplexPoly rotate_to_positive_constant(const ComplexPoly& q) {
  const cplx c0 = q.at(0);
  if (!(std::abs(c0) > 0.0)) throw std::runtime_error("fejer_riesz: factor vanishes at 0");
  return q.scaled(std::conj(c0) / std::abs(c0));
}

ComplexPoly cepstral_factor(const std::vector<double>& t_samples, const Grid& g, int n) {
  const int N = g.size();
  std::vector<double> u(N);
  for (int k = 0; k < N; ++k) u[k] = std::log(t_samples[k]);
  const int J = N / 2 - 1;
  const auto u_hat = series_from_real_samples(u, g, J);

  // log q = u_0 / 2 + sum_{j>=1} u_j z^j; exponentiate on the grid and read
  // the polynomial coefficients back off.
  TrigSeries log_q(J);
  log_q.set_coeff(0, 0.5 * u_hat.coeff(0));
  for (int j = 1; j <= J; ++j) log_q.set_coeff(j, u_hat.coeff(j));
  const auto log_samples = eval_on_grid(log_q, g);
  std::vector<cplx> q_samples(N);
  for (int k = 0; k < N; ++k) q_samples[k] = std::exp(log_samples[k]);

  const auto coeffs = series_from_samples(q_samples, g, std::min(J, std::max(n - 1, 0)));
  std::vector<cplx> c(n);
  for (int j = 0; j < n; ++j) c[j] = coeffs.coeff(j);
  return rotate_to_positive_constant(ComplexPoly(std::move(c)));
}

ComplexPoly root_reflection_factor(const TrigSeries& t, const std::vector<double>& t_samples,
                                   const Grid& g, int n) {
  // Laurent lift: z^{n-1} t(z) is a polynomial of degree 2n-2 whose roots
  // pair up as (r, 1/conj(r)); the outside-the-disk half builds the factor.
  const int d = n - 1;
  std::vector<cplx> lift(2 * d + 1);
  for (int j = -d; j <= d; ++j) lift[j + d] = t.coeff(j);
  const auto all_roots = poly_roots(ComplexPoly(std::move(lift)));

  std::vector<cplx> outside;
  for (const cplx& r : all_roots) {
    if (std::abs(r) > 1.0) outside.push_back(r);
  }
  if (static_cast<int>(outside.size()) != d)
    throw std::runtime_error("fejer_riesz: root pairing failed (roots on the circle?)");

  ComplexPoly q = ComplexPoly::constant(1.0);
  for (const cplx& r : outside) q = multiply(q, ComplexPoly({1.0, -1.0 / r}));

  // |q|^2 and t agree up to one positive constant.
  const auto qs = eval_on_grid(q, g);
  double ratio_acc = 0.0;
  for (std::size_t k = 0; k < qs.size(); ++k) ratio_acc += t_samples[k] / std::norm(qs[k]);
  const double c = std::sqrt(ratio_acc / static_cast<double>(qs.size()));
  return rotate_to_positive_constant(q.scaled(c));
}

}  // namespace

ComplexPoly fejer_riesz(const TrigSeries& t, int n) {
  if (n < 1) throw std::invalid_argument("fejer_riesz: n must be >= 1");
  if (t.bandwidth() > n - 1) {
    for (int j = n; j <= t.bandwidth(); ++j) {
      if (std::abs(t.coeff(j)) > 0.0 || std::abs(t.coeff(-j)) > 0.0)
        throw std::invalid_argument("fejer_riesz: input degree exceeds n-1");
    }
  }
  if (t.realness_defect() > 1e-10)
    throw std::invalid_argument("fejer_riesz: input series is not real-valued");

  const Grid g(static_cast<int>(fft::next_pow2(std::max(4096, 32 * n))));
  const auto raw = eval_on_grid(t, g);
  std::vector<double> t_samples(raw.size());
  double t_max = 0.0, t_min = std::numeric_limits<double>::max();
  for (std::size_t k = 0; k < raw.size(); ++k) {
    t_samples[k] = raw[k].real();
    t_max = std::max(t_max, t_samples[k]);
    t_min = std::min(t_min, t_samples[k]);
  }
  if (!(t_min > 1e-10 * t_max))
    throw std::invalid_argument("fejer_riesz: input is not strictly positive on the grid");

  const double tol = 1e-9 * t_max;
  ComplexPoly q = cepstral_factor(t_samples, g, n);
  if (factorization_residual(q, t_samples, g) > tol) {
    q = root_reflection_factor(t, t_samples, g, n);
    if (factorization_residual(q, t_samples, g) > tol)
      throw std::runtime_error("fejer_riesz: residual target missed by both methods");
  }

  // All roots must clear the closed disk with margin.  Checking the
  // coefficient-scaled polynomial p(r z) keeps the winding path usable at
  // degrees beyond the eigenvalue sweet spot.
  const double margin = 1e-9;
  const auto deg = q.degree();
  bool clear = true;
  if (deg && *deg > 0) {
    if (*deg <= 256) {
      for (const cplx& r : poly_roots(q)) {
        if (std::abs(r) <= 1.0 + margin) clear = false;
      }
    } else {
      std::vector<cplx> scaled(q.coeffs().begin(), q.coeffs().end());
      double rk = 1.0;
      for (auto& c : scaled) {
        c *= rk;
        rk *= 1.0 + margin;
      }
      clear = zeros_inside_unit_disk(ComplexPoly(std::move(scaled)), g) == 0;
    }
  }
  if (!clear) throw std::runtime_error("fejer_riesz: factor has roots inside 1 + 1e-9");
  return q;
}

}  // namespace opuc
