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

#include "opuc/opuc_core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuc/kern.hpp"

namespace opuc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kReorthStride = 16;

}  // namespace

VerblunskySeq::VerblunskySeq(std::vector<cplx> gamma) : gamma_(std::move(gamma)) {
  rho_.resize(gamma_.size());
  for (std::size_t j = 0; j < gamma_.size(); ++j) {
    const double a = std::abs(gamma_[j]);
    if (a >= 1.0)
      throw std::invalid_argument("VerblunskySeq: |gamma| must be < 1 at index " +
                                  std::to_string(j));
    rho_[j] = std::sqrt(1.0 - a * a);
  }
}

VerblunskySeq VerblunskySeq::spliced(const VerblunskySeq& head, const VerblunskySeq& tail) {
  std::vector<cplx> g(head.gamma_.begin(), head.gamma_.end());
  g.insert(g.end(), tail.gamma_.begin(), tail.gamma_.end());
  return VerblunskySeq(std::move(g));
}

std::vector<cplx> moments(const MeasureSpec& m, int K) {
  const Grid& g = m.grid();
  if (g.size() < 2 * K + 2)
    throw std::invalid_argument("moments: grid too small for requested moment count");
  const auto series = series_from_real_samples(m.samples(), g, K);
  std::vector<cplx> c(K + 1);
  for (int k = 0; k <= K; ++k) c[k] = kTwoPi * series.coeff(k);
  // Positive definiteness of the (K+1)x(K+1) Toeplitz form is equivalent to
  // the recursion surviving K steps with |gamma| < 1.
  if (K >= 1) verblunsky_extract(m, K);
  return c;
}

VerblunskyResult verblunsky_extract(const MeasureSpec& m, int n) {
  const Grid& g = m.grid();
  const int N = g.size();
  if (N < 2 * (n + 1) + 2)
    throw std::invalid_argument("verblunsky_extract: grid too small for degree");
  const auto w = m.samples();
  const auto z = g.points();
  const double dtheta = g.spacing();
  const auto& K = kern::ops();

  std::vector<cplx> phi_c{cplx{1.0}};       // monic Phi_j coefficients
  std::vector<cplx> star_c{cplx{1.0}};      // Phi_j^* coefficients
  std::vector<cplx> phi_s(N, cplx{1.0});    // grid samples
  std::vector<cplx> star_s(N, cplx{1.0});
  std::vector<cplx> zphi(N);
  std::vector<cplx> scratch(N);

  // Orthonormal coefficient vectors phi_0..phi_{j-1}, used by the periodic
  // re-orthogonalization pass.
  std::vector<std::vector<cplx>> ortho;
  ortho.reserve(n + 1);

  std::vector<cplx> gamma;
  gamma.reserve(n);
  double norm2 = 0.0;

  for (int j = 0; j <= n; ++j) {
    // <Phi_j^*, 1> = ||Phi_j||^2; real and positive for a valid measure.
    cplx den_c{0.0};
    for (int k = 0; k < N; ++k) den_c += star_s[k] * w[k];
    den_c *= dtheta;
    const double den = den_c.real();
    if (!(den > 0.0) || !std::isfinite(den))
      throw std::domain_error("verblunsky_extract: degenerate measure at step " +
                              std::to_string(j));
    norm2 = den;

    {
      const double inv = 1.0 / std::sqrt(den);
      std::vector<cplx> unit(phi_c.size());
      for (std::size_t i = 0; i < phi_c.size(); ++i) unit[i] = phi_c[i] * inv;
      ortho.push_back(std::move(unit));
    }

    if (j == n) break;

    K.mul_cc(zphi.data(), z.data(), phi_s.data(), N);
    cplx num{0.0};
    for (int k = 0; k < N; ++k) num += zphi[k] * w[k];
    num *= dtheta;

    const cplx gbar = num / den;  // conj(gamma_j)
    const cplx gj = std::conj(gbar);
    if (std::abs(gj) >= 1.0 - 1e-12)
      throw std::domain_error("verblunsky_extract: |gamma| >= 1 - 1e-12 at index " +
                              std::to_string(j));
    gamma.push_back(gj);

    // Phi_{j+1} = z Phi_j - conj(gamma_j) Phi_j^*,
    // Phi_{j+1}^* = Phi_j^* - gamma_j z Phi_j.
    std::vector<cplx> next_phi(j + 2, cplx{0.0});
    for (int i = 0; i <= j; ++i) next_phi[i + 1] = phi_c[i];
    for (int i = 0; i <= j; ++i) next_phi[i] -= gbar * star_c[i];
    std::vector<cplx> next_star(j + 2, cplx{0.0});
    for (int i = 0; i <= j; ++i) next_star[i] = star_c[i];
    for (int i = 0; i <= j; ++i) next_star[i + 1] -= gj * phi_c[i];
    phi_c = std::move(next_phi);
    star_c = std::move(next_star);

    K.axpby_cc(scratch.data(), cplx{1.0}, zphi.data(), -gbar, star_s.data(), N);
    K.axpby_cc(star_s.data(), cplx{1.0}, star_s.data(), -gj, zphi.data(), N);
    phi_s.swap(scratch);

    const int jn = j + 1;
    if (jn % kReorthStride == 0 && jn < n) {
      // Remove the accumulated projection of Phi_jn onto the lower
      // orthonormal family.  The defects d_i = <Phi_jn, e^{i i theta}>_sigma
      // all come from one transform of w * Phi_jn.
      K.mul_rc(scratch.data(), w.data(), phi_s.data(), N);
      const auto defect = series_from_samples(scratch, g, jn);
      // Only correct drift that stands clear of quadrature noise; firing on
      // noise-level defects would inject more error than it removes.
      const double gate = 1e-13 * std::sqrt(norm2);
      bool corrected = false;
      for (int i = 0; i < jn; ++i) {
        cplx proj{0.0};
        for (std::size_t t = 0; t < ortho[i].size(); ++t)
          proj += std::conj(ortho[i][t]) * kTwoPi * defect.coeff(static_cast<int>(t));
        if (std::abs(proj) <= gate) continue;
        for (std::size_t t = 0; t < ortho[i].size(); ++t) phi_c[t] -= proj * ortho[i][t];
        corrected = true;
      }
      if (corrected) {
        const ComplexPoly reversed = star_reverse(ComplexPoly(phi_c), jn);
        star_c.assign(reversed.coeffs().begin(), reversed.coeffs().end());
        phi_s = eval_on_grid(ComplexPoly(phi_c), g);
        star_s = eval_on_grid(ComplexPoly(star_c), g);
      }
    }
  }

  VerblunskyResult out;
  out.seq = VerblunskySeq(std::move(gamma));
  out.monic = ComplexPoly(phi_c);
  out.monic_norm = std::sqrt(norm2);
  out.orthonormal = ComplexPoly(ortho.back());
  return out;
}

VerblunskySeq verblunsky_from_measure(const MeasureSpec& m, int n) {
  return verblunsky_extract(m, n).seq;
}

OrthoPolySet szego_recursion(const VerblunskySeq& v, int n) {
  if (v.size() < n)
    throw std::invalid_argument("szego_recursion: fewer coefficients than requested degree");
  const auto gamma = v.gamma();
  const auto rho = v.rho();

  auto run = [&](double sign) {
    std::vector<cplx> p{cplx{1.0}}, ps{cplx{1.0}};
    for (int j = 0; j < n; ++j) {
      const cplx gj = sign * gamma[j];
      const double r = 1.0 / rho[j];
      std::vector<cplx> np(j + 2, cplx{0.0}), nps(j + 2, cplx{0.0});
      for (int i = 0; i <= j; ++i) np[i + 1] = r * p[i];
      for (int i = 0; i <= j; ++i) np[i] -= r * std::conj(gj) * ps[i];
      for (int i = 0; i <= j; ++i) nps[i] = r * ps[i];
      for (int i = 0; i <= j; ++i) nps[i + 1] -= r * gj * p[i];
      p = std::move(np);
      ps = std::move(nps);
    }
    return std::pair{ComplexPoly(std::move(p)), ComplexPoly(std::move(ps))};
  };

  auto [phi, phi_star] = run(+1.0);
  auto [psi, psi_star] = run(-1.0);
  return OrthoPolySet{std::move(phi), std::move(phi_star), std::move(psi),
                      std::move(psi_star), n};
}

MeasureSpec bernstein_szego(const OrthoPolySet& o) {
  const int deg = o.n;
  int N = Grid::for_degree(deg).size();

  auto build = [&o](int size) {
    const Grid g(size);
    const auto samples = eval_on_grid(o.phi, g);
    std::vector<double> mag(size);
    kern::ops().mag2(mag.data(), samples.data(), samples.size());
    std::vector<double> w(size);
    kern::ops().recip_scale(w.data(), mag.data(), 1.0 / kTwoPi, size);
    return w;
  };

  // Double the grid until the mass quadrature stabilizes; the density can
  // peak sharply when roots of phi sit close to the circle.
  std::vector<double> w = build(N);
  double mass = 0.0;
  for (double v : w) mass += v;
  mass *= kTwoPi / N;
  while (N < (1 << 18)) {
    const int N2 = 2 * N;
    std::vector<double> w2 = build(N2);
    double mass2 = 0.0;
    for (double v : w2) mass2 += v;
    mass2 *= kTwoPi / N2;
    const bool stable = std::abs(mass2 - mass) <= 1e-12 * std::abs(mass2);
    w = std::move(w2);
    mass = mass2;
    N = N2;
    if (stable) break;
  }
  return MeasureSpec(Grid(N), std::move(w), "bernstein-szego");
}

cplx caratheodory(const OrthoPolySet& o, cplx z) {
  if (std::abs(z) >= 1.0)
    throw std::invalid_argument("caratheodory: evaluation point must satisfy |z| < 1");
  return o.psi_star.eval(z) / o.phi_star.eval(z);
}

SzegoData szego_data(const MeasureSpec& m) {
  if (!(m.min_value() > 0.0))
    throw std::domain_error("szego_data: weight must be bounded below by a positive constant");
  const Grid& g = m.grid();
  const int N = g.size();
  const auto w = m.samples();

  SzegoData out;
  double log_acc = 0.0;
  for (int k = 0; k < N; ++k) log_acc += std::log(kTwoPi * w[k]);
  out.lambda = std::exp(log_acc / (2.0 * N));
  out.Lambda = std::sqrt(m.total_mass());

  // log|Pi| = -(1/2) log(2 pi w); complete to the boundary values of the
  // analytic logarithm via the conjugate-series multiplier.
  std::vector<double> u(N);
  for (int k = 0; k < N; ++k) u[k] = -0.5 * std::log(kTwoPi * w[k]);
  const int J = N / 2 - 1;
  const auto u_hat = series_from_real_samples(u, g, J);
  TrigSeries log_pi(J);
  log_pi.set_coeff(0, u_hat.coeff(0));
  for (int j = 1; j <= J; ++j) log_pi.set_coeff(j, 2.0 * u_hat.coeff(j));

  const auto log_samples = eval_on_grid(log_pi, g);
  out.outer.resize(N);
  for (int k = 0; k < N; ++k) out.outer[k] = std::exp(log_samples[k]);

  double worst = 0.0;
  for (int k = 0; k < N; ++k) {
    const double lhs = 1.0 / std::norm(out.outer[k]);
    const double rhs = kTwoPi * w[k];
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  out.boundary_residual = worst;
  out.log_outer = std::move(log_pi);
  return out;
}

LocalizationReport localization_bound(const MeasureSpec& w1, const MeasureSpec& w2,
                                      double eps_arc, int n) {
  if (!(w1.grid() == w2.grid()))
    throw std::invalid_argument("localization_bound: weights live on different grids");
  const Grid& g = w1.grid();
  const int N = g.size();
  const auto a = w1.samples();
  const auto b = w2.samples();
  const double scale = std::max(w1.max_value(), w2.max_value());
  for (int k = 0; k < N; ++k) {
    if (std::abs(g.theta(k)) <= eps_arc && std::abs(a[k] - b[k]) > 1e-12 * scale)
      throw std::invalid_argument(
          "localization_bound: weights differ on the agreement arc");
  }
  if (!(w1.min_value() > 0.0) || !(w2.min_value() > 0.0))
    throw std::invalid_argument("localization_bound: weights must be positive");

  const auto r1 = verblunsky_extract(w1, n);
  const auto r2 = verblunsky_extract(w2, n);
  const cplx v1 = r1.orthonormal.eval(cplx{1.0});
  const cplx v2 = r2.orthonormal.eval(cplx{1.0});

  const auto s1 = eval_on_grid(r1.orthonormal, g);
  const auto s2 = eval_on_grid(r2.orthonormal, g);
  double integral = 0.0;
  for (int k = 0; k < N; ++k) {
    if (std::abs(g.theta(k)) > eps_arc)
      integral += std::abs(s1[k]) * std::abs(s2[k]) * (a[k] + b[k]);
  }
  integral *= g.spacing();

  const auto d1 = szego_data(w1);
  const auto d2 = szego_data(w2);

  LocalizationReport rep;
  rep.phi1_at_one = v1;
  rep.phi2_at_one = v2;
  rep.lhs = std::abs(v1) / std::abs(v2);
  rep.rhs = d2.Lambda / d1.lambda + 4.0 * d1.Lambda / (eps_arc * d1.lambda) * integral;
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

}  // namespace opuc
