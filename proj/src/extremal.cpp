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

#include "opuc/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "opuc/fejer_riesz.hpp"
#include "opuc/kern.hpp"
#include "opuc/kernels.hpp"
#include "opuc/roots.hpp"

namespace opuc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kDenseIntervalSamples = 4097;

double wrap_angle(double theta) {
  while (theta < -kPi) theta += kTwoPi;
  while (theta >= kPi) theta -= kTwoPi;
  return theta;
}

/// Integral of |P|^{-2} over the circle, grid-doubled until stable.
double inverse_square_integral(const ComplexPoly& P) {
  const int deg = P.degree().value_or(0);
  int N = Grid::for_degree(deg).size();
  auto quad = [&P](int size) {
    const auto s = eval_on_grid(P, Grid(size));
    std::vector<double> m(s.size());
    kern::ops().mag2(m.data(), s.data(), s.size());
    double acc = 0.0;
    for (double v : m) acc += 1.0 / v;
    return acc * kTwoPi / size;
  };
  double prev = quad(N);
  while (N < (1 << 18)) {
    N *= 2;
    const double cur = quad(N);
    if (std::abs(cur - prev) <= 1e-11 * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

struct DensityEvaluator {
  const ComplexPoly* phi;
  const ComplexPoly* phi_star;
  const ComplexPoly* aux;

  // The defining formula: 2 Re F / (pi |phi + phi* + F (phi* - phi)|^2)
  // with F = 2 / aux; evaluable at any angle, not just grid points.
  double operator()(double theta) const {
    const cplx z{std::cos(theta), std::sin(theta)};
    const cplx a = aux->eval(z);
    const cplx f = 2.0 / a;
    const cplx p = phi->eval(z);
    const cplx ps = phi_star->eval(z);
    const double den = std::norm(p + ps + f * (ps - p));
    return 2.0 * f.real() / (kPi * den);
  }
};

struct IntervalScan {
  double min_value;
  double max_value;
  double mean_value;
};

IntervalScan scan_interval(const DensityEvaluator& density, double half_width) {
  IntervalScan s{std::numeric_limits<double>::max(), 0.0, 0.0};
  for (int i = 0; i < kDenseIntervalSamples; ++i) {
    const double theta =
        -half_width + 2.0 * half_width * i / (kDenseIntervalSamples - 1);
    const double v = density(theta);
    s.min_value = std::min(s.min_value, v);
    s.max_value = std::max(s.max_value, v);
    s.mean_value += v;
  }
  s.mean_value /= kDenseIntervalSamples;
  return s;
}

ConstructionReport build_construction(const std::string& regime, double param, int n,
                                      double half_width, const ComplexPoly& base,
                                      const ComplexPoly& aux, bool run_splice_check) {
  const int two_n = 2 * n;
  const Grid g = Grid::for_degree(two_n);
  const int N = g.size();
  const auto& K = kern::ops();

  // Guard the pointwise division by the auxiliary polynomial.
  const auto aux_s = eval_on_grid(aux, g);
  double min_re = std::numeric_limits<double>::max();
  double min_abs = std::numeric_limits<double>::max();
  for (const cplx& v : aux_s) {
    min_re = std::min(min_re, v.real());
    min_abs = std::min(min_abs, std::abs(v));
  }
  if (!(min_re > -1e-12) || !(min_abs > 1e-10))
    throw std::runtime_error(regime + ": auxiliary polynomial loses positivity (min Re = " +
                             std::to_string(min_re) + ")");

  const ComplexPoly base_star = star_reverse(base, two_n);
  const ComplexPoly sum = base + base_star + multiply(base, aux);

  // Normalization: the integral of |scale * sum|^{-2} must be 2 pi, and it
  // scales as scale^{-2}, so the solve is closed-form.
  const double integral = inverse_square_integral(sum);
  const double scale = std::sqrt(integral / kTwoPi);
  const ComplexPoly phi_star = sum.scaled(scale);
  const ComplexPoly phi = star_reverse(phi_star, two_n);

  if (phi.degree().value_or(-1) != two_n)
    throw std::runtime_error(regime + ": constructed polynomial has wrong degree");
  if (!zero_free_in_closed_disk(phi_star, g))
    throw std::runtime_error(regime + ": reversed polynomial has zeros in the closed disk");

  const double norm_residual = std::abs(inverse_square_integral(phi_star) - kTwoPi);

  // Density route 1: the direct formula.
  const auto phi_s = eval_on_grid(phi, g);
  const auto star_s = eval_on_grid(phi_star, g);
  std::vector<cplx> ft(N);
  for (int k = 0; k < N; ++k) ft[k] = 2.0 / aux_s[k];
  std::vector<double> sigma_raw(N);
  for (int k = 0; k < N; ++k) {
    const double den = std::norm(phi_s[k] + star_s[k] + ft[k] * (star_s[k] - phi_s[k]));
    sigma_raw[k] = 2.0 * ft[k].real() / (kPi * den);
  }
  double sigma_min = std::numeric_limits<double>::max();
  for (double v : sigma_raw) sigma_min = std::min(sigma_min, v);
  if (!(sigma_min > 0.0))
    throw std::runtime_error(regime + ": density not strictly positive on the grid");

  // Density route 2: the factored form through the phase xi = base*/base.
  const double upsilon = kPi * scale * scale / 2.0;
  const auto bs = eval_on_grid(base, g);
  const auto bss = eval_on_grid(base_star, g);
  std::vector<double> base_mag2(N);
  K.mag2(base_mag2.data(), bs.data(), N);
  double xi_defect = 0.0;
  double route_agreement = 0.0;
  const bool small = regime == "small-deviation";
  for (int k = 0; k < N; ++k) {
    const cplx xi = bss[k] / bs[k];
    xi_defect = std::max(xi_defect, std::abs(std::abs(xi) - 1.0));
    const cplx a = aux_s[k];
    const cplx f = ft[k];
    const double factor_a = base_mag2[k] / f.real();
    double rest;
    if (small) {
      const cplx b_in = 2.0 + std::conj(a) * (1.0 - f);
      const double b = std::norm(b_in);
      const double c = std::norm(xi + (2.0 + a * (1.0 + f)) / b_in);
      rest = b * c;
    } else {
      rest = std::norm(4.0 + a + xi * (std::conj(a) + 2.0 * (1.0 - std::conj(a) / a)));
    }
    const double sigma2 = 1.0 / (upsilon * factor_a * rest);
    route_agreement =
        std::max(route_agreement, std::abs(sigma2 - sigma_raw[k]) / sigma_raw[k]);
  }

  // Interval statistics come from dense sampling of the closed-form density;
  // the clip interval can be narrower than one grid cell.
  const DensityEvaluator density{&phi, &phi_star, &aux};
  const IntervalScan scan = scan_interval(density, half_width);

  double mass = 0.0;
  for (double v : sigma_raw) mass += v;
  mass *= g.spacing();
  const double mass_factor = kTwoPi / mass;

  std::vector<double> sigma_two_pi(N), rescaled(N), clipped(N);
  for (int k = 0; k < N; ++k) {
    sigma_two_pi[k] = mass_factor * sigma_raw[k];
    rescaled[k] = sigma_raw[k] / scan.min_value;
    clipped[k] =
        std::abs(g.theta(k)) <= half_width ? sigma_raw[k] / scan.min_value : 1.0;
  }

  double w1_max = 1.0;
  for (double v : clipped) w1_max = std::max(w1_max, v);
  const double T_achieved = scan.max_value / scan.min_value;

  ConstructionReport rep{
      .regime = regime,
      .param = param,
      .tau = small ? 0.0 : 1.0 - param,
      .n = n,
      .normalization = scale,
      .upsilon = upsilon,
      .value_at_one = std::abs(phi_star.eval(cplx{1.0})),
      .interval_half_width = half_width,
      .mass_factor = mass_factor,
      .normalization_residual = norm_residual,
      .route_agreement = route_agreement,
      .xi_modulus_defect = xi_defect,
      .im_base_at_one = std::abs(base.eval(cplx{1.0}).imag()) /
                        std::max(std::abs(base.eval(cplx{1.0})), 1e-300),
      .T_achieved = T_achieved,
      .deviation_constant = (w1_max - 1.0) / param,
      .interval_resolvable = half_width >= g.spacing(),
      .sigma_stats =
          DeviationStats{
              .global_min = mass_factor * sigma_min,
              .global_max = mass_factor *
                            *std::max_element(sigma_raw.begin(), sigma_raw.end()),
              .interval_min = mass_factor * scan.min_value,
              .interval_max = mass_factor * scan.max_value,
              .interval_mean = mass_factor * scan.mean_value,
          },
      .metrics = {},
      .sigma = MeasureSpec(g, sigma_two_pi, regime + "/sigma-2pi"),
      .sigma_probability = MeasureSpec(g, sigma_raw, regime + "/sigma"),
      .rescaled = MeasureSpec(g, rescaled, regime + "/sigma-rescaled"),
      .clipped = MeasureSpec(g, clipped, regime + "/w1"),
      .phi = phi,
      .phi_star = phi_star,
      .base = base,
      .aux = aux,
  };

  rep.metrics["scale_sq"] = scale * scale;
  rep.metrics["sigma_ratio_global"] = rep.sigma_stats.global_max / rep.sigma_stats.global_min;
  rep.metrics["mass_defect"] = std::abs(mass - 1.0);
  if (small) {
    double central_dev = 0.0;
    for (int i = 0; i < kDenseIntervalSamples; ++i) {
      const double theta =
          -half_width + 2.0 * half_width * i / (kDenseIntervalSamples - 1);
      central_dev = std::max(central_dev, std::abs(density(theta) / scan.mean_value - 1.0));
    }
    rep.metrics["central_dev_over_eps"] = central_dev / param;
  } else {
    const double tau = 1.0 - param;
    rep.metrics["beta_sq"] = scale * scale;
    rep.metrics["beta_sq_times_tau3"] = scale * scale * tau * tau * tau;
    // ED = 1 / (upsilon * sigma'), scanned over the interval.
    rep.metrics["ED_min_interval"] = 1.0 / (upsilon * scan.max_value);
    rep.metrics["ED_max_interval"] = 1.0 / (upsilon * scan.min_value);
    rep.metrics["ED_min_over_tau3"] = 1.0 / (upsilon * scan.max_value * tau * tau * tau);
    rep.metrics["ED_max_times_tau"] = tau / (upsilon * scan.min_value);
    rep.metrics["T_over_tau4"] = T_achieved * tau * tau * tau * tau;
  }

  if (run_splice_check) {
    const GridEvaluator f_tilde = [&aux](const Grid& gg) {
      auto s = eval_on_grid(aux, gg);
      for (auto& v : s) v = 2.0 / v;
      return s;
    };
    const auto splice = decop_splice_check(phi_star, f_tilde, two_n, 4);
    rep.decop_consistency = std::max(splice.head_max_err, splice.phi_max_err);
    rep.metrics["splice_head_err"] = splice.head_max_err;
    rep.metrics["splice_phi_err"] = splice.phi_max_err;
    for (std::size_t i = 0; i < splice.tail_err.size(); ++i)
      rep.metrics["splice_tail_err_" + std::to_string(i)] = splice.tail_err[i];
  }
  return rep;
}

}  // namespace

ConstructionReport build_small_deviation(double eps, int n, bool run_splice_check) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw std::invalid_argument("build_small_deviation: eps must be in (0,1]");
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("build_small_deviation: n must be even and >= 8");

  const ComplexPoly h = build_h_n(std::min(eps, 1.0 - 1e-12), n);
  const Grid g = Grid::for_degree(2 * n);

  // Positive trig polynomial (Re F) smoothed by the triangle multipliers,
  // then its spectral factor.
  const auto h_s = eval_on_grid(h, g);
  std::vector<double> re_f(h_s.size());
  for (std::size_t k = 0; k < h_s.size(); ++k) re_f[k] = (2.0 / h_s[k]).real();
  const auto re_f_series = series_from_real_samples(re_f, g, n - 1);
  const auto t = apply_multipliers(re_f_series, fejer_multipliers(n));
  const ComplexPoly q = fejer_riesz(t, n);

  const double half_width = std::pow(eps, 2.0 / eps);
  return build_construction("small-deviation", eps, n, half_width, q, h, run_splice_check);
}

ConstructionReport build_large_deviation(double alpha, int n, bool run_splice_check,
                                         double interval_scale) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw std::invalid_argument("build_large_deviation: alpha must be in (1/2,1)");
  if (n < 16 || n % 2 != 0)
    throw std::invalid_argument("build_large_deviation: n must be even and >= 16");
  if (!(interval_scale > 0.0))
    throw std::invalid_argument("build_large_deviation: interval scale must be positive");

  const ComplexPoly H = build_H_n(alpha, n);
  const ComplexPoly Q = build_Q_n(alpha, n);
  const double tau = 1.0 - alpha;
  const double half_width = interval_scale * std::pow(tau, 2.0 / alpha);
  return build_construction("large-deviation", alpha, n, half_width, Q, H,
                            run_splice_check);
}

MeasureSpec clip_weight(const MeasureSpec& sigma, double half_width, double interval_min) {
  if (!(sigma.min_value() > 0.0))
    throw std::invalid_argument("clip_weight: density must be strictly positive");
  const Grid& g = sigma.grid();
  const auto s = sigma.samples();
  double m = interval_min;
  if (!(m > 0.0)) {
    m = std::numeric_limits<double>::max();
    for (int k = 0; k < g.size(); ++k) {
      if (std::abs(g.theta(k)) <= half_width) m = std::min(m, s[k]);
    }
    if (m == std::numeric_limits<double>::max()) m = sigma.min_value();
  }
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k)
    w[k] = std::abs(g.theta(k)) <= half_width ? s[k] / m : 1.0;
  return MeasureSpec(g, std::move(w), sigma.label() + "/clipped");
}

SpliceReport decop_splice_check(const ComplexPoly& phi2n_star, const GridEvaluator& f_tilde,
                                int two_n, int tail_count) {
  // The extraction below reads the assembled density's moments off a grid;
  // the density's spectral tail decays like exp(-c j / n), so the aliasing
  // floor is set by the grid-to-degree ratio.  128x keeps it at rounding
  // level for the degrees this runs at.
  const Grid g(static_cast<int>(std::clamp<std::size_t>(
      fft::next_pow2(128u * static_cast<unsigned>(two_n)), 16384u, 1u << 17)));
  const auto f_tilde_samples = f_tilde(g);
  if (static_cast<int>(f_tilde_samples.size()) != g.size())
    throw std::invalid_argument("decop_splice_check: evaluator returned wrong sample count");

  SpliceReport rep;

  // Preconditions: Re F > 0 with unit mean, phi* zero-free, unit-mass
  // truncated measure.
  std::vector<double> re_f(g.size());
  double mean = 0.0;
  for (int k = 0; k < g.size(); ++k) {
    re_f[k] = f_tilde_samples[k].real();
    if (!(re_f[k] > 0.0))
      throw std::invalid_argument("decop_splice_check: Re F must be positive on the grid");
    mean += re_f[k];
  }
  mean /= g.size();
  rep.mean_defect = std::abs(mean - 1.0);
  if (rep.mean_defect > 1e-6)
    throw std::invalid_argument("decop_splice_check: Re F does not have unit mean");
  const cplx at_zero = phi2n_star.at(0);
  if (!(at_zero.real() > 0.0) || std::abs(at_zero.imag()) > 1e-12 * at_zero.real())
    throw std::invalid_argument("decop_splice_check: polynomial value at zero must be positive");
  if (!zero_free_in_closed_disk(phi2n_star, g))
    throw std::invalid_argument("decop_splice_check: polynomial has zeros in the closed disk");
  rep.norm_residual = std::abs(inverse_square_integral(phi2n_star) - kTwoPi);
  if (rep.norm_residual > 1e-6)
    throw std::invalid_argument("decop_splice_check: normalization integral is off");

  const ComplexPoly phi = star_reverse(phi2n_star, two_n);
  const auto phi_s = eval_on_grid(phi, g);
  const auto star_s = eval_on_grid(phi2n_star, g);

  std::vector<double> sigma_raw(g.size());
  for (int k = 0; k < g.size(); ++k) {
    const cplx f = f_tilde_samples[k];
    const double den = std::norm(phi_s[k] + star_s[k] + f * (star_s[k] - phi_s[k]));
    sigma_raw[k] = 2.0 * f.real() / (kPi * den);
  }
  const MeasureSpec sigma(g, sigma_raw, "spliced");

  std::vector<double> mu_raw(g.size());
  std::vector<double> mag(g.size());
  kern::ops().mag2(mag.data(), star_s.data(), g.size());
  kern::ops().recip_scale(mu_raw.data(), mag.data(), 1.0 / kTwoPi, g.size());
  const MeasureSpec mu(g, mu_raw, "truncated");

  std::vector<double> tilde_raw(g.size());
  for (int k = 0; k < g.size(); ++k) tilde_raw[k] = re_f[k] / kTwoPi;
  const MeasureSpec tilde(g, tilde_raw, "tail");

  const auto gam_sigma = verblunsky_from_measure(sigma, two_n + tail_count);
  const auto gam_mu = verblunsky_from_measure(mu, two_n);
  const auto gam_tilde = verblunsky_from_measure(tilde, tail_count);

  for (int i = 0; i < two_n; ++i)
    rep.head_max_err =
        std::max(rep.head_max_err, std::abs(gam_sigma.gamma()[i] - gam_mu.gamma()[i]));
  rep.tail_err.resize(tail_count);
  for (int i = 0; i < tail_count; ++i)
    rep.tail_err[i] = std::abs(gam_sigma.gamma()[two_n + i] - gam_tilde.gamma()[i]);

  const auto rec = szego_recursion(gam_sigma, two_n);
  for (int k = 0; k <= two_n; ++k)
    rep.phi_max_err = std::max(rep.phi_max_err, std::abs(rec.phi.at(k) - phi.at(k)));

  rep.ok = rep.head_max_err < 1e-6 && rep.phi_max_err < 1e-6;
  return rep;
}

GlobalWeightReport assemble_global_weight(const std::string& regime, double param,
                                          const std::vector<ArcSpec>& arcs) {
  if (arcs.empty()) throw std::invalid_argument("assemble_global_weight: no arcs");
  double total_width = 0.0;
  for (const auto& a : arcs) {
    if (!(a.width > 0.0)) throw std::invalid_argument("assemble_global_weight: bad arc width");
    if (a.degree < 16 || a.degree % 2 != 0)
      throw std::invalid_argument("assemble_global_weight: arc degree must be even and >= 16");
    total_width += a.width;
  }
  if (total_width >= kTwoPi)
    throw std::invalid_argument("assemble_global_weight: arcs exceed the circle");

  std::vector<ArcSpec> sorted = arcs;
  std::sort(sorted.begin(), sorted.end(),
            [](const ArcSpec& a, const ArcSpec& b) { return a.center < b.center; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& cur = sorted[i];
    const auto& nxt = sorted[(i + 1) % sorted.size()];
    double gap = nxt.center - cur.center;
    if (i + 1 == sorted.size()) gap += kTwoPi;
    if (gap < (cur.width + nxt.width) / 2.0)
      throw std::invalid_argument("assemble_global_weight: arcs overlap");
  }

  // One construction per distinct degree (param is shared).
  std::map<int, ConstructionReport> built;
  for (const auto& a : arcs) {
    if (built.find(a.degree) == built.end()) {
      const int half = a.degree / 2;
      built.emplace(a.degree, regime == "small-deviation"
                                  ? build_small_deviation(param, half)
                                  : build_large_deviation(param, half));
    }
  }

  int max_deg = 0;
  for (const auto& a : arcs) max_deg = std::max(max_deg, a.degree);
  const Grid g = Grid::for_degree(max_deg);

  std::vector<double> w(g.size(), 1.0);
  for (const auto& a : arcs) {
    const auto& rep = built.at(a.degree);
    if (a.width < 2.0 * rep.interval_half_width)
      throw std::invalid_argument(
          "assemble_global_weight: arc narrower than the construction interval");
    const DensityEvaluator density{&rep.phi, &rep.phi_star, &rep.aux};
    for (int k = 0; k < g.size(); ++k) {
      const double local = wrap_angle(g.theta(k) - a.center);
      if (std::abs(local) <= rep.interval_half_width)
        w[k] = density(local) * rep.mass_factor / rep.sigma_stats.interval_min;
    }
  }

  GlobalWeightReport out{MeasureSpec(g, std::move(w), regime + "/arcs"), {}};
  for (const auto& a : arcs) {
    const auto& rep = built.at(a.degree);
    ArcResult r;
    r.arc = a;
    const auto single = verblunsky_extract(rep.clipped, a.degree);
    r.single_arc_value = std::abs(single.orthonormal.eval(cplx{1.0}));
    const auto global = verblunsky_extract(out.weight, a.degree);
    const cplx zc{std::cos(a.center), std::sin(a.center)};
    r.global_value = std::abs(global.orthonormal.eval(zc));
    out.arcs.push_back(std::move(r));
  }
  return out;
}

}  // namespace opuc
