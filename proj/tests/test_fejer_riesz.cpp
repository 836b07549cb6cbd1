#include <doctest.h>

#include <cmath>
#include <numbers>

#include "opuc/fejer_riesz.hpp"
#include "opuc/kernels.hpp"
#include "opuc/roots.hpp"
#include "test_util.hpp"

using namespace opuc;

namespace {

// Strictly positive trig polynomial |p|^2 + floor, coefficients by
// autocorrelation of a random polynomial.
TrigSeries random_positive_trig(std::mt19937_64& rng, int degree, double floor_level) {
  const auto p = testutil::random_poly(rng, degree);
  TrigSeries t(degree);
  for (int j = 0; j <= degree; ++j) {
    cplx acc = 0.0;
    for (int k = j; k <= degree; ++k) acc += p.at(k) * std::conj(p.at(k - j));
    t.set_coeff(-j, acc);
    t.set_coeff(j, std::conj(acc));
  }
  t.set_coeff(0, t.coeff(0) + floor_level);
  return t;
}

double residual_on_grid(const ComplexPoly& q, const TrigSeries& t, const Grid& g) {
  const auto qs = eval_on_grid(q, g);
  const auto ts = eval_on_grid(t, g);
  double worst = 0.0;
  for (int k = 0; k < g.size(); ++k)
    worst = std::max(worst, std::abs(std::norm(qs[k]) - ts[k].real()));
  return worst;
}

}  // namespace

TEST_CASE("factor of 5 + 4 cos is 2 + z") {
  TrigSeries t(1);
  t.set_coeff(0, cplx{5.0});
  t.set_coeff(1, cplx{2.0});
  t.set_coeff(-1, cplx{2.0});
  const auto q = fejer_riesz(t, 2);
  CHECK(std::abs(q.at(0) - 2.0) < 1e-10);
  CHECK(std::abs(q.at(1) - 1.0) < 1e-10);
  CHECK(std::abs(q.at(0).imag()) < 1e-12);
}

TEST_CASE("constant input factors to its square root") {
  TrigSeries t(0);
  t.set_coeff(0, cplx{9.0});
  const auto q = fejer_riesz(t, 1);
  CHECK(std::abs(q.at(0) - 3.0) < 1e-12);
}

TEST_CASE("random strictly positive polynomials factor with certified residual") {
  std::mt19937_64 rng(91);
  const Grid g(4096);
  for (int trial = 0; trial < 12; ++trial) {
    const int deg = 3 + static_cast<int>(testutil::uniform01(rng) * 28);
    const auto t = random_positive_trig(rng, deg, 0.05);
    const auto q = fejer_riesz(t, deg + 1);
    CHECK(q.degree().value() <= deg);
    CHECK(q.at(0).real() > 0.0);
    CHECK(std::abs(q.at(0).imag()) < 1e-14 * q.at(0).real());

    double t_max = 0.0;
    for (const auto& v : eval_on_grid(t, g)) t_max = std::max(t_max, v.real());
    CHECK(residual_on_grid(q, t, g) < 1e-9 * t_max);
    for (const auto& r : poly_roots(q)) CHECK(std::abs(r) > 1.0);
  }
}

TEST_CASE("construction-style input factors cleanly") {
  const int n = 64;
  const auto h = build_h_n(0.5, n);
  const Grid g = Grid::for_degree(n);
  const auto hs = eval_on_grid(h, g);
  std::vector<double> re_f(hs.size());
  for (std::size_t k = 0; k < hs.size(); ++k) re_f[k] = (2.0 / hs[k]).real();
  const auto series = series_from_real_samples(re_f, g, n - 1);
  const auto t = apply_multipliers(series, fejer_multipliers(n));

  const auto q = fejer_riesz(t, n);
  double t_max = 0.0;
  for (const auto& v : eval_on_grid(t, g)) t_max = std::max(t_max, v.real());
  CHECK(residual_on_grid(q, t, g) < 1e-9 * t_max);
  for (const auto& r : poly_roots(q)) CHECK(std::abs(r) > 1.0 + 1e-9);
}

TEST_CASE("inputs that touch zero or go complex are rejected") {
  TrigSeries touching(1);  // 1 - cos theta vanishes at zero
  touching.set_coeff(0, cplx{1.0});
  touching.set_coeff(1, cplx{-0.5});
  touching.set_coeff(-1, cplx{-0.5});
  CHECK_THROWS_AS(fejer_riesz(touching, 2), std::invalid_argument);

  TrigSeries complex_valued(1);
  complex_valued.set_coeff(0, cplx{2.0});
  complex_valued.set_coeff(1, cplx{0.4});
  complex_valued.set_coeff(-1, cplx{0.1});  // breaks conjugate symmetry
  CHECK_THROWS_AS(fejer_riesz(complex_valued, 2), std::invalid_argument);

  TrigSeries too_wide(4);
  too_wide.set_coeff(0, cplx{2.0});
  too_wide.set_coeff(4, cplx{0.3});
  too_wide.set_coeff(-4, cplx{0.3});
  CHECK_THROWS_AS(fejer_riesz(too_wide, 3), std::invalid_argument);
}
