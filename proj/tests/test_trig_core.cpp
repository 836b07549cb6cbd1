#include <doctest.h>

#include <numbers>

#include "opuc/complex_poly.hpp"
#include "opuc/fft.hpp"
#include "opuc/trig_series.hpp"
#include "test_util.hpp"

using namespace opuc;
using testutil::random_poly;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("fft matches the reference DFT") {
  std::mt19937_64 rng(11);
  for (int n : {4, 16, 64}) {
    std::vector<cplx> a(n);
    for (auto& v : a) v = testutil::random_unit_disk(rng);
    auto b = a;
    fft::transform(b, -1);
    const auto ref = fft::dft_reference(a, -1);
    for (int k = 0; k < n; ++k) CHECK(std::abs(b[k] - ref[k]) < 1e-12 * n);
  }
}

TEST_CASE("fft round trip and length validation") {
  std::mt19937_64 rng(12);
  std::vector<cplx> a(256);
  for (auto& v : a) v = testutil::random_unit_disk(rng);
  auto b = a;
  fft::transform(b, -1);
  fft::transform(b, +1);
  for (std::size_t k = 0; k < a.size(); ++k)
    CHECK(std::abs(b[k] / 256.0 - a[k]) < 1e-13);
  std::vector<cplx> bad(6);
  CHECK_THROWS_AS(fft::transform(bad, -1), std::invalid_argument);
}

TEST_CASE("star reversal on fixed examples") {
  // 1 + 2z in degree context 2 -> z^2 + 2z
  const ComplexPoly p({1.0, 2.0});
  const auto s = star_reverse(p, 2);
  CHECK(s.at(0) == cplx{0.0});
  CHECK(s.at(1) == cplx{2.0});
  CHECK(s.at(2) == cplx{1.0});

  // z^n in its own context reverses to 1
  for (int n : {1, 5, 16}) {
    const auto r = star_reverse(ComplexPoly::monomial(n), n);
    CHECK(r.at(0) == cplx{1.0});
    CHECK(r.degree().value() == 0);
  }

  CHECK_THROWS_AS(star_reverse(ComplexPoly::monomial(3), 2), std::invalid_argument);
}

TEST_CASE("star reversal is an involution and preserves modulus on the circle") {
  std::mt19937_64 rng(21);
  const Grid g(256);
  for (int trial = 0; trial < 64; ++trial) {
    const int deg = 1 + static_cast<int>(testutil::uniform01(rng) * 16);
    const auto p = random_poly(rng, deg);
    const int ctx = deg + static_cast<int>(testutil::uniform01(rng) * 4);

    const auto twice = star_reverse(star_reverse(p, ctx), ctx);
    for (int k = 0; k <= ctx; ++k) CHECK(twice.at(k) == p.at(k));

    const auto ps = eval_on_grid(p, g);
    const auto ss = eval_on_grid(star_reverse(p, ctx), g);
    for (int k = 0; k < g.size(); ++k) {
      CHECK(std::abs(std::abs(ps[k]) - std::abs(ss[k])) < 1e-12 * (1.0 + std::abs(ps[k])));
    }
  }
}

TEST_CASE("grid evaluation on quadrant points and against Horner") {
  const auto z = ComplexPoly::monomial(1);
  const auto s = eval_on_grid(z, Grid(4));
  CHECK(std::abs(s[0] - cplx{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(s[1] - cplx{0.0, -1.0}) < 1e-15);
  CHECK(std::abs(s[2] - cplx{1.0, 0.0}) < 1e-15);
  CHECK(std::abs(s[3] - cplx{0.0, 1.0}) < 1e-15);

  const auto zero = eval_on_grid(ComplexPoly(), Grid(8));
  for (const auto& v : zero) CHECK(v == cplx{0.0});

  std::mt19937_64 rng(31);
  const auto p = random_poly(rng, 100);
  const Grid g(1024);
  const auto samples = eval_on_grid(p, g);
  for (int t = 0; t < 20; ++t) {
    const int k = static_cast<int>(testutil::uniform01(rng) * g.size());
    const cplx direct = p.eval(cplx{std::cos(g.theta(k)), std::sin(g.theta(k))});
    CHECK(std::abs(samples[k] - direct) < 1e-12 * (1.0 + std::abs(direct)));
  }

  CHECK_THROWS_AS(eval_on_grid(random_poly(rng, 10), Grid(16)), std::invalid_argument);
}

TEST_CASE("grid evaluation stays faithful to Horner at degree 4096") {
  std::mt19937_64 rng(33);
  std::vector<cplx> c(4097);
  for (auto& v : c) v = testutil::random_unit_disk(rng);
  const ComplexPoly p(std::move(c));
  const Grid g(16384);
  const auto samples = eval_on_grid(p, g);
  // both evaluators carry rounding proportional to the polynomial's size,
  // not to the local value, so compare relative to the sup scale
  double scale = 1.0;
  for (const auto& v : samples) scale = std::max(scale, std::abs(v));
  for (int t = 0; t < 12; ++t) {
    const int k = static_cast<int>(testutil::uniform01(rng) * g.size());
    const cplx direct = p.eval(cplx{std::cos(g.theta(k)), std::sin(g.theta(k))});
    CHECK(std::abs(samples[k] - direct) < 1e-12 * scale);
  }
}

TEST_CASE("series from samples on elementary functions") {
  const Grid g(64);
  std::vector<cplx> ones(g.size(), cplx{1.0});
  const auto c = series_from_samples(ones, g, 8);
  CHECK(std::abs(c.coeff(0) - 1.0) < 1e-14);
  for (int j = 1; j <= 8; ++j) {
    CHECK(std::abs(c.coeff(j)) < 1e-14);
    CHECK(std::abs(c.coeff(-j)) < 1e-14);
  }

  std::vector<cplx> coss(g.size());
  for (int k = 0; k < g.size(); ++k) coss[k] = std::cos(g.theta(k));
  const auto cc = series_from_samples(coss, g, 4);
  CHECK(std::abs(cc.coeff(1) - 0.5) < 1e-14);
  CHECK(std::abs(cc.coeff(-1) - 0.5) < 1e-14);
  CHECK(std::abs(cc.coeff(0)) < 1e-14);
  CHECK(cc.is_real());
}

TEST_CASE("series round trip is exact for band-limited input") {
  std::mt19937_64 rng(41);
  const Grid g(128);
  TrigSeries s(10);
  for (int j = -10; j <= 10; ++j) s.set_coeff(j, testutil::random_unit_disk(rng));
  const auto samples = eval_on_grid(s, g);
  const auto back = series_from_samples(samples, g, 10);
  for (int j = -10; j <= 10; ++j) CHECK(std::abs(back.coeff(j) - s.coeff(j)) < 1e-13);

  CHECK_THROWS_AS(series_from_samples(samples, g, 64), std::invalid_argument);
}

TEST_CASE("parseval identity against grid quadrature") {
  std::mt19937_64 rng(43);
  const Grid g(512);
  TrigSeries s(20);
  for (int j = -20; j <= 20; ++j) s.set_coeff(j, testutil::random_unit_disk(rng));
  const auto samples = eval_on_grid(s, g);
  double quad = 0.0;
  for (const auto& v : samples) quad += std::norm(v);
  quad *= g.spacing();
  CHECK(std::abs(parseval_mass(s) - quad) < 1e-10 * quad);
}

TEST_CASE("multiply is exact convolution with exact bandwidth") {
  const auto prod = multiply(ComplexPoly({1.0, 1.0}), ComplexPoly({1.0, -1.0}));
  CHECK(prod.at(0) == cplx{1.0});
  CHECK(prod.at(1) == cplx{0.0});
  CHECK(prod.at(2) == cplx{-1.0});

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 8; ++trial) {
    const auto p = random_poly(rng, 5 + trial);
    const auto q = random_poly(rng, 3 + trial);
    CHECK(multiply(p, q).degree().value() == p.degree().value() + q.degree().value());
  }
}

TEST_CASE("sup norm of monomials and integrate of the unit-mass kernel") {
  for (int n : {1, 7, 33}) {
    CHECK(sup_norm(ComplexPoly::monomial(n), Grid(256)) == doctest::Approx(1.0).epsilon(1e-9));
  }

  // Triangle-multiplier kernel of order 8 as a series: own coefficients are
  // m[j] / (2 pi), so the integral is exactly m[0] = 1.
  TrigSeries fejer(7);
  for (int j = -7; j <= 7; ++j)
    fejer.set_coeff(j, (1.0 - std::abs(j) / 8.0) / kTwoPi);
  CHECK(std::abs(fejer.integrate() - 1.0) < 1e-14);
}

TEST_CASE("degree sentinel distinguishes the zero polynomial") {
  CHECK_FALSE(ComplexPoly().degree().has_value());
  CHECK_FALSE(ComplexPoly({cplx{0.0}, cplx{0.0}}).degree().has_value());
  CHECK(ComplexPoly({cplx{0.0}, cplx{1.0}, cplx{0.0}}).degree().value() == 1);
  CHECK_THROWS_AS(ComplexPoly(std::vector<cplx>{}), std::invalid_argument);
}
