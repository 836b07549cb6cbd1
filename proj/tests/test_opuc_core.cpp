#include <doctest.h>

#include <cmath>
#include <numbers>

#include "opuc/opuc_core.hpp"
#include "opuc/roots.hpp"
#include "test_util.hpp"

using namespace opuc;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

MeasureSpec lebesgue_probability(int n) {
  return constant_weight(Grid(n), 1.0 / kTwoPi, "lebesgue");
}

// Closed-form first-step truncated weight for gamma_0 = a real.
MeasureSpec one_step_weight(double a, int n) {
  const Grid g(n);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) {
    const cplx z{std::cos(g.theta(k)), std::sin(g.theta(k))};
    w[k] = (1.0 - a * a) / (kTwoPi * std::norm(z - a));
  }
  return MeasureSpec(g, std::move(w), "one-step");
}

double inner_defect(const MeasureSpec& m, const ComplexPoly& p, const ComplexPoly& q) {
  const auto ps = eval_on_grid(p, m.grid());
  const auto qs = eval_on_grid(q, m.grid());
  cplx acc = 0.0;
  for (int k = 0; k < m.grid().size(); ++k)
    acc += ps[k] * std::conj(qs[k]) * m.samples()[k];
  return std::abs(acc * m.grid().spacing());
}

}  // namespace

TEST_CASE("moments of elementary weights") {
  const auto leb = lebesgue_probability(512);
  const auto c = moments(leb, 6);
  CHECK(std::abs(c[0] - 1.0) < 1e-13);
  for (int k = 1; k <= 6; ++k) CHECK(std::abs(c[k]) < 1e-13);

  const Grid g(512);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = (1.0 + std::cos(g.theta(k))) / kTwoPi;
  const auto cm = moments(MeasureSpec(g, w, "cos"), 3);
  CHECK(std::abs(cm[1] - 0.5) < 1e-13);
  CHECK(std::abs(cm[2]) < 1e-13);

  // moment of the one-step truncated weight recovered by quadrature
  const auto bs = one_step_weight(0.5, 8192);
  const auto cb = moments(bs, 2);
  CHECK(std::abs(cb[1] - 0.5) < 1e-10);
}

TEST_CASE("degenerate measures are rejected") {
  const Grid g(256);
  std::vector<double> w(g.size(), 0.0);
  w[10] = 1.0;
  w[100] = 2.0;
  const MeasureSpec atoms(g, w, "two-atoms");
  CHECK_THROWS_AS(moments(atoms, 6), std::domain_error);
  CHECK_THROWS_AS(verblunsky_from_measure(atoms, 6), std::domain_error);
}

TEST_CASE("recursion coefficients of elementary measures") {
  const auto leb = lebesgue_probability(512);
  const auto v = verblunsky_from_measure(leb, 12);
  for (const auto& gj : v.gamma()) CHECK(std::abs(gj) < 1e-13);

  const auto bs = one_step_weight(0.5, 2048);
  const auto vb = verblunsky_from_measure(bs, 6);
  CHECK(std::abs(vb.gamma()[0] - 0.5) < 1e-10);
  for (int j = 1; j < 6; ++j) CHECK(std::abs(vb.gamma()[j]) < 1e-9);
}

TEST_CASE("first coefficient against a two-vector Gram-Schmidt oracle") {
  const Grid g(1024);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.0 + 0.5 * std::cos(g.theta(k));
  const MeasureSpec m(g, w, "unnormalized");

  // Phi_1 = z - <z,1>/<1,1>; gamma_0 = -conj(Phi_1(0))
  cplx num = 0.0;
  double den = 0.0;
  for (int k = 0; k < g.size(); ++k) {
    const cplx z{std::cos(g.theta(k)), std::sin(g.theta(k))};
    num += z * w[k];
    den += w[k];
  }
  const cplx gamma0_oracle = std::conj(num / den);

  const auto v = verblunsky_from_measure(m, 1);
  CHECK(std::abs(v.gamma()[0] - gamma0_oracle) < 1e-12);
}

TEST_CASE("szego recursion fixed points and one-step case") {
  std::vector<cplx> zeros(8, cplx{0.0});
  const auto o = szego_recursion(VerblunskySeq(zeros), 8);
  CHECK(o.phi.degree().value() == 8);
  CHECK(std::abs(o.phi.at(8) - 1.0) < 1e-15);
  CHECK(std::abs(o.phi_star.at(0) - 1.0) < 1e-15);
  CHECK(std::abs(o.psi.at(8) - 1.0) < 1e-15);

  const auto o1 = szego_recursion(VerblunskySeq({cplx{0.5}}), 1);
  const double r = 1.0 / std::sqrt(0.75);
  CHECK(std::abs(o1.phi.at(1) - r) < 1e-14);
  CHECK(std::abs(o1.phi.at(0) + 0.5 * r) < 1e-14);
}

TEST_CASE("recursion polynomials have all roots inside the disk") {
  std::mt19937_64 rng(77);
  std::vector<cplx> gam(32);
  for (auto& gj : gam) gj = testutil::random_unit_disk(rng, 0.8);
  const auto o = szego_recursion(VerblunskySeq(gam), 32);
  for (const cplx& root : poly_roots(o.phi)) CHECK(std::abs(root) < 1.0);
  // the reversed polynomial is zero-free in the closed disk
  CHECK(zero_free_in_closed_disk(o.phi_star, Grid(4096)));

  // the recursion's starred outputs coincide with the reversal operation
  const auto rev_phi = star_reverse(o.phi, 32);
  const auto rev_psi = star_reverse(o.psi, 32);
  for (int k = 0; k <= 32; ++k) {
    CHECK(std::abs(o.phi_star.at(k) - rev_phi.at(k)) < 1e-12);
    CHECK(std::abs(o.psi_star.at(k) - rev_psi.at(k)) < 1e-12);
  }
  CHECK(o.phi.at(32).real() > 0.0);
  CHECK(std::abs(o.phi.at(32).imag()) < 1e-15);
}

TEST_CASE("verblunsky sequence validates the strict bound") {
  CHECK_THROWS_AS(VerblunskySeq({cplx{1.0}}), std::invalid_argument);
  const VerblunskySeq v({cplx{0.6, 0.3}});
  CHECK(v.rho()[0] == doctest::Approx(std::sqrt(1.0 - 0.45)));
}

TEST_CASE("truncated measure reproduces and then freezes the coefficients") {
  const auto zN = szego_recursion(VerblunskySeq(std::vector<cplx>(4, cplx{0.0})), 4);
  const auto flat = bernstein_szego(zN);
  CHECK(flat.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
  for (double v : flat.samples()) CHECK(v == doctest::Approx(1.0 / kTwoPi).epsilon(1e-12));

  const auto o1 = szego_recursion(VerblunskySeq({cplx{0.5}}), 1);
  const auto bs = bernstein_szego(o1);
  const auto closed = one_step_weight(0.5, bs.grid().size());
  for (int k = 0; k < bs.grid().size(); ++k)
    CHECK(std::abs(bs.samples()[k] - closed.samples()[k]) < 1e-10);

  // moments agree through the truncation index and differ after it
  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k)
    w[k] = (1.0 + 0.3 * std::cos(g.theta(k)) + 0.2 * std::cos(3.0 * g.theta(k))) / kTwoPi;
  const MeasureSpec source(g, w, "tailful");
  const int N = 2;
  const auto v = verblunsky_from_measure(source, N);
  const auto trunc = bernstein_szego(szego_recursion(v, N));
  const auto cs = moments(source, 4);
  const auto ct = moments(trunc, 4);
  for (int k = 0; k <= N; ++k) CHECK(std::abs(cs[k] - ct[k]) < 1e-8);
  CHECK(std::abs(cs[3] - ct[3]) > 1e-4);
}

TEST_CASE("round trip through the truncated measure") {
  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k)
    w[k] = 1.0 + 0.4 * std::cos(g.theta(k)) + 0.2 * std::sin(2.0 * g.theta(k));
  const auto m = MeasureSpec(g, w, "smooth").probability();

  const int n = 64;
  const auto v = verblunsky_from_measure(m, n);
  const auto bs = bernstein_szego(szego_recursion(v, n));
  const auto v2 = verblunsky_from_measure(bs, n);
  for (int j = 0; j < n; ++j) CHECK(std::abs(v.gamma()[j] - v2.gamma()[j]) < 1e-8);
}

TEST_CASE("caratheodory function of the truncated measure") {
  std::vector<cplx> zeros(8, cplx{0.0});
  const auto o = szego_recursion(VerblunskySeq(zeros), 8);
  CHECK(std::abs(caratheodory(o, cplx{0.3, 0.2}) - 1.0) < 1e-14);

  std::mt19937_64 rng(123);
  std::vector<cplx> gam(16);
  for (auto& gj : gam) gj = testutil::random_unit_disk(rng, 0.7);
  const auto o16 = szego_recursion(VerblunskySeq(gam), 16);
  CHECK(std::abs(caratheodory(o16, cplx{0.0}) - 1.0) < 1e-12);
  for (int t = 0; t < 1000; ++t) {
    const cplx z = testutil::random_unit_disk(rng, 0.97);
    CHECK(caratheodory(o16, z).real() > 0.0);
  }
  CHECK_THROWS_AS(caratheodory(o16, cplx{1.0}), std::invalid_argument);
}

TEST_CASE("szego data constants and outer boundary identity") {
  const auto leb = lebesgue_probability(512);
  const auto d0 = szego_data(leb);
  CHECK(d0.lambda == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d0.Lambda == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& v : d0.outer) CHECK(std::abs(v - 1.0) < 1e-12);

  const auto ones = constant_weight(Grid(512), 1.0, "flat");
  const auto d1 = szego_data(ones);
  CHECK(d1.lambda == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-12));
  CHECK(d1.Lambda == doctest::Approx(std::sqrt(kTwoPi)).epsilon(1e-12));

  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.0 + 0.7 * std::sin(g.theta(k));
  // weight touches 0.3 > 0, still fine
  const auto d2 = szego_data(MeasureSpec(g, w, "sin"));
  CHECK(d2.boundary_residual < 1e-8);

  std::vector<double> bad(g.size(), 1.0);
  bad[5] = 0.0;
  CHECK_THROWS_AS(szego_data(MeasureSpec(g, bad, "zero")), std::domain_error);
}

TEST_CASE("monic-to-orthonormal ratio stays within the geometric-mean band") {
  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.0 + 0.5 * std::cos(g.theta(k));
  const auto m = MeasureSpec(g, w, "steklov").probability();
  const auto d = szego_data(m);
  for (int n : {4, 16, 48}) {
    const auto r = verblunsky_extract(m, n);
    // |Phi_n / phi_n| is the constant monic norm
    CHECK(r.monic_norm <= 1.0 + 1e-10);
    CHECK(r.monic_norm >= d.lambda - 1e-10);
  }
}

TEST_CASE("scaling law for the orthonormal and monic polynomials") {
  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.0 + 0.3 * std::cos(2.0 * g.theta(k));
  const MeasureSpec m(g, w, "base");
  const int n = 24;
  const auto base = verblunsky_extract(m, n);
  for (double alpha : {0.5, 2.0, 7.3}) {
    const auto scaled = verblunsky_extract(m.scaled(alpha), n);
    for (int k = 0; k <= n; ++k) {
      CHECK(std::abs(scaled.orthonormal.at(k) * std::sqrt(alpha) - base.orthonormal.at(k)) <
            1e-10 * (1.0 + std::abs(base.orthonormal.at(k))));
      CHECK(std::abs(scaled.monic.at(k) - base.monic.at(k)) < 1e-10);
    }
  }
}

TEST_CASE("orthonormality residuals over a full family") {
  const Grid g(1024);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) {
    const double t = g.theta(k);
    w[k] = 1.0 + 0.45 * std::cos(t) + 0.3 * std::sin(2 * t) + 0.15 * std::cos(5 * t);
  }
  const MeasureSpec m(g, w, "family");
  const int n = 16;
  const auto v = verblunsky_from_measure(m, n);
  // the recursion yields the probability-normalized family; rescale to the
  // raw measure via the scaling law
  const double scale = 1.0 / std::sqrt(m.total_mass());
  std::vector<ComplexPoly> phis;
  for (int j = 0; j <= n; ++j) phis.push_back(szego_recursion(v, j).phi.scaled(scale));
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= j; ++k) {
      const double target = j == k ? 1.0 : 0.0;
      CHECK(std::abs(inner_defect(m, phis[j], phis[k]) - target) < 1e-8);
    }
  }
}

TEST_CASE("band projection of the weighted monic polynomial vanishes") {
  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.2 + 0.5 * std::sin(g.theta(k));
  const MeasureSpec m(g, w, "proj");
  const int n = 20;
  const auto r = verblunsky_extract(m, n);
  const auto samples = eval_on_grid(r.monic, g);
  std::vector<cplx> prod(g.size());
  for (int k = 0; k < g.size(); ++k) prod[k] = samples[k] * w[k];
  const auto series = series_from_samples(prod, g, n);
  for (int j = 0; j < n; ++j) CHECK(std::abs(kTwoPi * series.coeff(j)) < 1e-8);
}

TEST_CASE("localization inequality in the trivial equal-weight case") {
  const Grid g(1024);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = (1.0 + 0.2 * std::cos(g.theta(k))) / kTwoPi;
  const MeasureSpec m(g, w, "equal");
  const auto rep = localization_bound(m, m, 0.5, 12);
  CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.rhs >= 1.0);
  CHECK(rep.holds);
}

TEST_CASE("localization precondition is enforced") {
  const Grid g(1024);
  std::vector<double> a(g.size(), 1.0), b(g.size(), 1.0);
  b[g.size() / 2] = 1.5;  // differs at theta = 0
  CHECK_THROWS_AS(
      localization_bound(MeasureSpec(g, a, "a"), MeasureSpec(g, b, "b"), 0.3, 8),
      std::invalid_argument);
}

TEST_CASE("spliced sequences concatenate") {
  const VerblunskySeq head({cplx{0.1}, cplx{0.2}});
  const VerblunskySeq tail({cplx{-0.3}});
  const auto s = VerblunskySeq::spliced(head, tail);
  CHECK(s.size() == 3);
  CHECK(s.gamma()[2] == cplx{-0.3});
}
