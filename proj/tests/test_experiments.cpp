#include <doctest.h>

#include <cmath>
#include <numbers>

#include "opuc/experiments.hpp"

using namespace opuc;
using namespace opuc::experiments;

TEST_CASE("least squares recovers exact linear and power-law data") {
  std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0};
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = 2.5 * x[i] + 1.0;
  const auto lin = ols_fit(x, y);
  CHECK(lin.slope == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(lin.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lin.stderr_slope == doctest::Approx(0.0).epsilon(1e-10));

  std::vector<double> xp = {2.0, 4.0, 8.0, 16.0};
  std::vector<double> yp(xp.size());
  for (std::size_t i = 0; i < xp.size(); ++i) yp[i] = 3.0 * std::pow(xp[i], 0.7);
  const auto pw = ols_loglog(xp, yp);
  CHECK(pw.slope == doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS(ols_fit(std::vector<double>{1.0}, std::vector<double>{1.0}),
                  std::invalid_argument);
}

TEST_CASE("random weights are deterministic and respect their bounds") {
  const Grid g(512);
  const auto a = random_trig_weight(42, g, 0.2, 5.0);
  const auto b = random_trig_weight(42, g, 0.2, 5.0);
  for (int k = 0; k < g.size(); ++k) CHECK(a.samples()[k] == b.samples()[k]);
  CHECK(a.min_value() >= 0.2 - 1e-12);
  CHECK(a.max_value() <= 5.0 + 1e-12);
  const auto c = random_trig_weight(43, g, 0.2, 5.0);
  bool differs = false;
  for (int k = 0; k < g.size(); ++k) differs = differs || a.samples()[k] != c.samples()[k];
  CHECK(differs);
}

TEST_CASE("control growth scan of the flat weight has zero slope") {
  const auto scan = run_growth_scan("constant", 1.0, {4, 8, 16, 32});
  CHECK(std::abs(scan.fit.slope) < 0.01);
  for (double v : scan.value_at_one) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(scan.sup_dominates);
}

TEST_CASE("growth scans are deterministic across reruns") {
  const auto a = run_growth_scan("small", 0.5, {8, 16, 32, 64});
  const auto b = run_growth_scan("small", 0.5, {8, 16, 32, 64});
  CHECK(a.fit.slope == b.fit.slope);
  for (std::size_t i = 0; i < a.value_at_one.size(); ++i) {
    CHECK(a.value_at_one[i] == b.value_at_one[i]);
    CHECK(a.sup_norm[i] == b.sup_norm[i]);
  }
}

TEST_CASE("growth scan input validation") {
  CHECK_THROWS_AS(run_growth_scan("small", 0.5, {8, 16, 32}), std::invalid_argument);
  CHECK_THROWS_AS(run_growth_scan("small", 0.5, {8, 16, 16, 32}), std::invalid_argument);
}

TEST_CASE("localization suite holds on a reduced degree set") {
  const auto suite = run_localization_suite({8, 16});
  CHECK(suite.all_hold);
  for (const auto& c : suite.cases) {
    CHECK(c.precondition_ok);
    CHECK(c.lhs <= c.rhs);
    CHECK(c.swapped_lhs > 0.0);
  }
}

TEST_CASE("appendix suite passes at reduced order") {
  const auto rep = run_appendix_suites({0.35, 0.5}, {0.8}, {256});
  CHECK(rep.all_pass);
  bool saw_band = false;
  for (const auto& c : rep.checks) {
    if (c.name.rfind("lemma1_envelope_re", 0) == 0) {
      saw_band = true;
      CHECK(c.value < 25.0);
      CHECK(c.first_n_pass > 0);
    }
  }
  CHECK(saw_band);
}

TEST_CASE("szego residuals vanish identically for the flat probability weight") {
  const auto leb = constant_weight(Grid(1024), 1.0 / (2.0 * std::numbers::pi), "flat");
  const auto rep = run_szego_asymptotics(leb, {4, 16, 64}, false);
  for (const auto& row : rep.rows) CHECK(row.residual < 1e-12);
}

TEST_CASE("szego residuals decrease for a smooth weight") {
  const Grid g(2048);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.0 + 0.3 * std::cos(g.theta(k));
  const auto m = MeasureSpec(g, std::move(w), "smooth").probability();
  const auto rep = run_szego_asymptotics(m, {4, 8, 16, 128}, true);
  CHECK(rep.decreasing_ok);
  CHECK(rep.rows.back().residual < rep.rows.front().residual);
  // the sup norm of the polynomials stays far below sqrt(n)
  CHECK(rep.rows.back().sup_over_sqrt_n < 0.5);
}

TEST_CASE("envelope rows are ordered at a feasible parameter") {
  const auto rows = run_upper_lower_envelope({1.5});
  REQUIRE(rows.size() == 1u);
  CHECK(rows[0].regime == "small");
  CHECK_FALSE(rows[0].report_only);
  CHECK(rows[0].ordered);
  CHECK(rows[0].lower_slope > 0.0);
}
