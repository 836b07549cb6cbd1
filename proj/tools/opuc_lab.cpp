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

// opuc-lab: constructions, weight -> polynomial runs, and experiment suites
// for orthogonal polynomials on the unit circle.
//
// Exit codes: 0 success, 1 suite assertion failure, 2 usage/config error,
// 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "opuc/experiments.hpp"
#include "opuc/extremal.hpp"
#include "opuc/io.hpp"
#include "opuc/opuc_core.hpp"

namespace {

using json = nlohmann::ordered_json;
using opuc::io::format_double;

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

void reject_unknown_keys(const json& obj, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw CLI::ValidationError(where + ": unknown key '" + key + "'");
  }
}

json construction_to_json(const opuc::ConstructionReport& rep) {
  json j;
  j["regime"] = rep.regime;
  j["param"] = rep.param;
  if (rep.regime == "large-deviation") j["tau"] = rep.tau;
  j["n"] = rep.n;
  j["degree"] = 2 * rep.n;
  j["normalization"] = rep.normalization;
  j["upsilon"] = rep.upsilon;
  j["value_at_one"] = rep.value_at_one;
  j["interval_half_width"] = rep.interval_half_width;
  j["interval_resolvable"] = rep.interval_resolvable;
  j["mass_factor"] = rep.mass_factor;
  j["normalization_residual"] = rep.normalization_residual;
  j["route_agreement"] = rep.route_agreement;
  j["xi_modulus_defect"] = rep.xi_modulus_defect;
  j["im_base_at_one"] = rep.im_base_at_one;
  j["T_achieved"] = rep.T_achieved;
  j["deviation_constant"] = rep.deviation_constant;
  j["consistency"] = rep.decop_consistency;
  j["sigma_stats"] = {{"global_min", rep.sigma_stats.global_min},
                      {"global_max", rep.sigma_stats.global_max},
                      {"interval_min", rep.sigma_stats.interval_min},
                      {"interval_max", rep.sigma_stats.interval_max},
                      {"interval_mean", rep.sigma_stats.interval_mean}};
  json metrics = json::object();
  for (const auto& [k, v] : rep.metrics) metrics[k] = v;
  j["metrics"] = metrics;
  j["grid_n"] = rep.sigma.grid().size();
  return j;
}

void write_weight_csv(const std::string& path, const opuc::ConstructionReport& rep) {
  opuc::io::CsvWriter csv("construct-weight", {"theta", "sigma", "w1"});
  const auto& g = rep.sigma.grid();
  for (int k = 0; k < g.size(); ++k) {
    csv.add_row({format_double(g.theta(k)), format_double(rep.sigma.samples()[k]),
                 format_double(rep.clipped.samples()[k])});
  }
  opuc::io::write_file(path, csv.str());
}

void write_poly_csv(const std::string& path, const opuc::ComplexPoly& p,
                    const std::string& schema) {
  opuc::io::CsvWriter csv(schema, {"k", "re", "im"});
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    csv.add_row({std::to_string(k), format_double(p.coeffs()[k].real()),
                 format_double(p.coeffs()[k].imag())});
  }
  opuc::io::write_file(path, csv.str());
}

int cmd_construct(const std::string& regime, double eps, double alpha, int n,
                  const std::string& out_dir, bool splice, double interval_scale) {
  opuc::ConstructionReport rep =
      regime == "small" ? opuc::build_small_deviation(eps, n, splice)
                        : opuc::build_large_deviation(alpha, n, splice, interval_scale);
  const std::filesystem::path dir(out_dir);
  opuc::io::write_file((dir / "construction-report.json").string(),
                       construction_to_json(rep).dump(2) + "\n");
  write_weight_csv((dir / "weight.csv").string(), rep);
  write_poly_csv((dir / "poly.csv").string(), rep.phi, "construct-poly");
  std::cout << "construct: wrote " << out_dir
            << " (value_at_one=" << format_double(rep.value_at_one) << ")\n";
  return kExitOk;
}

opuc::MeasureSpec weight_from_spec(const json& spec) {
  reject_unknown_keys(spec, {"kind", "params", "grid", "normalize"}, "weight spec");
  const std::string kind = spec.at("kind").get<std::string>();
  const json params = spec.value("params", json::object());
  int N = 4096;
  if (spec.contains("grid")) {
    reject_unknown_keys(spec.at("grid"), {"N"}, "weight spec grid");
    N = spec.at("grid").at("N").get<int>();
  }
  const std::string normalize = spec.value("normalize", "none");
  if (normalize != "none" && normalize != "probability" && normalize != "mass-2pi")
    throw CLI::ValidationError("weight spec: bad normalize value");

  const opuc::Grid g(N);
  auto finish = [&](opuc::MeasureSpec m) {
    if (m.grid().size() != N) m = m.resampled(N);
    if (normalize == "probability") return m.probability();
    if (normalize == "mass-2pi") return m.mass_two_pi();
    return m;
  };

  if (kind == "constant") {
    reject_unknown_keys(params, {"value"}, "constant params");
    return finish(opuc::constant_weight(g, params.at("value").get<double>()));
  }
  if (kind == "trig") {
    reject_unknown_keys(params, {"c0", "cos", "sin"}, "trig params");
    const double c0 = params.at("c0").get<double>();
    const auto ac = params.value("cos", std::vector<double>{});
    const auto as = params.value("sin", std::vector<double>{});
    std::vector<double> w(g.size());
    for (int k = 0; k < g.size(); ++k) {
      double v = c0;
      for (std::size_t j = 0; j < ac.size(); ++j) v += ac[j] * std::cos((j + 1) * g.theta(k));
      for (std::size_t j = 0; j < as.size(); ++j) v += as[j] * std::sin((j + 1) * g.theta(k));
      w[k] = v;
    }
    return finish(opuc::MeasureSpec(g, std::move(w), "trig"));
  }
  if (kind == "small-deviation" || kind == "large-deviation" || kind == "clipped") {
    reject_unknown_keys(params, {"regime", "eps", "alpha", "n"}, kind + " params");
    const std::string regime = kind == "clipped"
                                   ? params.at("regime").get<std::string>()
                                   : (kind == "small-deviation" ? "small" : "large");
    const int hn = params.at("n").get<int>();
    const auto rep = regime == "small"
                         ? opuc::build_small_deviation(params.at("eps").get<double>(), hn)
                         : opuc::build_large_deviation(params.at("alpha").get<double>(), hn);
    return finish(kind == "clipped" ? rep.clipped : rep.sigma);
  }
  if (kind == "piecewise-arcs") {
    reject_unknown_keys(params, {"regime", "eps", "alpha", "arcs"}, "piecewise params");
    const std::string regime = params.at("regime").get<std::string>();
    const bool small = regime == "small" || regime == "small-deviation";
    const double p =
        small ? params.at("eps").get<double>() : params.at("alpha").get<double>();
    std::vector<opuc::ArcSpec> arcs;
    for (const auto& a : params.at("arcs")) {
      reject_unknown_keys(a, {"center", "width", "degree"}, "arc");
      arcs.push_back({a.at("center").get<double>(), a.at("width").get<double>(),
                      a.at("degree").get<int>()});
    }
    return finish(
        opuc::assemble_global_weight(small ? "small-deviation" : "large-deviation", p, arcs)
            .weight);
  }
  if (kind == "samples") {
    reject_unknown_keys(params, {"values"}, "samples params");
    auto values = params.at("values").get<std::vector<double>>();
    if (static_cast<int>(values.size()) != N)
      throw CLI::ValidationError("samples weight: values length must equal grid N");
    return finish(opuc::MeasureSpec(g, std::move(values), "samples"));
  }
  throw CLI::ValidationError("weight spec: unknown kind '" + kind + "'");
}

int cmd_opuc(const std::string& weight_path, int n, const std::string& method,
             const std::string& out_dir) {
  std::ifstream in(weight_path);
  if (!in) {
    std::cerr << "opuc: cannot open weight spec " << weight_path << "\n";
    return kExitUsage;
  }
  json spec;
  try {
    in >> spec;
  } catch (const std::exception& e) {
    std::cerr << "opuc: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  const opuc::MeasureSpec w = weight_from_spec(spec);
  const std::filesystem::path dir(out_dir);

  if (method == "fixed-point") {
    if (w.min_value() < 1.0 - 1e-9) {
      std::cerr << "opuc: fixed-point method requires a weight with 1 <= w\n";
      return kExitUsage;
    }
    const auto fp = opuc::monic_fixed_point(w, n);
    if (!fp.converged) {
      std::cerr << "opuc: fixed point did not converge (residual "
                << format_double(fp.residual) << ")\n";
      return kExitNumeric;
    }
    write_poly_csv((dir / "poly.csv").string(), fp.phi, "opuc-monic");
  } else {
    const auto r = opuc::verblunsky_extract(w, n);
    opuc::io::CsvWriter gamma("opuc-gamma", {"j", "re", "im"});
    for (int j = 0; j < r.seq.size(); ++j) {
      gamma.add_row({std::to_string(j), format_double(r.seq.gamma()[j].real()),
                     format_double(r.seq.gamma()[j].imag())});
    }
    opuc::io::write_file((dir / "gamma.csv").string(), gamma.str());
    write_poly_csv((dir / "poly.csv").string(), r.monic, "opuc-monic");
  }

  const auto data = opuc::szego_data(w);
  opuc::io::CsvWriter szego("opuc-szego", {"lambda", "Lambda"});
  szego.add_row({format_double(data.lambda), format_double(data.Lambda)});
  opuc::io::write_file((dir / "szego.csv").string(), szego.str());
  return kExitOk;
}

json load_config(const std::string& config, const std::vector<std::string>& allowed) {
  if (config.empty() || config == "default") return json::object();
  std::ifstream in(config);
  if (!in) throw CLI::ValidationError("suite: cannot open config " + config);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string("suite: bad config JSON: ") + e.what());
  }
  reject_unknown_keys(j, allowed, "suite config");
  return j;
}

int suite_growth(const json& cfg, const std::filesystem::path& dir) {
  const std::string regime = cfg.value("regime", "small");
  const double param = cfg.value("param", regime == "small" ? 0.5 : 0.8);
  const std::vector<int> n_list = cfg.value("n", std::vector<int>{32, 64, 128, 256});
  const std::vector<double> band =
      cfg.value("slope_band", regime == "small" ? std::vector<double>{0.10, 0.40}
                                                : std::vector<double>{0.25, 0.55});
  const auto scan = opuc::experiments::run_growth_scan(regime, param, n_list);

  opuc::io::CsvWriter csv("suite-growth", {"n", "degree", "value_at_one", "sup_norm"});
  std::vector<double> degrees, values;
  for (std::size_t i = 0; i < scan.n.size(); ++i) {
    csv.add_row({std::to_string(scan.n[i]), std::to_string(2 * scan.n[i]),
                 format_double(scan.value_at_one[i]), format_double(scan.sup_norm[i])});
    degrees.push_back(2.0 * scan.n[i]);
    values.push_back(scan.value_at_one[i]);
  }
  opuc::io::write_file((dir / "growth.csv").string(), csv.str());
  opuc::io::write_file((dir / "growth.svg").string(),
                       opuc::io::svg_loglog_plot("growth of |phi(1)| vs degree", degrees,
                                                 values, scan.fit.slope, scan.fit.intercept));

  const bool in_band = scan.fit.slope >= band.at(0) && scan.fit.slope <= band.at(1);
  json summary;
  summary["suite"] = "growth";
  summary["regime"] = regime;
  summary["param"] = param;
  summary["slope"] = scan.fit.slope;
  summary["slope_stderr"] = scan.fit.stderr_slope;
  summary["sup_slope"] = scan.sup_fit.slope;
  summary["band"] = band;
  summary["assertions"] = {{{"name", "slope_in_band"}, {"status", in_band ? "PASS" : "FAIL"}},
                           {{"name", "sup_dominates_value"},
                            {"status", scan.sup_dominates ? "PASS" : "FAIL"}}};
  opuc::io::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  return in_band && scan.sup_dominates ? kExitOk : kExitAssert;
}

int suite_envelope(const json& cfg, const std::filesystem::path& dir) {
  const std::vector<double> t_list = cfg.value("t", std::vector<double>{1.1, 1.5, 16.0});
  const auto rows = opuc::experiments::run_upper_lower_envelope(t_list);

  opuc::io::CsvWriter csv("suite-envelope", {"t", "regime", "param", "lower_slope",
                                             "lower_stderr", "upper_slope", "p", "status"});
  bool all_ordered = true;
  std::vector<double> ts, lows;
  for (const auto& r : rows) {
    const std::string status = r.report_only ? "REPORT" : (r.ordered ? "PASS" : "FAIL");
    if (!r.report_only && !r.ordered) all_ordered = false;
    csv.add_row({format_double(r.t), r.regime, format_double(r.param),
                 format_double(r.lower_slope), format_double(r.lower_stderr),
                 format_double(r.upper_slope), format_double(r.p), status});
    ts.push_back(r.t);
    lows.push_back(std::max(r.lower_slope, 1e-6));
  }
  opuc::io::write_file((dir / "envelope.csv").string(), csv.str());
  const auto fit = opuc::experiments::ols_loglog(ts, lows);
  opuc::io::write_file((dir / "envelope.svg").string(),
                       opuc::io::svg_loglog_plot("lower envelope slope vs t", ts, lows,
                                                 fit.slope, fit.intercept));

  json summary;
  summary["suite"] = "envelope";
  summary["all_ordered"] = all_ordered;
  opuc::io::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  return all_ordered ? kExitOk : kExitAssert;
}

int suite_localization(const json& cfg, const std::filesystem::path& dir) {
  const std::vector<int> n_list = cfg.value("n", std::vector<int>{8, 16, 32, 64});
  const auto suite = opuc::experiments::run_localization_suite(n_list);

  opuc::io::CsvWriter csv("suite-localization",
                          {"case", "n", "lhs", "rhs", "swapped_lhs", "band_constant", "status"});
  for (const auto& c : suite.cases) {
    const std::string status =
        !c.precondition_ok ? "PRECONDITION" : (c.holds ? "PASS" : "FAIL");
    csv.add_row({c.name, std::to_string(c.n), format_double(c.lhs), format_double(c.rhs),
                 format_double(c.swapped_lhs), format_double(c.band_constant), status});
  }
  opuc::io::write_file((dir / "localization.csv").string(), csv.str());

  json summary;
  summary["suite"] = "localization";
  summary["all_hold"] = suite.all_hold;
  summary["cases"] = suite.cases.size();
  opuc::io::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  return suite.all_hold ? kExitOk : kExitAssert;
}

int suite_appendix(const json& cfg, const std::filesystem::path& dir) {
  const std::vector<double> eps = cfg.value("eps", std::vector<double>{0.2, 0.35, 0.5});
  const std::vector<double> alpha = cfg.value("alpha", std::vector<double>{0.8});
  const std::vector<int> n_list = cfg.value("n", std::vector<int>{256, 1024});
  const auto rep = opuc::experiments::run_appendix_suites(eps, alpha, n_list);

  opuc::io::CsvWriter csv("suite-appendix",
                          {"check", "value", "floor", "ceiling", "status", "first_n_pass"});
  for (const auto& c : rep.checks) {
    const std::string status = c.report_only ? "REPORT" : (c.pass ? "PASS" : "FAIL");
    csv.add_row({c.name, format_double(c.value), format_double(c.floor),
                 format_double(c.ceiling), status, std::to_string(c.first_n_pass)});
  }
  opuc::io::write_file((dir / "appendix.csv").string(), csv.str());

  json summary;
  summary["suite"] = "appendix";
  summary["all_pass"] = rep.all_pass;
  summary["checks"] = rep.checks.size();
  opuc::io::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  return rep.all_pass ? kExitOk : kExitAssert;
}

int suite_szego(const json& cfg, const std::filesystem::path& dir) {
  const std::vector<int> n_list = cfg.value("n", std::vector<int>{16, 32, 64, 128});
  const int grid_n = cfg.value("grid", 4096);
  const opuc::Grid g(grid_n);
  std::vector<double> w(g.size());
  for (int k = 0; k < g.size(); ++k) w[k] = 1.0 + 0.3 * std::cos(g.theta(k));
  const auto m = opuc::MeasureSpec(g, std::move(w), "smooth").probability();
  const auto rep = opuc::experiments::run_szego_asymptotics(m, n_list, true);

  opuc::io::CsvWriter csv("suite-szego", {"n", "residual", "sup_over_sqrt_n"});
  for (const auto& r : rep.rows) {
    csv.add_row({std::to_string(r.n), format_double(r.residual),
                 format_double(r.sup_over_sqrt_n)});
  }
  opuc::io::write_file((dir / "szego.csv").string(), csv.str());

  const bool shrink = rep.rows.back().residual < rep.rows.front().residual;
  json summary;
  summary["suite"] = "szego";
  summary["decreasing_ok"] = rep.decreasing_ok;
  summary["last_smaller_than_first"] = shrink;
  opuc::io::write_file((dir / "summary.json").string(), summary.dump(2) + "\n");
  return rep.decreasing_ok && shrink ? kExitOk : kExitAssert;
}

int cmd_suite(const std::string& name, const std::string& config, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  if (name == "growth")
    return suite_growth(load_config(config, {"regime", "param", "n", "slope_band"}), dir);
  if (name == "envelope") return suite_envelope(load_config(config, {"t"}), dir);
  if (name == "localization") return suite_localization(load_config(config, {"n"}), dir);
  if (name == "appendix") return suite_appendix(load_config(config, {"eps", "alpha", "n"}), dir);
  if (name == "szego") return suite_szego(load_config(config, {"n", "grid"}), dir);
  std::cerr << "suite: unknown suite '" << name << "'\n";
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opuc-lab: orthogonal polynomials on the unit circle"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "run an extremal weight construction");
  std::string regime;
  double eps = 0.5, alpha = 0.8, interval_scale = 0.1;
  int n = 64;
  std::string out_dir = ".";
  bool no_splice = false;
  construct->add_option("--regime", regime, "small | large")
      ->required()
      ->check(CLI::IsMember({"small", "large"}));
  construct->add_option("--eps", eps, "deviation parameter, small regime (feasible 0.4..1)");
  construct->add_option("--alpha", alpha, "exponent parameter, large regime (1/2..1)");
  construct->add_option("--n", n, "construction half-degree (even); polynomial degree is 2n")
      ->required();
  construct->add_option("--out", out_dir, "output directory")->required();
  construct->add_flag("--no-splice", no_splice, "skip the recursion-splice consistency check");
  construct->add_option("--interval-scale", interval_scale,
                        "clip-interval scale factor, large regime only (default 0.1)");

  auto* opuc_cmd = app.add_subcommand("opuc", "weight -> recursion coefficients/polynomials");
  std::string weight_path, method = "recursion";
  int opuc_n = 32;
  std::string opuc_out = ".";
  opuc_cmd->add_option("--weight", weight_path, "weight spec JSON file")->required();
  opuc_cmd->add_option("--n", opuc_n, "polynomial degree")->required();
  opuc_cmd->add_option("--method", method, "recursion | fixed-point")
      ->check(CLI::IsMember({"recursion", "fixed-point"}));
  opuc_cmd->add_option("--out", opuc_out, "output directory")->required();

  auto* suite = app.add_subcommand("suite", "run an experiment suite");
  std::string suite_name, suite_config = "default", suite_out = ".";
  suite->add_option("--name", suite_name, "growth | envelope | localization | appendix | szego")
      ->required();
  suite->add_option("--config", suite_config, "config JSON file or 'default'");
  suite->add_option("--out", suite_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      if (n <= 0 || n % 2 != 0) {
        std::cerr << "construct: --n must be a positive even integer\n";
        return kExitUsage;
      }
      return cmd_construct(regime, eps, alpha, n, out_dir, !no_splice, interval_scale);
    }
    if (opuc_cmd->parsed()) return cmd_opuc(weight_path, opuc_n, method, opuc_out);
    if (suite->parsed()) return cmd_suite(suite_name, suite_config, suite_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
