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

#include "opuc/roots.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opuc {

std::vector<cplx> poly_roots(const ComplexPoly& p) {
  const auto deg_opt = p.degree();
  if (!deg_opt) throw std::invalid_argument("poly_roots: zero polynomial");
  const int deg = *deg_opt;
  if (deg == 0) return {};

  const cplx lead = p.at(deg);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p.at(i) / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots: eigensolver failed to converge");

  const auto& ev = solver.eigenvalues();
  std::vector<cplx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = ev(i);
  return roots;
}

int zeros_inside_unit_disk(const ComplexPoly& p, const Grid& g) {
  // Refine the grid until every arg increment is safely below pi; roots just
  // outside the circle make the phase swing fast near their projections.
  for (int n = g.size(); n <= (1 << 21); n *= 2) {
    const auto samples = eval_on_grid(p, Grid(n));
    double total = 0.0;
    bool coarse = false;
    for (int k = 0; k < n && !coarse; ++k) {
      const cplx a = samples[k];
      const cplx b = samples[(k + 1) % n];
      if (a == cplx{0.0} || b == cplx{0.0})
        throw std::runtime_error("zeros_inside_unit_disk: zero on the circle");
      const double d = std::arg(b / a);
      if (std::abs(d) > 0.9 * std::numbers::pi) {
        coarse = true;
        break;
      }
      total += d;
    }
    if (!coarse) return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
  }
  throw std::runtime_error("zeros_inside_unit_disk: grid too coarse for winding count");
}

bool zero_free_in_closed_disk(const ComplexPoly& p, const Grid& g, double margin) {
  const auto deg = p.degree();
  if (!deg) return false;
  if (*deg == 0) return true;
  if (*deg <= 256) {
    for (const cplx& r : poly_roots(p)) {
      if (std::abs(r) <= 1.0 + margin) return false;
    }
    return true;
  }
  return zeros_inside_unit_disk(p, g) == 0;
}

}  // namespace opuc
