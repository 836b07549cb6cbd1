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

#include "opuc/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opuc/kern.hpp"

namespace opuc {

ComplexPoly::ComplexPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("ComplexPoly: empty coefficient vector");
}

ComplexPoly ComplexPoly::monomial(int k, cplx c) {
  if (k < 0) throw std::invalid_argument("ComplexPoly::monomial: negative degree");
  std::vector<cplx> v(k + 1, cplx{0.0});
  v[k] = c;
  return ComplexPoly(std::move(v));
}

std::optional<int> ComplexPoly::degree() const {
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k] != cplx{0.0}) return k;
  }
  return std::nullopt;
}

cplx ComplexPoly::leading_coeff() const {
  const auto d = degree();
  return d ? coeffs_[*d] : cplx{0.0};
}

cplx ComplexPoly::eval(cplx z) const {
  cplx acc{0.0};
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

ComplexPoly ComplexPoly::conjugated() const {
  std::vector<cplx> v(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = std::conj(coeffs_[k]);
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::scaled(cplx a) const {
  std::vector<cplx> v(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = a * coeffs_[k];
  return ComplexPoly(std::move(v));
}

ComplexPoly ComplexPoly::truncated(int max_degree) const {
  if (max_degree < 0) return ComplexPoly();
  std::vector<cplx> v(coeffs_.begin(),
                      coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), max_degree + 1));
  if (v.empty()) v.push_back(cplx{0.0});
  return ComplexPoly(std::move(v));
}

ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q) {
  std::vector<cplx> v(std::max(p.coeffs_.size(), q.coeffs_.size()), cplx{0.0});
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) v[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) v[k] += q.coeffs_[k];
  return ComplexPoly(std::move(v));
}

ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q) {
  std::vector<cplx> v(std::max(p.coeffs_.size(), q.coeffs_.size()), cplx{0.0});
  for (std::size_t k = 0; k < p.coeffs_.size(); ++k) v[k] += p.coeffs_[k];
  for (std::size_t k = 0; k < q.coeffs_.size(); ++k) v[k] -= q.coeffs_[k];
  return ComplexPoly(std::move(v));
}

ComplexPoly star_reverse(const ComplexPoly& p, int n) {
  if (n < 0) throw std::invalid_argument("star_reverse: negative context degree");
  const auto d = p.degree();
  if (d && *d > n)
    throw std::invalid_argument("star_reverse: polynomial degree exceeds context n");
  std::vector<cplx> v(n + 1, cplx{0.0});
  for (int k = 0; k <= n; ++k) v[k] = std::conj(p.at(n - k));
  return ComplexPoly(std::move(v));
}

ComplexPoly multiply(const ComplexPoly& p, const ComplexPoly& q) {
  const auto cp = p.coeffs();
  const auto cq = q.coeffs();
  std::vector<cplx> v(cp.size() + cq.size() - 1, cplx{0.0});
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (cp[i] == cplx{0.0}) continue;
    for (std::size_t j = 0; j < cq.size(); ++j) v[i + j] += cp[i] * cq[j];
  }
  return ComplexPoly(std::move(v));
}

std::vector<cplx> eval_on_grid(const ComplexPoly& p, const Grid& g) {
  const int n = g.size();
  const int deg = p.degree().value_or(0);
  if (n < 2 * deg + 2)
    throw std::invalid_argument("eval_on_grid: grid too small for polynomial degree");

  // p(e^{i theta_k}) = sum_j c_j (-1)^j e^{2 pi i j k / N}: inverse DFT of the
  // sign-twisted coefficients, no 1/N.
  std::vector<cplx> buf(n, cplx{0.0});
  const auto c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    buf[j % n] += (j % 2 == 0) ? c[j] : -c[j];
  }
  fft::transform(buf, +1);
  return buf;
}

double sup_norm(const ComplexPoly& p, const Grid& g) {
  const int deg = p.degree().value_or(0);
  int n = std::max<int>(g.size(), static_cast<int>(fft::next_pow2(4u * (deg + 1))));

  auto grid_max = [&p](int size) {
    const auto samples = eval_on_grid(p, Grid(size));
    std::vector<double> m(samples.size());
    kern::ops().mag2(m.data(), samples.data(), samples.size());
    return std::sqrt(*std::max_element(m.begin(), m.end()));
  };

  double prev = grid_max(n);
  while (n < (1 << 20)) {
    n *= 2;
    const double cur = grid_max(n);
    if (std::abs(cur - prev) <= 1e-6 * std::max(cur, 1e-300)) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace opuc
