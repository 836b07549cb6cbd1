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

#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "opuc/grid.hpp"

namespace opuc {

using cplx = std::complex<double>;

/// Dense polynomial in the open-disk variable z, coeffs[k] * z^k.
/// Immutable value type; every operation returns a new polynomial.
class ComplexPoly {
 public:
  ComplexPoly() : coeffs_(1, cplx{0.0}) {}
  explicit ComplexPoly(std::vector<cplx> coeffs);

  static ComplexPoly constant(cplx c) { return ComplexPoly({c}); }
  static ComplexPoly monomial(int k, cplx c = 1.0);

  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Largest index with a nonzero coefficient; nullopt is the "minus
  /// infinity" degree of the zero polynomial.
  std::optional<int> degree() const;

  /// coeffs[k], or 0 beyond the stored length.
  cplx at(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : cplx{0.0};
  }

  cplx leading_coeff() const;

  /// Horner evaluation.
  cplx eval(cplx z) const;

  cplx operator()(cplx z) const { return eval(z); }

  ComplexPoly conjugated() const;
  ComplexPoly scaled(cplx a) const;
  ComplexPoly truncated(int max_degree) const;

  friend ComplexPoly operator+(const ComplexPoly& p, const ComplexPoly& q);
  friend ComplexPoly operator-(const ComplexPoly& p, const ComplexPoly& q);

 private:
  std::vector<cplx> coeffs_;
};

/// Degree-indexed reversal Q*(z) = conj(q_0) z^n + ... + conj(q_n).
/// The context n matters: applying twice with the same n is the identity.
/// Throws std::invalid_argument when degree(p) > n.
ComplexPoly star_reverse(const ComplexPoly& p, int n);

/// Exact coefficient convolution.
ComplexPoly multiply(const ComplexPoly& p, const ComplexPoly& q);

/// Samples p(e^{i theta_k}) over the grid via a zero-padded transform.
/// Requires g.size() >= 2*degree + 2 (aliasing).
std::vector<cplx> eval_on_grid(const ComplexPoly& p, const Grid& g);

/// Grid maximum of |p| with refinement doubling until the relative change
/// drops below 1e-6; a lower bound on the true sup norm.
double sup_norm(const ComplexPoly& p, const Grid& g);

}  // namespace opuc
