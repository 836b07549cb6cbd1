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

#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "opuc/fft.hpp"

namespace opuc {

/// Uniform angular grid theta_k = -pi + 2*pi*k/N, N a power of two.
class Grid {
 public:
  explicit Grid(int n) : n_(n) {
    if (n < 4 || !fft::is_pow2(static_cast<std::size_t>(n)))
      throw std::invalid_argument("Grid: size must be a power of two >= 4");
  }

  int size() const { return n_; }

  double theta(int k) const {
    return -std::numbers::pi + 2.0 * std::numbers::pi * k / n_;
  }

  double spacing() const { return 2.0 * std::numbers::pi / n_; }

  std::vector<double> thetas() const {
    std::vector<double> t(n_);
    for (int k = 0; k < n_; ++k) t[k] = theta(k);
    return t;
  }

  std::vector<fft::cplx> points() const {
    std::vector<fft::cplx> z(n_);
    for (int k = 0; k < n_; ++k) {
      const double t = theta(k);
      z[k] = {std::cos(t), std::sin(t)};
    }
    return z;
  }

  /// Default grid for computations at polynomial degree `deg`:
  /// N = max(4096, 16*deg) rounded up to a power of two.  OPUC_GRID_N
  /// overrides the default but is clamped below at the aliasing-safe size.
  static Grid for_degree(int deg) {
    std::size_t n = fft::next_pow2(std::max<std::size_t>(4096, 16u * std::max(deg, 1)));
    if (const char* env = std::getenv("OPUC_GRID_N")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v > 0 && fft::is_pow2(static_cast<std::size_t>(v)))
        n = std::max<std::size_t>(static_cast<std::size_t>(v),
                                  fft::next_pow2(2u * std::max(deg, 1) + 2));
    }
    return Grid(static_cast<int>(n));
  }

  bool operator==(const Grid& other) const { return n_ == other.n_; }

 private:
  int n_;
};

}  // namespace opuc
