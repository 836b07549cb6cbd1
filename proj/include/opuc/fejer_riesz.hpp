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

#include "opuc/complex_poly.hpp"
#include "opuc/trig_series.hpp"

namespace opuc {

/// Spectral factor of a strictly positive trigonometric polynomial t of
/// degree <= n-1: returns q in P_{n-1} with |q|^2 = t on the circle,
/// q zero-free in the closed disk, q(0) > 0 real.
///
/// Primary path is cepstral (exp of the analytic half of log t); when the
/// factorization residual exceeds tolerance the routine falls back to
/// reflecting the roots of the Laurent lift outside the disk.
/// Throws std::invalid_argument for inputs that are not real and strictly
/// positive, std::runtime_error when both paths miss the residual target.
ComplexPoly fejer_riesz(const TrigSeries& t, int n);

}  // namespace opuc
