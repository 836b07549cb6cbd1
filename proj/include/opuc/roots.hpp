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

#include <vector>

#include "opuc/complex_poly.hpp"

namespace opuc {

/// All roots of p via balanced companion-matrix eigenvalues.
/// Intended for degrees up to a few hundred.
std::vector<cplx> poly_roots(const ComplexPoly& p);

/// Number of zeros of p inside the unit disk counted by the winding of
/// p(e^{i theta}) over the grid (argument principle).  Requires p zero-free
/// on the circle and the grid fine enough that arg increments stay below pi.
int zeros_inside_unit_disk(const ComplexPoly& p, const Grid& g);

/// True when every root has modulus > 1 + margin.  Uses companion-matrix
/// roots up to degree 256 and the winding count beyond.
bool zero_free_in_closed_disk(const ComplexPoly& p, const Grid& g, double margin = 0.0);

}  // namespace opuc
