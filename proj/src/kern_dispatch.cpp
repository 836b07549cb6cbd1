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

#include <cstdlib>

#include "opuc/kern.hpp"

namespace opuc::kern {

#if defined(OPUC_BUILD_AVX2) && defined(__x86_64__)
const Ops* avx2_ops_impl();
#endif

const Ops* avx2_ops() {
#if defined(OPUC_BUILD_AVX2) && defined(__x86_64__)
  if (__builtin_cpu_supports("avx2")) return avx2_ops_impl();
#endif
  return nullptr;
}

const Ops& ops() {
  static const Ops* selected = [] {
    const char* force = std::getenv("OPUC_FORCE_SCALAR");
    if (force != nullptr && force[0] == '1') return &scalar_ops();
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
  }();
  return *selected;
}

}  // namespace opuc::kern
