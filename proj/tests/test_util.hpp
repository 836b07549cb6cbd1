#pragma once

#include <complex>
#include <random>
#include <vector>

#include "opuc/complex_poly.hpp"
#include "opuc/measure.hpp"

namespace testutil {

using opuc::cplx;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline cplx random_unit_disk(std::mt19937_64& rng, double radius = 1.0) {
  while (true) {
    const double x = 2.0 * uniform01(rng) - 1.0;
    const double y = 2.0 * uniform01(rng) - 1.0;
    if (x * x + y * y <= 1.0) return radius * cplx{x, y};
  }
}

inline opuc::ComplexPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<cplx> c(degree + 1);
  for (auto& v : c) v = {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
  if (c.back() == cplx{0.0}) c.back() = 1.0;
  return opuc::ComplexPoly(std::move(c));
}

// Grid quadrature of |f|^p d theta from samples.
inline double grid_p_norm(const std::vector<cplx>& samples, const opuc::Grid& g, double p) {
  double acc = 0.0;
  for (const auto& v : samples) acc += std::pow(std::abs(v), p);
  return std::pow(acc * g.spacing(), 1.0 / p);
}

}  // namespace testutil
