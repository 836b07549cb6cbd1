#include <doctest.h>

#include <random>

#include "opuc/kern.hpp"
#include "test_util.hpp"

using namespace opuc;

namespace {

struct Arrays {
  std::vector<kern::cplx> a, b;
  std::vector<double> r;
};

Arrays random_arrays(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Arrays out;
  out.a.resize(n);
  out.b.resize(n);
  out.r.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.a[i] = testutil::random_unit_disk(rng, 3.0);
    out.b[i] = testutil::random_unit_disk(rng, 3.0);
    out.r[i] = 0.25 + testutil::uniform01(rng);
  }
  return out;
}

void check_equivalence(const kern::Ops& lhs, const kern::Ops& rhs, std::size_t n,
                       std::uint64_t seed) {
  const auto in = random_arrays(n, seed);
  std::vector<kern::cplx> ca(n), cb(n);
  std::vector<double> da(n), db(n);

  lhs.mul_cc(ca.data(), in.a.data(), in.b.data(), n);
  rhs.mul_cc(cb.data(), in.a.data(), in.b.data(), n);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(ca[i] - cb[i]) <= 1e-13 * (1.0 + std::abs(ca[i])));

  lhs.mul_rc(ca.data(), in.r.data(), in.a.data(), n);
  rhs.mul_rc(cb.data(), in.r.data(), in.a.data(), n);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(ca[i] - cb[i]) <= 1e-13 * (1.0 + std::abs(ca[i])));

  lhs.mag2(da.data(), in.a.data(), n);
  rhs.mag2(db.data(), in.a.data(), n);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(da[i] - db[i]) <= 1e-13 * (1.0 + da[i]));

  const kern::cplx alpha{0.3, -1.2}, beta{-0.7, 0.4};
  lhs.axpby_cc(ca.data(), alpha, in.a.data(), beta, in.b.data(), n);
  rhs.axpby_cc(cb.data(), alpha, in.a.data(), beta, in.b.data(), n);
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(ca[i] - cb[i]) <= 1e-13 * (1.0 + std::abs(ca[i])));

  lhs.recip_scale(da.data(), in.r.data(), 2.5, n);
  rhs.recip_scale(db.data(), in.r.data(), 2.5, n);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(da[i] - db[i]) <= 1e-13 * (1.0 + da[i]));
}

}  // namespace

TEST_CASE("scalar kernels are self-consistent on the complex-times-real identity") {
  const auto& s = kern::scalar_ops();
  const std::size_t n = 37;
  const auto in = random_arrays(n, 5);
  std::vector<kern::cplx> viac(n), viar(n);
  std::vector<kern::cplx> rc(n);
  for (std::size_t i = 0; i < n; ++i) rc[i] = in.r[i];
  s.mul_cc(viac.data(), rc.data(), in.a.data(), n);
  s.mul_rc(viar.data(), in.r.data(), in.a.data(), n);
  for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(viac[i] - viar[i]) < 1e-15);
}

TEST_CASE("simd kernels agree with the scalar reference") {
  const auto* simd = kern::avx2_ops();
  if (simd == nullptr) {
    MESSAGE("AVX2 unavailable on this host; dispatch falls back to scalar");
    CHECK(std::string(kern::ops().name) == "scalar");
    return;
  }
  // odd lengths exercise the scalar tails
  for (std::size_t n : {1u, 2u, 3u, 8u, 63u, 64u, 1023u}) {
    check_equivalence(kern::scalar_ops(), *simd, n, 100 + n);
  }
}

TEST_CASE("runtime dispatch selects a valid implementation") {
  const auto& active = kern::ops();
  CHECK((std::string(active.name) == "scalar" || std::string(active.name) == "avx2"));
  // whatever was selected must agree with the reference
  check_equivalence(kern::scalar_ops(), active, 257, 999);
}
