#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "nonindiv/simd/kernels.hpp"

using namespace nonindiv::simd;

namespace {

struct Bodies {
  std::vector<double> x, y, z, m;
  BodiesView view() const { return {x, y, z, m}; }
};

Bodies random_bodies(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> pos(-10.0, 10.0);
  std::uniform_real_distribution<double> mass(0.1, 5.0);
  Bodies b;
  for (std::size_t i = 0; i < n; ++i) {
    b.x.push_back(pos(rng));
    b.y.push_back(pos(rng));
    b.z.push_back(pos(rng));
    b.m.push_back(mass(rng));
  }
  return b;
}

}  // namespace

TEST_CASE("scalar gravity kernel on a two-body configuration") {
  Bodies b{{0.0, 2.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 3.0}};
  std::vector<double> ax(2), ay(2), az(2);
  scalar::gravity_accelerations(b.view(), 1.0, {ax, ay, az});
  CHECK(ax[0] == doctest::Approx(0.75));   // 3 / 2^2 toward +x
  CHECK(ax[1] == doctest::Approx(-0.25));  // 1 / 2^2 toward -x
  CHECK(ay[0] == 0.0);
  CHECK(az[1] == 0.0);
}

TEST_CASE("scalar overlap kernel") {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<std::complex<double>> basis{{1, 0}, {0, 0}, {0, 0}, {1, 0}};
  const std::vector<std::complex<double>> u{{r, 0}, {0, r}};
  std::vector<double> p(2);
  scalar::overlap_probabilities(basis, u, p);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));
}

#ifdef NONINDIV_HAVE_AVX2_KERNELS
TEST_CASE("AVX2 gravity kernel matches the scalar reference") {
  if (detected_isa() != Isa::Avx2) return;
  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 2, 3, 4, 5, 7, 8, 9, 16, 33, 100}) {
    const Bodies b = random_bodies(rng, n);
    std::vector<double> sx(n), sy(n), sz(n), vx(n), vy(n), vz(n);
    scalar::gravity_accelerations(b.view(), 0.7, {sx, sy, sz});
    avx2::gravity_accelerations(b.view(), 0.7, {vx, vy, vz});
    for (std::size_t i = 0; i < n; ++i) {
      const double scale = std::abs(sx[i]) + std::abs(sy[i]) + std::abs(sz[i]) + 1e-300;
      CHECK(std::abs(sx[i] - vx[i]) <= 1e-12 * scale);
      CHECK(std::abs(sy[i] - vy[i]) <= 1e-12 * scale);
      CHECK(std::abs(sz[i] - vz[i]) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("AVX2 overlap kernel matches the scalar reference") {
  if (detected_isa() != Isa::Avx2) return;
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (std::size_t dim : {1, 2, 3, 4, 5, 8, 17}) {
    const std::size_t rows = dim + 1;
    std::vector<std::complex<double>> basis(rows * dim), u(dim);
    for (auto& c : basis) c = {g(rng), g(rng)};
    for (auto& c : u) c = {g(rng), g(rng)};
    std::vector<double> ps(rows), pv(rows);
    scalar::overlap_probabilities(basis, u, ps);
    avx2::overlap_probabilities(basis, u, pv);
    for (std::size_t k = 0; k < rows; ++k) CHECK(pv[k] == doctest::Approx(ps[k]).epsilon(1e-12));
  }
}
#endif

TEST_CASE("dispatch can be forced to the scalar path and back") {
  const Isa before = active_isa();
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  Bodies b{{0.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}};
  std::vector<double> ax(2), ay(2), az(2);
  gravity_accelerations(b.view(), 1.0, {ax, ay, az});
  CHECK(ax[0] == 1.0);
  CHECK(ax[1] == -1.0);
  if (detected_isa() == Isa::Avx2) force_isa(Isa::Avx2);
  force_isa(before);
  CHECK(std::string(isa_name(Isa::Avx2)) == "avx2");
}
