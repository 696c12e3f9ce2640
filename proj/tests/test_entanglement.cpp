#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hfsent/entanglement.hpp"
#include "hfsent/hydrogen.hpp"
#include "test_util.hpp"

using namespace hfsent;
using test::random_density;
using test::random_pure_state;
using test::random_unitary2;

namespace {

DensityMatrix4 projector(const Vec4& psi) {
  return DensityMatrix4{Hermitian4::symmetrized(outer(psi, psi))};
}

Vec4 basis_state(int i) {
  Vec4 v{};
  v[static_cast<size_t>(i)] = 1.0;
  return v;
}

// Independent check for states with the X (diagonal-plus-antidiagonal)
// sparsity pattern, which covers every thermal state in this project:
// C = 2 max{0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)}.
double x_state_concurrence(const DensityMatrix4& rho) {
  const double branch_inner =
      std::abs(rho(1, 2)) - std::sqrt(rho(0, 0).real() * rho(3, 3).real());
  const double branch_outer =
      std::abs(rho(0, 3)) - std::sqrt(rho(1, 1).real() * rho(2, 2).real());
  return 2.0 * std::max({0.0, branch_inner, branch_outer});
}

}  // namespace

TEST_CASE("density matrix validation") {
  CHECK_NOTHROW(DensityMatrix4{Hermitian4(Complex(0.25) * Mat4::identity())});

  // wrong trace
  CHECK_THROWS_AS(DensityMatrix4{Hermitian4(Complex(0.5) * Mat4::identity())},
                  std::invalid_argument);

  // Hermitian but indefinite
  CHECK_THROWS_AS(DensityMatrix4{Hermitian4(Mat4::diagonal(0.7, 0.5, -0.1, -0.1))},
                  std::invalid_argument);
}

TEST_CASE("spin flip: fixed points and product states") {
  const DensityMatrix4 mixed{Hermitian4(Complex(0.25) * Mat4::identity())};
  CHECK(max_abs(spin_flip(mixed).matrix() - Complex(0.25) * Mat4::identity()) < 1e-15);

  // |up up><up up| -> |down down><down down|
  const DensityMatrix4 up_up = projector(basis_state(0));
  CHECK(max_abs(spin_flip(up_up).matrix() - outer(basis_state(3), basis_state(3))) < 1e-15);

  // the singlet projector is invariant: (sy x sy)|s> = -|s> and rho is real
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec4 singlet{0.0, inv_sqrt2, -inv_sqrt2, 0.0};
  const DensityMatrix4 singlet_proj = projector(singlet);
  CHECK(max_abs(spin_flip(singlet_proj).matrix() - singlet_proj.matrix().matrix()) < 1e-15);
}

TEST_CASE("spin flip is trace preserving and an involution on real states") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix4 rho{random_density(rng)};
    const Hermitian4 flipped = spin_flip(rho);
    CHECK(trace(flipped.matrix()).real() == doctest::Approx(1.0).epsilon(1e-12));

    // real part only: build a real density matrix from rho
    Mat4 real_part;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) real_part(i, j) = 0.5 * (rho(i, j) + std::conj(rho(i, j)));
    const DensityMatrix4 real_rho{Hermitian4::symmetrized(real_part)};
    const DensityMatrix4 once{spin_flip(real_rho)};
    CHECK(max_abs(spin_flip(once).matrix() - real_rho.matrix().matrix()) <= 1e-12);
  }
}

TEST_CASE("concurrence of Bell and product states") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec4 bell_plus{0.0, inv_sqrt2, inv_sqrt2, 0.0};
  CHECK(wootters_concurrence(projector(bell_plus)) == doctest::Approx(1.0).epsilon(1e-12));

  Vec4 phi_plus{inv_sqrt2, 0.0, 0.0, inv_sqrt2};
  CHECK(wootters_concurrence(projector(phi_plus)) == doctest::Approx(1.0).epsilon(1e-12));

  for (int i = 0; i < 4; ++i)
    CHECK(wootters_concurrence(projector(basis_state(i))) <= 1e-12);

  // a generic separable product state
  std::mt19937 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const double a = dist(rng), b = dist(rng);
    Vec4 product{std::cos(a) * std::cos(b), std::cos(a) * std::sin(b), std::sin(a) * std::cos(b),
                 std::sin(a) * std::sin(b)};
    CHECK(wootters_concurrence(projector(product)) <= 1e-10);
  }
}

TEST_CASE("thermal-state concurrence matches the closed form and the X-state formula") {
  const HfsParams p(1.0, 0.0);
  const DensityMatrix4 rho{thermal_state(p)};
  CHECK(wootters_concurrence(rho) == doctest::Approx(0.89582998765503121).epsilon(1e-10));
  CHECK(std::abs(wootters_concurrence(rho) - concurrence_closed_form(p)) <= 1e-10);

  for (double t : {0.1, 0.7, 2.0, 3.6, 5.0, 12.0})
    for (double xi : {0.0, 0.4, 1.0, 7.0, 25.0}) {
      const DensityMatrix4 state{thermal_state(HfsParams(t, xi))};
      CHECK(std::abs(wootters_concurrence(state) - x_state_concurrence(state)) <= 1e-10);
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 120; ++trial) {
    const DensityMatrix4 rho{trial % 3 == 0
                                 ? thermal_state(HfsParams(0.5 + trial * 0.05, trial * 0.1))
                                 : Hermitian4{random_density(rng)}};
    const double c = wootters_concurrence(rho);

    const Mat4 u = kron(random_unitary2(rng), random_unitary2(rng));
    const DensityMatrix4 transformed{
        Hermitian4::symmetrized(u * rho.matrix().matrix() * adjoint(u))};
    CHECK(std::abs(wootters_concurrence(transformed) - c) <= 1e-9);
  }
}

TEST_CASE("pure-state concurrence equals |<psi| sy x sy |psi*>|") {
  std::mt19937 rng(31337);
  const Mat4 yy = kron(pauli_y(), pauli_y());
  for (int trial = 0; trial < 100; ++trial) {
    const Vec4 psi = random_pure_state(rng);
    Vec4 psi_conj;
    for (size_t i = 0; i < 4; ++i) psi_conj[i] = std::conj(psi[i]);
    const double expected = std::abs(inner(psi, yy * psi_conj));
    CHECK(wootters_concurrence(projector(psi)) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("concurrence stays within [0, 1]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const double c = wootters_concurrence(DensityMatrix4{random_density(rng)});
    CHECK(c >= 0.0);
    CHECK(c <= 1.0 + 1e-12);
  }
}

TEST_CASE("product route agrees with the primary route") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const DensityMatrix4 rho{random_density(rng)};
    CHECK(std::abs(wootters_concurrence(rho) - wootters_concurrence_product_route(rho)) <= 1e-8);
  }
  for (double t : {0.5, 1.0, 4.0})
    for (double xi : {0.0, 1.0, 10.0}) {
      const DensityMatrix4 rho{thermal_state(HfsParams(t, xi))};
      CHECK(std::abs(wootters_concurrence(rho) - wootters_concurrence_product_route(rho)) <= 1e-8);
    }
}

TEST_CASE("l1 coherence: diagonal states, Bell states, closed-form grid") {
  CHECK(l1_coherence(DensityMatrix4{Hermitian4(Mat4::diagonal(0.1, 0.2, 0.3, 0.4))}) == 0.0);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vec4 bell{0.0, inv_sqrt2, inv_sqrt2, 0.0};
  CHECK(l1_coherence(projector(bell)) == doctest::Approx(1.0).epsilon(1e-12));

  for (double t : {0.1, 1.0, 3.64, 10.0})
    for (double xi : {0.0, 0.3, 2.0, 16.5}) {
      const HfsParams p(t, xi);
      CHECK(std::abs(l1_coherence(DensityMatrix4{thermal_state(p)}) - coherence_closed_form(p)) <=
            1e-10);
    }
}

TEST_CASE("l1 coherence vanishes exactly iff the state is diagonal") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    // diagonal state: zero coherence
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    double w[4] = {dist(rng), dist(rng), dist(rng), dist(rng)};
    const double z = w[0] + w[1] + w[2] + w[3];
    const DensityMatrix4 diag{Hermitian4(Mat4::diagonal(w[0] / z, w[1] / z, w[2] / z, w[3] / z))};
    CHECK(l1_coherence(diag) <= 1e-12);

    // any off-diagonal entry forces positive coherence
    const DensityMatrix4 generic{random_density(rng)};
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) off = std::max(off, std::abs(generic(i, j)));
    if (off > 1e-12) CHECK(l1_coherence(generic) > 0.0);
  }
}
