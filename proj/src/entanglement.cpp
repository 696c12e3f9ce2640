#include "hfsent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hfsent {

namespace {

constexpr double kTraceTolerance = 1e-12;

const Mat4& spin_flip_operator() {
  static const Mat4 yy = kron(pauli_y(), pauli_y());  // antidiag(-1, 1, 1, -1)
  return yy;
}

double concurrence_from_descending(const std::array<double, 4>& lambda_desc) {
  return std::max(0.0, lambda_desc[0] - lambda_desc[1] - lambda_desc[2] - lambda_desc[3]);
}

}  // namespace

DensityMatrix4::DensityMatrix4(const Hermitian4& rho) : rho_(rho) {
  const double tr = trace(rho.matrix()).real();
  if (std::abs(tr - 1.0) > kTraceTolerance)
    throw std::invalid_argument("DensityMatrix4: trace must be 1");
  const EigenSystem4 es = eigendecompose_hermitian(rho);
  if (es.eigenvalues[0] < -kPsdClampTolerance)
    throw std::invalid_argument("DensityMatrix4: matrix is not positive semidefinite");
}

Hermitian4 spin_flip(const DensityMatrix4& rho) {
  const Mat4& yy = spin_flip_operator();
  return Hermitian4::symmetrized(yy * conjugate(rho.matrix().matrix()) * yy);
}

double wootters_concurrence(const DensityMatrix4& rho) {
  // Spectrum of R = sqrt(sqrt(rho) rho~ sqrt(rho)), evaluated in the
  // eigenbasis of rho: with rho = V L V^dag the eigenvalues of R^2 are those
  // of the congruence sqrt(L) (V^dag rho~ V) sqrt(L), whose entries keep the
  // small thermal weights multiplicative. Forming sqrt(rho) in the
  // computational basis instead loses weights below ~1e-16 to cancellation,
  // and the two square roots amplify that noise far above the 1e-10 the
  // closed-form comparisons require.
  const EigenSystem4 rho_es = eigendecompose_hermitian(rho.matrix());

  // Numerically pure input reduces exactly to |<psi| sy x sy |psi*>|; the
  // generic pipeline would take a square root of an inner product that
  // cancels to rounding level and lose half the digits.
  if (rho_es.eigenvalues[3] >= 1.0 - 1e-12) {
    const Vec4 psi = rho_es.eigenvector(3);
    Vec4 psi_conj;
    for (size_t i = 0; i < 4; ++i) psi_conj[i] = std::conj(psi[i]);
    const double c = std::abs(inner(psi, spin_flip_operator() * psi_conj));
    return std::min(1.0, c);
  }

  const Hermitian4 flipped = spin_flip(rho);
  const Mat4& basis = rho_es.eigenvectors;
  const Mat4 rotated = adjoint(basis) * flipped.matrix() * basis;

  std::array<double, 4> sqrt_weights{};
  for (int i = 0; i < 4; ++i)
    sqrt_weights[static_cast<size_t>(i)] =
        std::sqrt(std::max(0.0, rho_es.eigenvalues[static_cast<size_t>(i)]));
  Mat4 graded;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      graded(i, j) =
          sqrt_weights[static_cast<size_t>(i)] * sqrt_weights[static_cast<size_t>(j)] * rotated(i, j);

  const EigenSystem4 es = eigendecompose_hermitian(Hermitian4::symmetrized(graded));
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    lambda[static_cast<size_t>(i)] =
        std::sqrt(std::max(0.0, es.eigenvalues[static_cast<size_t>(3 - i)]));
  return concurrence_from_descending(lambda);
}

double wootters_concurrence_product_route(const DensityMatrix4& rho) {
  const Hermitian4 sqrt_rho = matrix_sqrt_psd(rho.matrix());
  const Hermitian4 flipped = spin_flip(rho);
  const Hermitian4 inner =
      Hermitian4::symmetrized(sqrt_rho.matrix() * flipped.matrix() * sqrt_rho.matrix());
  const EigenSystem4 es = eigendecompose_hermitian(inner);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i)
    lambda[static_cast<size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues[static_cast<size_t>(3 - i)]));
  return concurrence_from_descending(lambda);
}

double l1_coherence(const DensityMatrix4& rho) {
  double sum = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

}  // namespace hfsent
