#pragma once

#include "hfsent/linalg.hpp"

// Basis-general two-qubit measures for arbitrary 4x4 density matrices:
// the Wootters spin-flip concurrence and the l1-norm coherence. This is the
// numerical oracle the closed forms are tested against.

namespace hfsent {

// A Hermitian 4x4 matrix validated as a density matrix: unit trace within
// 1e-12 and eigenvalues >= -kPsdClampTolerance.
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Hermitian4& rho);

  const Hermitian4& matrix() const { return rho_; }
  const Complex& operator()(int i, int j) const { return rho_(i, j); }

 private:
  Hermitian4 rho_;
};

// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y)
Hermitian4 spin_flip(const DensityMatrix4& rho);

// C = max{0, l1 - l2 - l3 - l4} with l_i the descending eigenvalues of
// R = sqrt(sqrt(rho) rho~ sqrt(rho)).
double wootters_concurrence(const DensityMatrix4& rho);

// Same combination computed from the square roots of the eigenvalues of
// sqrt(rho) rho~ sqrt(rho) (which are the eigenvalues of rho rho~, shared by
// similarity). Debug cross-check for the primary route.
double wootters_concurrence_product_route(const DensityMatrix4& rho);

// Sum of |rho_ij| over i != j, in the basis rho is supplied in.
double l1_coherence(const DensityMatrix4& rho);

}  // namespace hfsent
