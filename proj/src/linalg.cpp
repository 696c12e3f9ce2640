#include "hfsent/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfsent {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Mat2 pauli_x() {
  Mat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

Hermitian4::Hermitian4(const Mat4& m) : m_(m) {
  for (const Complex& z : m.e) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("Hermitian4: non-finite entry");
  }
  const double scale = std::max(1.0, max_abs(m));
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kHermitianTolerance * scale)
        throw std::invalid_argument("Hermitian4: matrix is not Hermitian");
    }
}

Hermitian4 Hermitian4::symmetrized(const Mat4& m) {
  return Hermitian4(Complex(0.5) * (m + adjoint(m)));
}

EigenSystem4 eigendecompose_hermitian(const Hermitian4& m) {
  Mat4 a = m.matrix();
  Mat4 v = Mat4::identity();

  // Relative per-pivot threshold: rotating while |a_pq| exceeds
  // eps*sqrt(|a_pp a_qq|) keeps even strongly graded PSD input (tiny
  // Boltzmann weights) accurate in a relative sense, which plain
  // norm-based thresholds destroy.
  constexpr double kRelThreshold = 2.5e-16;
  constexpr double kAbsFloor = 1e-300;

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 4; ++q) {
        const double r = std::abs(a(p, q));
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (r <= kAbsFloor || r <= kRelThreshold * std::sqrt(std::abs(app) * std::abs(aqq)))
          continue;
        rotated = true;
        const Complex phase = a(p, q) / r;
        // Zero a(p,q) with the unitary [[c, s*phase], [-s*conj(phase), c]]
        // acting on the (p,q) plane; smaller-angle root for stability.
        const double tau = (aqq - app) / (2.0 * r);
        const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        Mat4 j = Mat4::identity();
        j(p, p) = c;
        j(p, q) = s * phase;
        j(q, p) = -s * std::conj(phase);
        j(q, q) = c;
        a = adjoint(j) * a * j;
        a(p, q) = 0.0;  // annihilated by construction; drop the rounding residue
        a(q, p) = 0.0;
        v = v * j;
      }
    converged = !rotated;
  }
  if (!converged)
    throw std::runtime_error("eigendecompose_hermitian: Jacobi iteration did not converge");

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&a](int lhs, int rhs) { return a(lhs, lhs).real() < a(rhs, rhs).real(); });

  EigenSystem4 es;
  for (int i = 0; i < 4; ++i) {
    es.eigenvalues[static_cast<size_t>(i)] = a(order[static_cast<size_t>(i)], order[static_cast<size_t>(i)]).real();
    for (int r = 0; r < 4; ++r) es.eigenvectors(r, i) = v(r, order[static_cast<size_t>(i)]);
  }
  return es;
}

Hermitian4 matrix_function_hermitian(const Hermitian4& m, const std::function<double(double)>& f) {
  const EigenSystem4 es = eigendecompose_hermitian(m);
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    const Vec4 vi = es.eigenvector(i);
    r = r + Complex(f(es.eigenvalues[static_cast<size_t>(i)])) * outer(vi, vi);
  }
  return Hermitian4::symmetrized(r);
}

Hermitian4 matrix_exp_hermitian(const Hermitian4& m) {
  return matrix_function_hermitian(m, [](double x) { return std::exp(x); });
}

Hermitian4 matrix_sqrt_psd(const Hermitian4& m) {
  const EigenSystem4 es = eigendecompose_hermitian(m);
  for (double lambda : es.eigenvalues) {
    if (lambda < -kPsdClampTolerance)
      throw std::domain_error("matrix_sqrt_psd: matrix is not positive semidefinite");
  }
  Mat4 r;
  for (int i = 0; i < 4; ++i) {
    const double lambda = std::max(0.0, es.eigenvalues[static_cast<size_t>(i)]);
    const Vec4 vi = es.eigenvector(i);
    r = r + Complex(std::sqrt(lambda)) * outer(vi, vi);
  }
  return Hermitian4::symmetrized(r);
}

}  // namespace hfsent
