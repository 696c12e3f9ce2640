#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>

// Dense complex linear algebra for the fixed sizes this library needs:
// 2x2 spin operators and 4x4 two-qubit Hamiltonians / density matrices.
// Everything is value-semantic and allocation-free.

namespace hfsent {

using Complex = std::complex<double>;

// Hermiticity check tolerance, relative to the largest entry magnitude
// (floor 1) so it is meaningful for both O(1) density matrices and
// Hamiltonians with entries of a few hundred.
inline constexpr double kHermitianTolerance = 1e-12;

// Eigenvalues above -kPsdClampTolerance are treated as zero when a
// positive-semidefinite matrix is required (matrix square roots).
inline constexpr double kPsdClampTolerance = 1e-10;

// Jacobi sweep cap; non-convergence within the cap is reported as an error.
inline constexpr int kJacobiMaxSweeps = 100;

using Vec4 = std::array<Complex, 4>;

struct Mat2 {
  std::array<Complex, 4> e{};

  Complex& operator()(int i, int j) { return e[static_cast<size_t>(2 * i + j)]; }
  const Complex& operator()(int i, int j) const { return e[static_cast<size_t>(2 * i + j)]; }

  static Mat2 identity() {
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
  }
};

struct Mat4 {
  std::array<Complex, 16> e{};

  Complex& operator()(int i, int j) { return e[static_cast<size_t>(4 * i + j)]; }
  const Complex& operator()(int i, int j) const { return e[static_cast<size_t>(4 * i + j)]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat4 diagonal(double a, double b, double c, double d) {
    Mat4 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = d;
    return m;
  }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

inline Mat4 operator*(const Complex& s, const Mat4& a) {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
  return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline Vec4 operator*(const Mat4& a, const Vec4& x) {
  Vec4 y{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) y[static_cast<size_t>(i)] += a(i, j) * x[static_cast<size_t>(j)];
  return y;
}

inline Mat4 adjoint(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline Mat4 conjugate(const Mat4& a) {
  Mat4 r;
  for (size_t i = 0; i < 16; ++i) r.e[i] = std::conj(a.e[i]);
  return r;
}

inline Complex trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double frobenius_norm(const Mat4& a) {
  double s = 0;
  for (const Complex& z : a.e) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const Mat4& a) {
  double m = 0;
  for (const Complex& z : a.e) m = std::max(m, std::abs(z));
  return m;
}

// <x|y>, conjugate-linear in the first argument.
inline Complex inner(const Vec4& x, const Vec4& y) {
  Complex s{};
  for (size_t i = 0; i < 4; ++i) s += std::conj(x[i]) * y[i];
  return s;
}

inline double norm(const Vec4& x) { return std::sqrt(std::real(inner(x, x))); }

// |x><y|
inline Mat4 outer(const Vec4& x, const Vec4& y) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r(i, j) = x[static_cast<size_t>(i)] * std::conj(y[static_cast<size_t>(j)]);
  return r;
}

// Row-major Kronecker product: (a (x) b)[2i+k][2j+l] = a(i,j) * b(k,l).
Mat4 kron(const Mat2& a, const Mat2& b);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

// A 4x4 matrix validated to be Hermitian (and finite) on construction.
class Hermitian4 {
 public:
  // Throws std::invalid_argument if m has non-finite entries or deviates
  // from Hermiticity by more than kHermitianTolerance relative to the
  // largest entry magnitude (floor 1).
  explicit Hermitian4(const Mat4& m);

  // (m + m^dagger)/2, for products that are Hermitian in exact arithmetic.
  static Hermitian4 symmetrized(const Mat4& m);

  const Mat4& matrix() const { return m_; }
  const Complex& operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat4 m_;
};

// Eigenvalues sorted ascending; column i of eigenvectors pairs with
// eigenvalues[i]. Columns are orthonormal.
struct EigenSystem4 {
  std::array<double, 4> eigenvalues{};
  Mat4 eigenvectors;

  Vec4 eigenvector(int i) const {
    Vec4 v;
    for (int r = 0; r < 4; ++r) v[static_cast<size_t>(r)] = eigenvectors(r, i);
    return v;
  }
};

// Cyclic Jacobi with complex plane rotations. Deterministic for identical
// input. Throws std::runtime_error on non-convergence within the sweep cap.
EigenSystem4 eigendecompose_hermitian(const Hermitian4& m);

// Spectral application of a real scalar function: sum f(lambda_i) v_i v_i^dag.
Hermitian4 matrix_function_hermitian(const Hermitian4& m, const std::function<double(double)>& f);

Hermitian4 matrix_exp_hermitian(const Hermitian4& m);

// Principal square root for PSD input. Eigenvalues in [-kPsdClampTolerance, 0)
// are clamped to zero; anything lower throws std::domain_error.
Hermitian4 matrix_sqrt_psd(const Hermitian4& m);

}  // namespace hfsent
