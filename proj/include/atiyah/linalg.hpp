#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace atiyah {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;

struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Eigenvalues of a hermitian matrix, ascending, plus the accumulated
/// unitary (eigenvectors in columns, matching order).
struct Spectrum {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
};

/// Determinant of a small square matrix (cofactor formula up to 3x3,
/// partial-pivot LU above, via Eigen).
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  return m.determinant();
}

/// Permanent by explicit enumeration of all permutations. Reference
/// implementation; O(n! n), keep n small.
template <typename Derived>
typename Derived::Scalar permanent_naive(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent: matrix is not square");
  }
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Scalar sum{};
  do {
    Scalar term = Scalar(1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

/// Permanent by Ryser's inclusion-exclusion formula, O(2^n n^2).
template <typename Derived>
typename Derived::Scalar permanent(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("permanent: matrix is not square");
  }
  const int n = static_cast<int>(m.rows());
  if (n > 24) {
    throw std::invalid_argument("permanent: dimension too large");
  }
  Scalar total{};
  const std::uint32_t full = (1u << n) - 1u;
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    Scalar prod = Scalar(1);
    for (int i = 0; i < n; ++i) {
      Scalar rowsum{};
      for (int j = 0; j < n; ++j) {
        if (subset & (1u << j)) rowsum += m(i, j);
      }
      prod *= rowsum;
    }
    const int parity = std::popcount(subset) & 1;
    total += parity ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

/// Entrywise (Hadamard/Schur) product.
template <typename DerivedA, typename DerivedB>
auto hadamard(const Eigen::MatrixBase<DerivedA>& a,
              const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hadamard: shape mismatch");
  }
  return (a.array() * b.array()).matrix().eval();
}

/// Cyclic Jacobi diagonalization of a hermitian matrix. Iteration cap of
/// 100 sweeps, off-diagonal Frobenius threshold 1e-14 * ||m||_F.
/// Throws NotHermitianError / NoConvergenceError.
Spectrum eig_hermitian(const Eigen::Ref<const MatrixXc>& m);

/// Positive semidefinite test: min eigenvalue >= -tol. A negative tol
/// requests the default, 1e-9 * ||m||_F.
bool is_psd(const Eigen::Ref<const MatrixXc>& m, double tol = -1.0);

/// Positive definite test: min eigenvalue > +tol (same default rule).
bool is_pd(const Eigen::Ref<const MatrixXc>& m, double tol = -1.0);

}  // namespace atiyah
