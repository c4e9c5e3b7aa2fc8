#include "atiyah/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace atiyah {

namespace {

double max_abs(const Eigen::Ref<const MatrixXc>& m) {
  return m.cwiseAbs().maxCoeff();
}

double off_diagonal_norm(const MatrixXc& a) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

Spectrum eig_hermitian(const Eigen::Ref<const MatrixXc>& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eig_hermitian: matrix is not square");
  }
  const Eigen::Index n = m.rows();
  const double scale = std::max(1.0, max_abs(m));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-10 * scale) {
        throw NotHermitianError("eig_hermitian: matrix is not hermitian");
      }
    }
  }

  // Work on the exactly-hermitian average so rotations see real diagonals.
  MatrixXc a = 0.5 * (m + m.adjoint());
  MatrixXc v = MatrixXc::Identity(n, n);
  const double frob = a.norm();
  const double threshold = 1e-14 * frob;

  constexpr int kMaxSweeps = 100;
  bool converged = (n == 1) || off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        Eigen::JacobiRotation<Complex> rot;
        rot.makeJacobi(a(p, p).real(), a(p, q), a(q, q).real());
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw NoConvergenceError("eig_hermitian: no convergence in 100 sweeps");
  }

  Eigen::VectorXd eigs(n);
  for (Eigen::Index i = 0; i < n; ++i) eigs(i) = a(i, i).real();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index x, Eigen::Index y) { return eigs(x) < eigs(y); });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues(i) = eigs(order[static_cast<std::size_t>(i)]);
    out.eigenvectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool is_psd(const Eigen::Ref<const MatrixXc>& m, double tol) {
  if (tol < 0.0) tol = 1e-9 * m.norm();
  return eig_hermitian(m).eigenvalues.minCoeff() >= -tol;
}

bool is_pd(const Eigen::Ref<const MatrixXc>& m, double tol) {
  if (tol < 0.0) tol = 1e-9 * m.norm();
  return eig_hermitian(m).eigenvalues.minCoeff() > tol;
}

}  // namespace atiyah
