#pragma once

#include <Eigen/Dense>

#include <vector>

#include "atiyah/linalg.hpp"
#include "atiyah/spinor.hpp"
#include "atiyah/sym_tensor.hpp"

namespace atiyah {

struct DegenerateConfiguration : std::domain_error {
  using std::domain_error::domain_error;
};

/// An ordered tuple of pairwise-distinct points in R^3. The whole
/// construction is invariant under translation, rotation and positive
/// scaling of the points.
struct Configuration {
  std::vector<Vector3> points;

  int size() const { return static_cast<int>(points.size()); }
};

/// Max pairwise distance.
double diameter(const Configuration& c);

/// Throws DegenerateConfiguration unless n >= 2, all coordinates are finite
/// and every pairwise distance exceeds 1e-12 times the diameter.
void validate(const Configuration& c);

/// Unit directions nu_ij = (x_j - x_i) / |x_j - x_i| for all ordered pairs,
/// with nu_ji stored as the exact negation of nu_ij.
struct DirectionTable {
  int n = 0;
  std::vector<Vector3> table;  // row-major, zero on the diagonal

  const Vector3& operator()(int i, int j) const {
    return table[static_cast<std::size_t>(i * n + j)];
  }
};

DirectionTable directions(const Configuration& c);

/// Hopf lifts w_ij of the nu_ij with the pairing convention that fixes the
/// normalized determinant: for i < j the lift comes from hopf_lift, and
/// w_ji is its quaternionic image. Every det(w_ij, w_ji) is then 1.
struct LiftAssignment {
  int n = 0;
  std::vector<Spinor> table;
  std::vector<Vector3> nu;

  const Spinor& operator()(int i, int j) const {
    return table[static_cast<std::size_t>(i * n + j)];
  }
  const Vector3& direction(int i, int j) const {
    return nu[static_cast<std::size_t>(i * n + j)];
  }
};

LiftAssignment assign_lifts(const Configuration& c);

/// The tensors p_i = ⊙_{j != i} w_ij in Sym^(n-1)(C^2), factors taken in
/// increasing j. Each is defined up to phase; the lift convention fixes one.
std::vector<SymTensor> polynomials(const LiftAssignment& lifts);
std::vector<SymTensor> polynomials(const Configuration& c);

/// The normalized determinant. With the quaternionic pairing convention the
/// pairwise denominator is identically 1, so this is the determinant of the
/// n x n coefficient matrix with column i holding p_i and rows ordered by
/// decreasing e1-count.
Complex atiyah_D(const LiftAssignment& lifts);
Complex atiyah_D(const Configuration& c);

/// The original route: omega-dualized linear forms multiplied as polynomials,
/// with the pairwise 2x2 determinant denominator recomputed explicitly.
/// |classic_D| must agree with |atiyah_D|.
Complex classic_D(const Configuration& c);

/// Gram matrix H = (<p_i, p_j>) of the tensors attached to the index subset
/// (all of 1..n when omitted), hermitian by construction.
MatrixXc gram_matrix(const LiftAssignment& lifts,
                     const std::vector<int>& subset);
MatrixXc gram_matrix(const Configuration& c);

/// All derived scalars for one configuration.
struct AnalysisReport {
  int n = 0;
  Complex D;
  double absD = 0.0;
  double detH = 0.0;
  double minEig = 0.0;
  double cn = 0.0;
  double conj1_margin = 0.0;  // min eigenvalue of H_n
  double conj2_margin = 0.0;  // |D| - 1
};

AnalysisReport analyze(const Configuration& c);

}  // namespace atiyah
