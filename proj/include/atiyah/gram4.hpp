#pragma once

#include <array>

#include "atiyah/configuration.hpp"
#include "atiyah/gram3.hpp"

namespace atiyah {

/// Scalar bookkeeping for a 4-point configuration. The mu_i come from the
/// triangle x1 x2 x3; rho_1 = |<w_24, w_34>|^2, rho_2 = |<w_34, w_14>|^2,
/// rho_3 = |<w_14, w_24>|^2. R is the nonnegative remainder in the closed
/// form for det(A~_4).
struct Gram4Scalars {
  double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0;
  double rho1 = 0.0, rho2 = 0.0, rho3 = 0.0;
  double S = 0.0, T = 0.0;
  double Stilde = 0.0;  // S - 2
  double Ttilde = 0.0;  // 3 - T
  double R = 0.0;
};

Gram4Scalars gram4_scalars(const Configuration& c);

/// Mixed Gram matrix T_ij of the lift families of rows i and j:
/// entry (a, b) = <w_{i,r_a}, w_{j,s_b}> with r (resp. s) running over the
/// indices != i (resp. != j) in increasing order. perm(T_ij) = <p_i, p_j>,
/// and T_ij is always singular (its factors live in C^2).
MatrixXc mixed_gram(const LiftAssignment& lifts, int i, int j);

/// <p_i, p_j> evaluated as the permanent of T_ij (0-based indices).
Complex gram_entry_via_permanent(const Configuration& c, int i, int j);

/// The decomposition H_4 = A_1 + A_2 + A_3 + A_4 into hermitian PSD
/// summands. A_i has its 3x3 core A~_i on the rows/columns != i and a zero
/// row/column at i; A~_i = 2 (H_triple - 1) * H(w_{a,i}, w_{b,i}, w_{c,i})
/// with {a, b, c} the complement of i and * the Hadamard product.
struct Decomposition4 {
  std::array<MatrixXc, 4> Atilde;  // 3x3 cores
  std::array<MatrixXc, 4> A;       // 4x4 embeddings
  MatrixXc H4;                     // Gram matrix of the full configuration
};

Decomposition4 build_decomposition(const Configuration& c);

/// Closed form det(A~_4) = 2 ((S - 2)(S + 2) + R),
/// R = (S - 2)^2 T + 4 (mu~1 mu~2 mu3 rho~3 + mu~1 mu2 mu~3 rho~2 +
///                      mu1 mu~2 mu~3 rho~1) >= 0.
double det_A4_closed_form(const Gram4Scalars& s);

/// Certificate for positive definiteness of H_4. If the four points are
/// collinear the verdict comes from the eigenvalue check alone; otherwise
/// two non-collinear triples are selected deterministically (lexicographic
/// scan, collinearity scored by min altitude / triple diameter) so that
/// together they cover all four indices, and the determinants of the
/// corresponding A~ cores are recorded.
struct PdCertificate {
  bool collinear4 = false;
  std::array<int, 3> tripleA{-1, -1, -1};  // 0-based; {-1,-1,-1} if collinear
  std::array<int, 3> tripleB{-1, -1, -1};
  double detA_tripleA = 0.0;
  double detA_tripleB = 0.0;
  double minEigH4 = 0.0;
  bool verdictPD = false;
};

PdCertificate pd_certificate(const Configuration& c);

/// min altitude / max side of the triangle (a, b, c); 0 when collinear.
double altitude_ratio(const Vector3& a, const Vector3& b, const Vector3& c);

}  // namespace atiyah
