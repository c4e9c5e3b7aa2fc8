#pragma once

#include "atiyah/configuration.hpp"

namespace atiyah {

/// The squared half-angle cosines of a triangle: mu_i = cos^2(angle_i / 2)
/// with angle_i the interior angle at vertex i, plus their sum S. Always
/// 2 <= S <= 9/4, with S = 2 exactly on collinear triples.
struct TriangleScalars {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu3 = 0.0;
  double S = 0.0;
};

/// Scalars for the triple (a, b, c) of a lift assignment:
/// mu1 = |<w_ab, w_ac>|^2, mu2 = |<w_ba, w_bc>|^2, mu3 = |<w_ca, w_cb>|^2.
/// Cross-checked against the rho route on the direction vectors.
TriangleScalars triangle_scalars(const LiftAssignment& lifts, int a, int b,
                                 int c);

/// Scalars of a 3-point configuration (collinear triples are valid input).
TriangleScalars triangle_scalars(const Configuration& c);

/// Closed form det(H_3) = S^2. Also cross-checks the intermediate expansion
/// 4(mu1 mu2 + mu1 mu3 + mu2 mu3) - 4 mu1 mu2 mu3 against S^2.
double h3_closed_form(const TriangleScalars& t);

/// Determinant of the Gram matrix of nu_23, nu_31, nu_12. The three
/// directions are coplanar, so the value vanishes for every triangle.
double coplanarity_check(const Configuration& c);

struct LemmaH3Result {
  double det = 0.0;       // det(H_3 - 1)
  bool psd = false;       // H_3 - 1 positive semidefinite
  double minEig = 0.0;    // of H_3 - 1
  double minMinor2x2 = 0.0;  // smallest principal 2x2 minor of H_3 - 1
};

/// H_3 - 1 is hermitian positive semidefinite with
/// det(H_3 - 1) = (S - 2)(S - 1).
LemmaH3Result lemma_h3_minus_identity(const Configuration& c);

/// The conjugation relations forced by the quaternionic pairing:
/// h_{21,32} = conj(h_{12,23}), h_{13,21} = -conj(h_{31,12}),
/// h_{32,13} = -conj(h_{23,31}). True within 1e-12 for every triangle.
bool sign_relations_check(const Configuration& c);

}  // namespace atiyah
