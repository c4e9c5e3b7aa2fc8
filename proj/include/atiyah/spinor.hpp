#pragma once

#include <Eigen/Dense>

#include <complex>

#include "atiyah/linalg.hpp"

namespace atiyah {

using Vector3 = Eigen::Vector3d;
using Spinor = Eigen::Vector2cd;
using Matrix2c = Eigen::Matrix2cd;

struct NotUnitError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Pauli matrices sigma_0..sigma_3 (sigma_0 = identity).
const Matrix2c& pauli(int i);

/// The complex symplectic form [[0, 1], [-1, 0]].
const Matrix2c& symplectic_form();

/// x.sigma = x*sigma_1 + y*sigma_2 + z*sigma_3.
Matrix2c pauli_dot(const Vector3& x);

/// Maps a unit spinor w to the unit direction (x,y,z) solving
/// ww* = (1 - x sigma_1 - y sigma_2 - z sigma_3) / 2. Phase-invariant.
/// Throws NotUnitError if ||w|| deviates from 1 by more than 1e-9.
Vector3 modified_hopf(const Spinor& w);

/// A unit spinor mapping to d under modified_hopf, with the phase fixed so
/// the first component is real nonnegative. Expects d on the unit sphere.
Spinor hopf_lift(const Vector3& d);

/// The quaternionic structure (u, v) -> (-conj(v), conj(u)). Antilinear,
/// squares to -1, realizes the antipodal map on directions.
Spinor quaternionic(const Spinor& w);

/// Identifies a spinor with a linear form via the symplectic form:
/// (u0, v0) -> coefficient pair (-v0, u0) on the (u, v) variables.
Spinor dualize(const Spinor& w);

/// Hermitian inner product u1*conj(u2) + v1*conj(v2), linear in the
/// first slot.
inline Complex herm(const Spinor& w1, const Spinor& w2) { return w2.dot(w1); }

/// rho_12 = (1 + <d1, d2>) / 2 for unit directions; equals
/// |herm(w1, w2)|^2 for any lifts.
inline double rho(const Vector3& d1, const Vector3& d2) {
  return 0.5 * (1.0 + d1.dot(d2));
}

/// The 2-spinor triple product <w1,w2><w2,w3><w3,w1>. Phase-invariant in
/// each argument.
inline Complex three_cycle(const Spinor& w1, const Spinor& w2,
                           const Spinor& w3) {
  return herm(w1, w2) * herm(w2, w3) * herm(w3, w1);
}

/// Closed form of the triple product in terms of the directions:
/// (-1 + rho_12 + rho_13 + rho_23)/2 + (i/4) det(x1, x2, x3).
Complex three_cycle_closed_form(const Vector3& x1, const Vector3& x2,
                                const Vector3& x3);

}  // namespace atiyah
