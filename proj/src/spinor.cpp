#include "atiyah/spinor.hpp"

#include <array>
#include <cmath>

namespace atiyah {

namespace {
const Complex kI{0.0, 1.0};
}

const Matrix2c& pauli(int i) {
  static const std::array<Matrix2c, 4> sigma = [] {
    std::array<Matrix2c, 4> s;
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (i < 0 || i > 3) throw std::invalid_argument("pauli: index out of range");
  return sigma[static_cast<std::size_t>(i)];
}

const Matrix2c& symplectic_form() {
  static const Matrix2c omega = (Matrix2c() << 0, 1, -1, 0).finished();
  return omega;
}

Matrix2c pauli_dot(const Vector3& x) {
  return x.x() * pauli(1) + x.y() * pauli(2) + x.z() * pauli(3);
}

Vector3 modified_hopf(const Spinor& w) {
  const double n2 = std::norm(w(0)) + std::norm(w(1));
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-9) {
    throw NotUnitError("modified_hopf: spinor is not unit norm");
  }
  // ww* = ((1-z)/2, (-x+iy)/2; (-x-iy)/2, (1+z)/2); divide by ||w||^2 so
  // the result is exactly phase- and norm-invariant.
  const Complex uv = w(0) * std::conj(w(1));
  return Vector3(-2.0 * uv.real(), 2.0 * uv.imag(),
                 std::norm(w(1)) - std::norm(w(0))) /
         n2;
}

Spinor hopf_lift(const Vector3& d) {
  // The inverse formula divides by (1 - z); at the pole the lift is (0, 1).
  // The cutoff is far below the unit-sphere tolerance so that round trips
  // through the formula branch stay accurate to ~1e-12.
  if (1.0 - d.z() < 1e-24) return Spinor(0.0, 1.0);
  Spinor w(Complex(1.0 - d.z(), 0.0), Complex(-d.x(), -d.y()));
  return w / w.norm();
}

Spinor quaternionic(const Spinor& w) {
  return Spinor(-std::conj(w(1)), std::conj(w(0)));
}

Spinor dualize(const Spinor& w) { return Spinor(-w(1), w(0)); }

Complex three_cycle_closed_form(const Vector3& x1, const Vector3& x2,
                                const Vector3& x3) {
  Eigen::Matrix3d cols;
  cols.col(0) = x1;
  cols.col(1) = x2;
  cols.col(2) = x3;
  const double re = 0.5 * (-1.0 + rho(x1, x2) + rho(x1, x3) + rho(x2, x3));
  return Complex(re, 0.25 * cols.determinant());
}

}  // namespace atiyah
