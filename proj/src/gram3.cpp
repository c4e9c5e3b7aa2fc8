#include "atiyah/gram3.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace atiyah {

namespace {

void require_n3(const Configuration& c, const char* who) {
  if (c.size() != 3) {
    throw std::invalid_argument(std::string(who) + ": needs exactly 3 points");
  }
}

}  // namespace

TriangleScalars triangle_scalars(const LiftAssignment& lifts, int a, int b,
                                 int c) {
  TriangleScalars t;
  t.mu1 = std::norm(herm(lifts(a, b), lifts(a, c)));
  t.mu2 = std::norm(herm(lifts(b, a), lifts(b, c)));
  t.mu3 = std::norm(herm(lifts(c, a), lifts(c, b)));

  // Independent route through the 2-cycle identity; catches any lift
  // convention bug at the first use.
  const double r1 = rho(lifts.direction(a, b), lifts.direction(a, c));
  const double r2 = rho(lifts.direction(b, a), lifts.direction(b, c));
  const double r3 = rho(lifts.direction(c, a), lifts.direction(c, b));
  if (std::abs(t.mu1 - r1) > 1e-12 || std::abs(t.mu2 - r2) > 1e-12 ||
      std::abs(t.mu3 - r3) > 1e-12) {
    throw std::logic_error(
        "triangle_scalars: spinor and direction routes disagree");
  }

  t.S = t.mu1 + t.mu2 + t.mu3;
  return t;
}

TriangleScalars triangle_scalars(const Configuration& c) {
  require_n3(c, "triangle_scalars");
  return triangle_scalars(assign_lifts(c), 0, 1, 2);
}

double h3_closed_form(const TriangleScalars& t) {
  const double s2 = t.S * t.S;
  const double expanded =
      4.0 * (t.mu1 * t.mu2 + t.mu1 * t.mu3 + t.mu2 * t.mu3) -
      4.0 * t.mu1 * t.mu2 * t.mu3;
  if (std::abs(expanded - s2) > 1e-9 * std::max(1.0, s2)) {
    throw std::logic_error("h3_closed_form: expansion identity violated");
  }
  return s2;
}

double coplanarity_check(const Configuration& c) {
  require_n3(c, "coplanarity_check");
  const DirectionTable nu = directions(c);
  Eigen::Matrix3d g;
  const Vector3 v[3] = {nu(1, 2), nu(2, 0), nu(0, 1)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g(i, j) = v[i].dot(v[j]);
  }
  return g.determinant();
}

LemmaH3Result lemma_h3_minus_identity(const Configuration& c) {
  require_n3(c, "lemma_h3_minus_identity");
  const MatrixXc h = gram_matrix(c);
  const MatrixXc hm1 = h - MatrixXc::Identity(3, 3);

  LemmaH3Result r;
  r.det = determinant(hm1).real();
  r.minEig = eig_hermitian(hm1).eigenvalues.minCoeff();
  r.psd = r.minEig >= -1e-9;

  r.minMinor2x2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double minor =
          (hm1(i, i) * hm1(j, j) - hm1(i, j) * hm1(j, i)).real();
      r.minMinor2x2 = std::min(r.minMinor2x2, minor);
    }
  }
  return r;
}

bool sign_relations_check(const Configuration& c) {
  require_n3(c, "sign_relations_check");
  const LiftAssignment w = assign_lifts(c);
  const Complex lhs1 = herm(w(1, 0), w(2, 1));
  const Complex rhs1 = std::conj(herm(w(0, 1), w(1, 2)));
  const Complex lhs2 = herm(w(0, 2), w(1, 0));
  const Complex rhs2 = -std::conj(herm(w(2, 0), w(0, 1)));
  const Complex lhs3 = herm(w(2, 1), w(0, 2));
  const Complex rhs3 = -std::conj(herm(w(1, 2), w(2, 0)));
  return std::abs(lhs1 - rhs1) <= 1e-12 && std::abs(lhs2 - rhs2) <= 1e-12 &&
         std::abs(lhs3 - rhs3) <= 1e-12;
}

}  // namespace atiyah
