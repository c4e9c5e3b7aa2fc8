#include "atiyah/gram4.hpp"

#include <cmath>
#include <string>

namespace atiyah {

namespace {

void require_n4(const Configuration& c, const char* who) {
  if (c.size() != 4) {
    throw std::invalid_argument(std::string(who) + ": needs exactly 4 points");
  }
}

std::array<int, 3> complement_of(int i) {
  std::array<int, 3> t{};
  int k = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != i) t[static_cast<std::size_t>(k++)] = j;
  }
  return t;
}

}  // namespace

Gram4Scalars gram4_scalars(const Configuration& c) {
  require_n4(c, "gram4_scalars");
  const LiftAssignment w = assign_lifts(c);

  Gram4Scalars s;
  const TriangleScalars t = triangle_scalars(w, 0, 1, 2);
  s.mu1 = t.mu1;
  s.mu2 = t.mu2;
  s.mu3 = t.mu3;
  s.S = t.S;
  s.rho1 = std::norm(herm(w(1, 3), w(2, 3)));
  s.rho2 = std::norm(herm(w(2, 3), w(0, 3)));
  s.rho3 = std::norm(herm(w(0, 3), w(1, 3)));
  s.T = s.rho1 + s.rho2 + s.rho3;
  s.Stilde = s.S - 2.0;
  s.Ttilde = 3.0 - s.T;

  const double mu1t = 1.0 - s.mu1, mu2t = 1.0 - s.mu2, mu3t = 1.0 - s.mu3;
  s.R = s.Stilde * s.Stilde * s.T +
        4.0 * (mu1t * mu2t * s.mu3 * (1.0 - s.rho3) +
               mu1t * s.mu2 * mu3t * (1.0 - s.rho2) +
               s.mu1 * mu2t * mu3t * (1.0 - s.rho1));
  return s;
}

MatrixXc mixed_gram(const LiftAssignment& lifts, int i, int j) {
  const int n = lifts.n;
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw std::out_of_range("mixed_gram: index out of range");
  }
  MatrixXc t(n - 1, n - 1);
  int a = 0;
  for (int r = 0; r < n; ++r) {
    if (r == i) continue;
    int b = 0;
    for (int s = 0; s < n; ++s) {
      if (s == j) continue;
      t(a, b) = herm(lifts(i, r), lifts(j, s));
      ++b;
    }
    ++a;
  }
  return t;
}

Complex gram_entry_via_permanent(const Configuration& c, int i, int j) {
  require_n4(c, "gram_entry_via_permanent");
  if (i < 0 || i >= 4 || j < 0 || j >= 4) {
    throw std::out_of_range("gram_entry_via_permanent: index out of range");
  }
  return permanent(mixed_gram(assign_lifts(c), i, j));
}

Decomposition4 build_decomposition(const Configuration& c) {
  require_n4(c, "build_decomposition");
  const LiftAssignment w = assign_lifts(c);

  Decomposition4 d;
  d.H4 = gram_matrix(w, {0, 1, 2, 3});
  for (int i = 0; i < 4; ++i) {
    const std::array<int, 3> t = complement_of(i);

    // Gram of the deleted-point configuration, built from the same lifts.
    const MatrixXc h_triple =
        gram_matrix(w, {t[0], t[1], t[2]}) - MatrixXc::Identity(3, 3);

    MatrixXc h_spinor(3, 3);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        h_spinor(a, b) = herm(w(t[static_cast<std::size_t>(a)], i),
                              w(t[static_cast<std::size_t>(b)], i));
      }
    }

    const std::size_t idx = static_cast<std::size_t>(i);
    d.Atilde[idx] = 2.0 * hadamard(h_triple, h_spinor);
    d.A[idx] = MatrixXc::Zero(4, 4);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        d.A[idx](t[static_cast<std::size_t>(a)],
                 t[static_cast<std::size_t>(b)]) = d.Atilde[idx](a, b);
      }
    }
  }
  return d;
}

double det_A4_closed_form(const Gram4Scalars& s) {
  return 2.0 * (s.Stilde * (s.S + 2.0) + s.R);
}

double altitude_ratio(const Vector3& a, const Vector3& b, const Vector3& c) {
  const double ab = (b - a).norm();
  const double ac = (c - a).norm();
  const double bc = (c - b).norm();
  const double longest = std::max({ab, ac, bc});
  if (longest == 0.0) return 0.0;
  const double area2 = (b - a).cross(c - a).norm();  // twice the area
  // Min altitude is twice the area over the longest side.
  return area2 / (longest * longest);
}

PdCertificate pd_certificate(const Configuration& c) {
  require_n4(c, "pd_certificate");
  const Decomposition4 d = build_decomposition(c);

  PdCertificate cert;
  cert.minEigH4 = eig_hermitian(d.H4).eigenvalues.minCoeff();
  cert.verdictPD = is_pd(d.H4);

  constexpr double kCollinearRatio = 1e-8;
  const std::array<std::array<int, 3>, 4> triples{
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  auto ratio_of = [&](const std::array<int, 3>& t) {
    return altitude_ratio(c.points[static_cast<std::size_t>(t[0])],
                          c.points[static_cast<std::size_t>(t[1])],
                          c.points[static_cast<std::size_t>(t[2])]);
  };
  auto omitted_of = [](const std::array<int, 3>& t) {
    return 6 - t[0] - t[1] - t[2];
  };

  int pickA = -1;
  for (int k = 0; k < 4 && pickA < 0; ++k) {
    if (ratio_of(triples[static_cast<std::size_t>(k)]) > kCollinearRatio) {
      pickA = k;
    }
  }
  if (pickA < 0) {
    // All four points collinear: the PD verdict rests on the eigenvalue
    // check directly.
    cert.collinear4 = true;
    return cert;
  }

  const std::array<int, 3> tripleA = triples[static_cast<std::size_t>(pickA)];
  const int omittedA = omitted_of(tripleA);
  auto contains = [](const std::array<int, 3>& t, int x) {
    return t[0] == x || t[1] == x || t[2] == x;
  };
  int pickB = -1;
  for (int k = 0; k < 4 && pickB < 0; ++k) {
    if (k == pickA || !contains(triples[static_cast<std::size_t>(k)], omittedA))
      continue;
    if (ratio_of(triples[static_cast<std::size_t>(k)]) > kCollinearRatio) {
      pickB = k;
    }
  }
  if (pickB < 0) {
    // Borderline case: no triple through the omitted point clears the
    // threshold. Take the least collinear one; the verdict is unaffected
    // since it always comes from the eigenvalue check.
    double best = -1.0;
    for (int k = 0; k < 4; ++k) {
      if (k == pickA ||
          !contains(triples[static_cast<std::size_t>(k)], omittedA))
        continue;
      const double r = ratio_of(triples[static_cast<std::size_t>(k)]);
      if (r > best) {
        best = r;
        pickB = k;
      }
    }
  }

  const std::array<int, 3> tripleB = triples[static_cast<std::size_t>(pickB)];
  cert.tripleA = tripleA;
  cert.tripleB = tripleB;
  cert.detA_tripleA =
      determinant(d.Atilde[static_cast<std::size_t>(omittedA)]).real();
  cert.detA_tripleB =
      determinant(d.Atilde[static_cast<std::size_t>(omitted_of(tripleB))])
          .real();
  return cert;
}

}  // namespace atiyah
