#include <doctest.h>

#include <cmath>

#include "atiyah/configuration.hpp"
#include "atiyah/random.hpp"

using namespace atiyah;

namespace {

Configuration random_config(int n, Xoshiro256pp& rng) {
  Configuration c;
  for (int i = 0; i < n; ++i) {
    c.points.push_back(Vector3(rng.normal(), rng.normal(), rng.normal()));
  }
  return c;
}

Eigen::Matrix3d random_rotation(Xoshiro256pp& rng) {
  Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  q.normalize();
  return q.toRotationMatrix();
}

const Configuration kEquilateral{
    {Vector3(0, 0, 0), Vector3(1, 0, 0), Vector3(0.5, std::sqrt(3.0) / 2, 0)}};
const Configuration kCollinear3{
    {Vector3(0, 0, 0), Vector3(0, 0, 1), Vector3(0, 0, 2)}};
const Configuration kCollinear4{
    {Vector3(0, 0, 0), Vector3(0, 0, 1), Vector3(0, 0, 2), Vector3(0, 0, 3)}};
const Configuration kTetrahedron{{Vector3(1, 1, 1), Vector3(1, -1, -1),
                                  Vector3(-1, 1, -1), Vector3(-1, -1, 1)}};

}  // namespace

TEST_CASE("validate rejects degenerate input") {
  CHECK_THROWS_AS(validate(Configuration{{Vector3(0, 0, 0)}}),
                  DegenerateConfiguration);
  CHECK_THROWS_AS(
      validate(Configuration{{Vector3(1, 2, 3), Vector3(1, 2, 3)}}),
      DegenerateConfiguration);
  // Distance below 1e-12 of the diameter.
  CHECK_THROWS_AS(
      validate(Configuration{
          {Vector3(0, 0, 0), Vector3(1e-14, 0, 0), Vector3(1, 0, 0)}}),
      DegenerateConfiguration);
  CHECK_NOTHROW(validate(kTetrahedron));
  CHECK_NOTHROW(validate(kCollinear3));
}

TEST_CASE("directions") {
  const Configuration c{{Vector3(0, 0, 0), Vector3(0, 0, 2)}};
  const DirectionTable nu = directions(c);
  CHECK(nu(0, 1) == Vector3(0, 0, 1));
  CHECK(nu(1, 0) == Vector3(0, 0, -1));

  Xoshiro256pp rng(30);
  for (int t = 0; t < 100; ++t) {
    const Configuration r = random_config(4, rng);
    const DirectionTable table = directions(r);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        CHECK((table(i, j) + table(j, i)).norm() == 0.0);
        CHECK(std::abs(table(i, j).norm() - 1.0) < 1e-14);
      }
    }
  }

  // Equilateral triangle: direction pairs at each vertex meet at 60 degrees.
  const DirectionTable eq = directions(kEquilateral);
  CHECK(std::abs(eq(0, 1).dot(eq(0, 2)) - 0.5) < 1e-14);
  CHECK(std::abs(eq(1, 0).dot(eq(1, 2)) - 0.5) < 1e-14);
  CHECK(std::abs(eq(2, 0).dot(eq(2, 1)) - 0.5) < 1e-14);
}

TEST_CASE("assign_lifts honors the pairing convention") {
  const Configuration c{{Vector3(0, 0, 0), Vector3(0, 0, 2)}};
  const LiftAssignment w = assign_lifts(c);
  CHECK(w(0, 1) == Spinor(0, 1));
  CHECK(w(1, 0) == Spinor(-1, 0));

  Xoshiro256pp rng(31);
  for (int t = 0; t < 100; ++t) {
    const Configuration r = random_config(4, rng);
    const LiftAssignment lifts = assign_lifts(r);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        // w_ij is a lift of nu_ij.
        CHECK((modified_hopf(lifts(i, j)) - lifts.direction(i, j))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        if (i < j) {
          CHECK((lifts(j, i) - quaternionic(lifts(i, j))).norm() == 0.0);
          // The pairing makes every denominator factor det(w_ij, w_ji) = 1.
          Matrix2c pair;
          pair.col(0) = lifts(i, j);
          pair.col(1) = lifts(j, i);
          CHECK(std::abs(pair.determinant() - Complex(1.0)) < 1e-14);
        }
        CHECK(std::abs(herm(lifts(i, j), lifts(j, i))) < 1e-14);
      }
    }
  }
}

TEST_CASE("polynomials") {
  // Two points on the z-axis: p_1 = e_2, p_2 = -e_1.
  const Configuration c{{Vector3(0, 0, 0), Vector3(0, 0, 2)}};
  const auto p = polynomials(c);
  REQUIRE(p.size() == 2);
  CHECK(p[0].degree() == 1);
  CHECK(p[0].coeffs(0) == Complex(1.0));
  CHECK(p[0].coeffs(1) == Complex(0.0));
  CHECK(p[1].coeffs(0) == Complex(0.0));
  CHECK(p[1].coeffs(1) == Complex(-1.0));

  // Collinear triple: the p_i still span, H_3 is PD.
  const MatrixXc h = gram_matrix(kCollinear3);
  CHECK(eig_hermitian(h).eigenvalues.minCoeff() > 0.0);
}

TEST_CASE("atiyah_D fixed values") {
  Xoshiro256pp rng(32);
  for (int t = 0; t < 20; ++t) {
    CHECK(std::abs(atiyah_D(random_config(2, rng)) - Complex(1.0)) < 1e-12);
  }
  CHECK(std::abs(atiyah_D(kEquilateral) - Complex(1.125)) < 1e-10);
  CHECK(std::abs(atiyah_D(kCollinear3) - Complex(1.0)) < 1e-10);
  CHECK(std::abs(atiyah_D(kCollinear4) - Complex(1.0)) < 1e-10);
}

TEST_CASE("atiyah_D is gauge invariant") {
  Xoshiro256pp rng(33);
  for (int t = 0; t < 10; ++t) {
    const Configuration c = random_config(4, rng);
    const Complex base = atiyah_D(c);
    for (int g = 0; g < 100; ++g) {
      LiftAssignment lifts = assign_lifts(c);
      const int i = static_cast<int>(rng.next() % 4);
      int j = static_cast<int>(rng.next() % 4);
      if (j == i) j = (j + 1) % 4;
      const int lo = std::min(i, j), hi = std::max(i, j);
      const Complex phase = std::exp(Complex(0, rng.uniform(0, 6.283185)));
      // Rephase w_ij and keep w_ji quaternionic-paired.
      const Spinor wij = phase * lifts(lo, hi);
      lifts.table[static_cast<std::size_t>(lo * 4 + hi)] = wij;
      lifts.table[static_cast<std::size_t>(hi * 4 + lo)] = quaternionic(wij);
      CHECK(std::abs(atiyah_D(lifts) - base) <= 1e-12 * std::abs(base));
    }
  }
}

TEST_CASE("atiyah_D is invariant under Euclidean motions and scaling") {
  Xoshiro256pp rng(34);
  for (int n : {3, 4, 5}) {
    for (int t = 0; t < 100; ++t) {
      const Configuration c = random_config(n, rng);
      const Complex base = atiyah_D(c);
      for (int m = 0; m < 100; ++m) {
        const Eigen::Matrix3d rot = random_rotation(rng);
        const Vector3 shift(rng.normal(), rng.normal(), rng.normal());
        const double scale = std::exp(rng.uniform(-2, 2));
        Configuration moved = c;
        for (auto& p : moved.points) p = scale * (rot * p) + shift;
        CHECK(std::abs(atiyah_D(moved) - base) <=
              1e-9 * std::max(1.0, std::abs(base)));
      }
    }
  }
}

TEST_CASE("gram matrix basics") {
  Xoshiro256pp rng(35);
  const MatrixXc h2 = gram_matrix(random_config(2, rng));
  CHECK((h2 - MatrixXc::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

  const MatrixXc h3 = gram_matrix(kEquilateral);
  CHECK(std::abs(determinant(h3).real() - 81.0 / 16.0) < 1e-12);
  CHECK((h3 - h3.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(is_psd(h3));

  const AnalysisReport tet = analyze(kTetrahedron);
  CHECK(std::abs(tet.detH / 144.0 - tet.absD * tet.absD) < 1e-12);
  CHECK(tet.absD >= 1.0);
}

TEST_CASE("bridge identity det H = c_n |D|^2") {
  Xoshiro256pp rng(36);
  for (int n = 2; n <= 6; ++n) {
    for (int t = 0; t < 100; ++t) {
      const AnalysisReport r = analyze(random_config(n, rng));
      CHECK(std::abs(r.detH - r.cn * r.absD * r.absD) <=
            1e-8 * std::max(1.0, r.detH));
    }
  }
}

TEST_CASE("classic_D agrees with atiyah_D in absolute value") {
  CHECK(std::abs(std::abs(classic_D(kEquilateral)) - 1.125) < 1e-10);
  Xoshiro256pp rng(37);
  for (int t = 0; t < 20; ++t) {
    CHECK(std::abs(std::abs(classic_D(random_config(2, rng))) - 1.0) < 1e-12);
  }
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 100; ++t) {
      const Configuration c = random_config(n, rng);
      CHECK(std::abs(std::abs(classic_D(c)) - std::abs(atiyah_D(c))) <= 1e-10);
    }
  }
}

TEST_CASE("analyze") {
  const AnalysisReport eq = analyze(kEquilateral);
  CHECK(eq.n == 3);
  CHECK(eq.absD == doctest::Approx(1.125).epsilon(1e-12));
  CHECK(eq.detH == doctest::Approx(81.0 / 16.0).epsilon(1e-12));
  CHECK(eq.cn == 4.0);
  CHECK(eq.conj1_margin == eq.minEig);
  CHECK(eq.conj2_margin == doctest::Approx(0.125).epsilon(1e-9));

  const AnalysisReport two = analyze(Configuration{
      {Vector3(0.3, -0.2, 0.1), Vector3(-1, 2, 0.5)}});
  CHECK(two.absD == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.detH == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.cn == 1.0);

  // Four collinear points: H_4 is still positive definite.
  const AnalysisReport col = analyze(kCollinear4);
  CHECK(col.minEig > 0.0);
}
