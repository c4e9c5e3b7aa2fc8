#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "atiyah/linalg.hpp"
#include "atiyah/random.hpp"

using namespace atiyah;

namespace {

MatrixXc random_complex(int n, Xoshiro256pp& rng) {
  MatrixXc m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
  }
  return m;
}

MatrixXc random_hermitian(int n, Xoshiro256pp& rng) {
  const MatrixXc m = random_complex(n, rng);
  return 0.5 * (m + m.adjoint());
}

// Gram matrix of random complex vectors: PSD by construction.
MatrixXc random_gram(int n, Xoshiro256pp& rng) {
  const MatrixXc b = random_complex(n, rng);
  return b.adjoint() * b;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(determinant(MatrixXc::Identity(2, 2)) == Complex(1.0));

  MatrixXc m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(std::abs(determinant(m) - Complex(-2.0)) < 1e-15);

  // det(w, Jw) = 1 for any unit spinor.
  Xoshiro256pp rng(1);
  for (int t = 0; t < 100; ++t) {
    Eigen::Vector2cd w(Complex(rng.normal(), rng.normal()),
                       Complex(rng.normal(), rng.normal()));
    w.normalize();
    MatrixXc q(2, 2);
    q << w(0), -std::conj(w(1)), w(1), std::conj(w(0));
    CHECK(std::abs(determinant(q) - Complex(1.0)) < 1e-14);
  }

  MatrixXc rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS((void)determinant(rect), std::invalid_argument);
}

TEST_CASE("permanent basics") {
  CHECK(permanent(MatrixXc::Identity(3, 3)) == Complex(1.0));
  CHECK(permanent(MatrixXc::Ones(2, 2)) == Complex(2.0));

  MatrixXc m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(std::abs(permanent(m) - Complex(10.0)) < 1e-14);
  CHECK(std::abs(permanent_naive(m) - Complex(10.0)) < 1e-14);

  MatrixXc rect(3, 2);
  rect.setZero();
  CHECK_THROWS_AS((void)permanent(rect), std::invalid_argument);
  CHECK_THROWS_AS((void)permanent_naive(rect), std::invalid_argument);
}

TEST_CASE("Ryser permanent equals the naive permutation sum") {
  Xoshiro256pp rng(2);
  for (int dim = 2; dim <= 5; ++dim) {
    for (int t = 0; t < 1000; ++t) {
      const MatrixXc m = random_complex(dim, rng);
      const Complex a = permanent(m);
      const Complex b = permanent_naive(m);
      CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("hadamard product") {
  const MatrixXc id = MatrixXc::Identity(2, 2);
  CHECK(hadamard(id, id) == id);

  Xoshiro256pp rng(3);
  const MatrixXc m = random_complex(3, rng);
  CHECK(hadamard(m, MatrixXc::Ones(3, 3)) == m);
  CHECK(hadamard(MatrixXc::Zero(3, 3), m) == MatrixXc::Zero(3, 3));

  CHECK_THROWS_AS((void)hadamard(m, id), std::invalid_argument);
}

TEST_CASE("eig_hermitian on fixed matrices") {
  MatrixXc d(2, 2);
  d << 1, 0, 0, 2;
  Spectrum s = eig_hermitian(d);
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-14));

  MatrixXc sigma1(2, 2);
  sigma1 << 0, 1, 1, 0;
  s = eig_hermitian(sigma1);
  CHECK(s.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(s.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian against Eigen's solver, with reconstruction") {
  Xoshiro256pp rng(4);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 50; ++t) {
      const MatrixXc m = random_hermitian(n, rng);
      const Spectrum s = eig_hermitian(m);

      Eigen::SelfAdjointEigenSolver<MatrixXc> oracle(m);
      for (int i = 0; i < n; ++i) {
        CHECK(std::abs(s.eigenvalues(i) - oracle.eigenvalues()(i)) <=
              1e-10 * std::max(1.0, m.norm()));
      }

      // Ascending order, trace and determinant consistency.
      for (int i = 0; i + 1 < n; ++i) {
        CHECK(s.eigenvalues(i) <= s.eigenvalues(i + 1));
      }
      CHECK(std::abs(s.eigenvalues.sum() - m.trace().real()) <=
            1e-10 * std::max(1.0, std::abs(m.trace().real())));
      CHECK(std::abs(s.eigenvalues.prod() - determinant(m).real()) <=
            1e-9 * std::max(1.0, std::abs(determinant(m).real())));

      // ||m - V diag(e) V*|| <= 1e-9 ||m||.
      const MatrixXc rebuilt =
          s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() *
          s.eigenvectors.adjoint();
      CHECK((m - rebuilt).norm() <= 1e-9 * m.norm());
    }
  }
}

TEST_CASE("eig_hermitian rejects bad input") {
  MatrixXc rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS((void)eig_hermitian(rect), std::invalid_argument);

  MatrixXc m(2, 2);
  m << 1, Complex(0, 1), Complex(0, 1), 1;  // equal off-diagonals: not hermitian
  CHECK_THROWS_AS((void)eig_hermitian(m), NotHermitianError);
}

TEST_CASE("psd and pd tests") {
  CHECK(is_psd(MatrixXc::Zero(3, 3), 1e-10));
  CHECK_FALSE(is_pd(MatrixXc::Zero(3, 3), 1e-10));

  MatrixXc d(2, 2);
  d << 1, 0, 0, -1;
  CHECK_FALSE(is_psd(d));

  CHECK(is_pd(MatrixXc::Identity(4, 4)));
}

TEST_CASE("hadamard product of PSD matrices is PSD") {
  Xoshiro256pp rng(5);
  for (int t = 0; t < 1000; ++t) {
    const MatrixXc a = random_gram(3, rng);
    const MatrixXc b = random_gram(3, rng);
    const MatrixXc h = hadamard(a, b);
    CHECK(eig_hermitian(h).eigenvalues.minCoeff() >= -1e-10);
  }
}
