#include "atiyah/configuration.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace atiyah {

double diameter(const Configuration& c) {
  double d = 0.0;
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d = std::max(d, (c.points[j] - c.points[i]).norm());
    }
  }
  return d;
}

void validate(const Configuration& c) {
  const int n = c.size();
  if (n < 2) {
    throw DegenerateConfiguration("configuration needs at least 2 points");
  }
  for (int i = 0; i < n; ++i) {
    if (!c.points[static_cast<std::size_t>(i)].allFinite()) {
      throw DegenerateConfiguration("point " + std::to_string(i) +
                                    " has a non-finite coordinate");
    }
  }
  const double diam = diameter(c);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dist = (c.points[j] - c.points[i]).norm();
      if (!(dist > 1e-12 * diam)) {
        throw DegenerateConfiguration(
            "points " + std::to_string(i) + " and " + std::to_string(j) +
            " coincide (distance below 1e-12 of the diameter)");
      }
    }
  }
}

DirectionTable directions(const Configuration& c) {
  validate(c);
  const int n = c.size();
  DirectionTable t;
  t.n = n;
  t.table.assign(static_cast<std::size_t>(n * n), Vector3::Zero());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vector3 nu = (c.points[j] - c.points[i]).normalized();
      t.table[static_cast<std::size_t>(i * n + j)] = nu;
      t.table[static_cast<std::size_t>(j * n + i)] = -nu;
    }
  }
  return t;
}

LiftAssignment assign_lifts(const Configuration& c) {
  const DirectionTable nu = directions(c);
  const int n = nu.n;
  LiftAssignment lifts;
  lifts.n = n;
  lifts.nu = nu.table;
  lifts.table.assign(static_cast<std::size_t>(n * n), Spinor::Zero());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Spinor w = hopf_lift(nu(i, j));
      lifts.table[static_cast<std::size_t>(i * n + j)] = w;
      lifts.table[static_cast<std::size_t>(j * n + i)] = quaternionic(w);
    }
  }
  return lifts;
}

std::vector<SymTensor> polynomials(const LiftAssignment& lifts) {
  const int n = lifts.n;
  std::vector<SymTensor> p;
  p.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Spinor> factors;
    factors.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j) {
      if (j != i) factors.push_back(lifts(i, j));
    }
    p.push_back(sym_product(factors));
  }
  return p;
}

std::vector<SymTensor> polynomials(const Configuration& c) {
  return polynomials(assign_lifts(c));
}

namespace {

// Column i holds p_i; row r is the coefficient of e1^(n-1-r) ⊙ e2^(r),
// i.e. rows ordered by decreasing e1-count. This ordering makes D = +1 on
// collinear configurations (and hence D = S/2 > 0 for triangles).
MatrixXc coefficient_matrix(const std::vector<SymTensor>& p) {
  const int n = static_cast<int>(p.size());
  MatrixXc m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < n; ++r) {
      m(r, i) = p[static_cast<std::size_t>(i)].coeffs(n - 1 - r);
    }
  }
  return m;
}

}  // namespace

Complex atiyah_D(const LiftAssignment& lifts) {
  return determinant(coefficient_matrix(polynomials(lifts)));
}

Complex atiyah_D(const Configuration& c) { return atiyah_D(assign_lifts(c)); }

Complex classic_D(const Configuration& c) {
  const LiftAssignment lifts = assign_lifts(c);
  const int n = lifts.n;

  MatrixXc m(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Spinor> forms;
    forms.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j) {
      if (j != i) forms.push_back(dualize(lifts(i, j)));
    }
    const SymTensor poly = classic_poly_product(forms);
    // Basis (u^(n-1), u^(n-2) v, ..., v^(n-1)): decreasing u-count.
    for (int r = 0; r < n; ++r) m(r, i) = poly.coeffs(n - 1 - r);
  }

  Complex denom = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix2c pair;
      pair.col(0) = dualize(lifts(i, j));
      pair.col(1) = dualize(lifts(j, i));
      denom *= determinant(pair);
    }
  }
  return determinant(m) / denom;
}

MatrixXc gram_matrix(const LiftAssignment& lifts,
                     const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  std::vector<SymTensor> p;
  p.reserve(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    std::vector<Spinor> factors;
    for (int b = 0; b < k; ++b) {
      if (b != a) factors.push_back(lifts(subset[a], subset[b]));
    }
    p.push_back(sym_product(factors));
  }
  MatrixXc h(k, k);
  for (int a = 0; a < k; ++a) {
    h(a, a) = Complex(induced_inner(p[a], p[a]).real(), 0.0);
    for (int b = a + 1; b < k; ++b) {
      const Complex e = induced_inner(p[a], p[b]);
      h(a, b) = e;
      h(b, a) = std::conj(e);
    }
  }
  return h;
}

MatrixXc gram_matrix(const Configuration& c) {
  const LiftAssignment lifts = assign_lifts(c);
  std::vector<int> all(static_cast<std::size_t>(lifts.n));
  for (int i = 0; i < lifts.n; ++i) all[static_cast<std::size_t>(i)] = i;
  return gram_matrix(lifts, all);
}

AnalysisReport analyze(const Configuration& c) {
  const LiftAssignment lifts = assign_lifts(c);
  std::vector<int> all(static_cast<std::size_t>(lifts.n));
  for (int i = 0; i < lifts.n; ++i) all[static_cast<std::size_t>(i)] = i;
  const MatrixXc h = gram_matrix(lifts, all);

  AnalysisReport r;
  r.n = lifts.n;
  r.D = atiyah_D(lifts);
  r.absD = std::abs(r.D);
  r.detH = determinant(h).real();
  r.minEig = eig_hermitian(h).eigenvalues.minCoeff();
  r.cn = basis_norm_product(r.n - 1);
  r.conj1_margin = r.minEig;
  r.conj2_margin = r.absD - 1.0;
  return r;
}

}  // namespace atiyah
