#include "atiyah/sym_tensor.hpp"

#include <bit>
#include <cstdint>

namespace atiyah {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

SymTensor sym_product(const std::vector<Spinor>& factors) {
  const int m = static_cast<int>(factors.size());
  if (m < 1) throw std::invalid_argument("sym_product: empty factor list");
  if (m > 24) throw std::invalid_argument("sym_product: degree too large");

  SymTensor p;
  p.coeffs = Eigen::VectorXcd::Zero(m + 1);
  const std::uint32_t full = (1u << m) - 1u;
  for (std::uint32_t subset = 0; subset <= full; ++subset) {
    Complex term = 1.0;
    for (int j = 0; j < m; ++j) {
      term *= (subset & (1u << j)) ? factors[j](0) : factors[j](1);
    }
    p.coeffs(std::popcount(subset)) += term;
  }
  return p;
}

Complex induced_inner(const SymTensor& p, const SymTensor& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("induced_inner: degree mismatch");
  }
  const int m = p.degree();
  const Eigen::VectorXd w = basis_norms(m);
  Complex sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    sum += p.coeffs(k) * std::conj(q.coeffs(k)) * w(k);
  }
  return sum;
}

Eigen::VectorXd basis_norms(int degree) {
  if (degree < 0) throw std::invalid_argument("basis_norms: negative degree");
  Eigen::VectorXd w(degree + 1);
  for (int k = 0; k <= degree; ++k) {
    w(k) = factorial(k) * factorial(degree - k);
  }
  return w;
}

double basis_norm_product(int degree) {
  return basis_norms(degree).prod();
}

SymTensor classic_poly_product(const std::vector<Spinor>& linear_forms) {
  const int m = static_cast<int>(linear_forms.size());
  if (m < 1) {
    throw std::invalid_argument("classic_poly_product: empty factor list");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(m + 1);
  c(0) = 1.0;  // degree-0 polynomial "1", u-count index grows as we multiply
  for (int f = 0; f < m; ++f) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(m + 1);
    const Complex a = linear_forms[f](0), b = linear_forms[f](1);
    for (int k = 0; k <= f; ++k) {
      next(k + 1) += c(k) * a;
      next(k) += c(k) * b;
    }
    c = next;
  }
  SymTensor p;
  p.coeffs = std::move(c);
  return p;
}

}  // namespace atiyah
