#pragma once

#include <Eigen/Dense>

#include <vector>

#include "atiyah/spinor.hpp"

namespace atiyah {

/// Element of Sym^m(C^2) in the monomial basis: coeffs[k] multiplies
/// e1^(k) ⊙ e2^(m-k), i.e. k factors of e1 and m-k of e2.
struct SymTensor {
  Eigen::VectorXcd coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Symmetric tensor product of m spinors, expanded by the subset sum
/// coeffs[k] = sum over k-subsets S of prod_{j in S} u_j * prod_{j not in S} v_j.
/// Exactly symmetric in the argument order.
SymTensor sym_product(const std::vector<Spinor>& factors);

/// The hermitian inner product induced on Sym^m(C^2) by herm, without the
/// 1/m! normalization: equals the permanent of the mixed Gram matrix of the
/// factors. In coefficients: sum_k p_k * conj(q_k) * k!(m-k)!.
Complex induced_inner(const SymTensor& p, const SymTensor& q);

/// Squared norms of the monomial basis of Sym^m(C^2): weights[k] = k!(m-k)!.
Eigen::VectorXd basis_norms(int degree);

/// Product of all basis norms at the given degree; at degree n-1 this is
/// the c_n factor relating det(H_n) to |D|^2.
double basis_norm_product(int degree);

/// Multiplies linear forms a*u + b*v, given as coefficient pairs (a, b),
/// into a degree-m homogeneous polynomial; coeffs[k] is the u^k v^(m-k)
/// coefficient. Used by the cross-check between the two determinant routes.
SymTensor classic_poly_product(const std::vector<Spinor>& linear_forms);

}  // namespace atiyah
