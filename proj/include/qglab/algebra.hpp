// Spans of matrices: orthonormal bases in the Hilbert–Schmidt inner product,
// membership residuals, and *-algebra closure checks.
#pragma once

#include "qglab/random.hpp"
#include "qglab/tensorlin.hpp"

#include <vector>

namespace qglab {

using MatrixList = std::vector<ComplexMatrix>;

inline cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.array().conjugate() * b.array()).sum();
}

/// Orthonormal basis of span(elements); dependent elements are dropped.
inline MatrixList orthonormal_basis(const MatrixList& elements, double rel_tol = 1e-9) {
  MatrixList out;
  for (const auto& e : elements) {
    const double scale = e.norm();
    if (scale == 0.0) continue;
    ComplexMatrix v = e;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) v -= hs_inner(b, v) * b;
    const double r = v.norm();
    if (r > rel_tol * scale) out.push_back(v / r);
  }
  return out;
}

/// Orthogonal projection onto the span of an orthonormal basis.
inline ComplexMatrix project_onto(const MatrixList& orthonormal, const ComplexMatrix& x) {
  ComplexMatrix p = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& b : orthonormal) p += hs_inner(b, x) * b;
  return p;
}

/// ‖x − P x‖_HS / ‖x‖_HS for P the projection onto span(basis); zero for x = 0.
inline double membership_residual(const MatrixList& basis, const ComplexMatrix& x) {
  if (basis.empty()) throw DimensionError("membership_residual: empty basis");
  for (const auto& b : basis)
    if (b.rows() != x.rows() || b.cols() != x.cols())
      throw DimensionError("membership_residual: basis element shape differs from x");
  const double nx = x.norm();
  if (nx == 0.0) return 0.0;
  const auto ortho = orthonormal_basis(basis);
  return (x - project_onto(ortho, x)).norm() / nx;
}

/// Projection of X on H_A ⊗ H_B onto span{a_i ⊗ b_j} for orthonormal bases
/// {a_i}, {b_j}, computed by contraction rather than forming the product basis.
inline ComplexMatrix project_onto_tensor(const MatrixList& a_basis, const MatrixList& b_basis,
                                         const ComplexMatrix& x) {
  if (a_basis.empty() || b_basis.empty()) throw DimensionError("project_onto_tensor: empty basis");
  const auto na = a_basis.front().rows();
  const auto nb = b_basis.front().rows();
  if (x.rows() != na * nb || x.cols() != na * nb)
    throw DimensionError("project_onto_tensor: operator does not act on H_A ⊗ H_B");
  ComplexMatrix p = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& a : a_basis) {
    ComplexMatrix z = ComplexMatrix::Zero(nb, nb);
    for (Eigen::Index s = 0; s < na; ++s)
      for (Eigen::Index t = 0; t < na; ++t)
        if (a(s, t) != cplx(0.0)) z += std::conj(a(s, t)) * x.block(s * nb, t * nb, nb, nb);
    const ComplexMatrix y = project_onto(b_basis, z);
    for (Eigen::Index s = 0; s < na; ++s)
      for (Eigen::Index t = 0; t < na; ++t)
        if (a(s, t) != cplx(0.0)) p.block(s * nb, t * nb, nb, nb) += a(s, t) * y;
  }
  return p;
}

/// Membership residual of x in span(A ⊗ B), both bases orthonormal.
inline double tensor_membership_residual(const MatrixList& a_basis, const MatrixList& b_basis,
                                         const ComplexMatrix& x) {
  const double nx = x.norm();
  if (nx == 0.0) return 0.0;
  return (x - project_onto_tensor(a_basis, b_basis, x)).norm() / nx;
}

/// Worst membership residual over I, products b_i b_j and adjoints b_i*.
inline double algebra_closure_residual(const MatrixList& basis) {
  if (basis.empty()) throw DimensionError("algebra_closure_residual: empty basis");
  const auto ortho = orthonormal_basis(basis);
  auto res = [&](const ComplexMatrix& x) {
    const double nx = x.norm();
    return nx == 0.0 ? 0.0 : (x - project_onto(ortho, x)).norm() / nx;
  };
  const auto n = basis.front().rows();
  double worst = res(ComplexMatrix::Identity(n, n));
  for (const auto& a : ortho) {
    worst = std::max(worst, res(a.adjoint()));
    for (const auto& b : ortho) worst = std::max(worst, res(a * b));
  }
  return worst;
}

/// Random element with Gaussian coefficients in an orthonormal basis.
inline ComplexMatrix random_element(const MatrixList& basis, Rng& rng) {
  ComplexMatrix x = ComplexMatrix::Zero(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) x += random_gaussian(rng) * b;
  return x;
}

/// Random self-adjoint element of a *-closed span.
inline ComplexMatrix random_self_adjoint_element(const MatrixList& basis, Rng& rng) {
  ComplexMatrix x = random_element(basis, rng);
  return (x + x.adjoint()) / 2.0;
}

/// Random element of span(A ⊗ B).
inline ComplexMatrix random_tensor_element(const MatrixList& a_basis, const MatrixList& b_basis, Rng& rng) {
  const auto na = a_basis.front().rows();
  const auto nb = b_basis.front().rows();
  ComplexMatrix x = ComplexMatrix::Zero(na * nb, na * nb);
  for (const auto& a : a_basis) {
    const ComplexMatrix y = random_element(b_basis, rng);
    for (Eigen::Index s = 0; s < na; ++s)
      for (Eigen::Index t = 0; t < na; ++t)
        if (a(s, t) != cplx(0.0)) x.block(s * nb, t * nb, nb, nb) += a(s, t) * y;
  }
  return x;
}

}  // namespace qglab
