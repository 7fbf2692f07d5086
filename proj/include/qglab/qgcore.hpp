// Finite quantum groups: construction from Cayley tables, duality, the
// comultiplication, the associated unitaries and the structural identity
// catalog they satisfy.
#pragma once

#include "qglab/algebra.hpp"
#include "qglab/group.hpp"
#include "qglab/report.hpp"
#include "qglab/tensorlin.hpp"

#include <string>

namespace qglab {

enum class Construction { function_algebra, group_algebra, generic };

inline std::string to_string(Construction c) {
  switch (c) {
    case Construction::function_algebra: return "function-algebra";
    case Construction::group_algebra: return "group-algebra";
    case Construction::generic: return "generic";
  }
  return "generic";
}

/// A finite-dimensional quantum group in its regular representation.
///
/// `algebra_basis` is an orthonormal (Hilbert–Schmidt) basis of M ⊂ B(H).
/// J and Jhat are the modular conjugations of the Haar weights of the
/// quantum group and its dual. All shipped constructions are Kac, nu = 1.
struct FiniteQuantumGroup {
  std::string name;
  Construction construction = Construction::generic;
  std::size_t dim = 0;
  ComplexMatrix W;
  AntilinearOp J;
  AntilinearOp Jhat;
  TensorVector haar_vector;
  double nu = 1.0;
  MatrixList algebra_basis;

  std::string label() const { return name + "/" + to_string(construction); }
  LegList legs2() const { return {dim, dim}; }
  LegList legs3() const { return {dim, dim, dim}; }
};

/// L^∞(G) acting on ℓ²(G): W(e_a ⊗ e_b) = e_a ⊗ e_{ab}.
inline FiniteQuantumGroup from_cayley_function_algebra(const GroupTable& g) {
  const auto n = g.order();
  FiniteQuantumGroup q;
  q.name = g.name();
  q.construction = Construction::function_algebra;
  q.dim = n;
  q.W = ComplexMatrix::Zero(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) q.W(a * n + g.mul(a, b), a * n + b) = 1.0;
  q.J = AntilinearOp::conjugation(n);
  ComplexMatrix inversion = ComplexMatrix::Zero(n, n);
  for (std::size_t s = 0; s < n; ++s) inversion(s, g.inverse(s)) = 1.0;
  q.Jhat = AntilinearOp(inversion);
  q.haar_vector = TensorVector(ComplexVector::Ones(n));
  q.nu = 1.0;
  for (std::size_t s = 0; s < n; ++s) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(s, s) = 1.0;
    q.algebra_basis.push_back(std::move(e));
  }
  return q;
}

/// Orthonormal basis of span{(ω ⊗ ι)(W)} over all functionals ω on B(H).
inline MatrixList left_slice_span(const ComplexMatrix& w, std::size_t n) {
  MatrixList slices;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      ComplexMatrix rho = ComplexMatrix::Zero(n, n);
      rho(t, s) = 1.0;
      slices.push_back(slice(SliceSide::left, rho, w, n, n));
    }
  return orthonormal_basis(slices);
}

/// The dual quantum group on the same Hilbert space: What = Σ W* Σ, algebra
/// generated by left slices of W, modular conjugations exchanged.
inline FiniteQuantumGroup dual(const FiniteQuantumGroup& q) {
  const auto n = q.dim;
  const ComplexMatrix sigma = flip_sigma(n, n);
  FiniteQuantumGroup d;
  d.name = q.name;
  d.dim = n;
  d.construction = q.construction == Construction::function_algebra ? Construction::group_algebra
                   : q.construction == Construction::group_algebra  ? Construction::function_algebra
                                                                     : Construction::generic;
  d.W = sigma * q.W.adjoint() * sigma;
  d.J = q.Jhat;
  d.Jhat = q.J;
  d.nu = 1.0 / q.nu;
  d.algebra_basis = left_slice_span(q.W, n);
  if (d.algebra_basis.empty() || algebra_closure_residual(d.algebra_basis) > 1e-8)
    throw NumericalError("dual: slices of W do not span a unital *-algebra (non-regular W?)");
  switch (d.construction) {
    case Construction::group_algebra: {
      ComplexVector e0 = ComplexVector::Zero(n);
      e0(0) = 1.0;
      d.haar_vector = TensorVector(e0);
      break;
    }
    case Construction::function_algebra: d.haar_vector = TensorVector(ComplexVector::Ones(n)); break;
    case Construction::generic: d.haar_vector = q.haar_vector; break;
  }
  return d;
}

inline double membership_in_algebra(const FiniteQuantumGroup& q, const ComplexMatrix& x) {
  const double nx = x.norm();
  return nx == 0.0 ? 0.0 : (x - project_onto(q.algebra_basis, x)).norm() / nx;
}

/// Γ(x) = W*(1 ⊗ x)W.
inline ComplexMatrix comultiply(const FiniteQuantumGroup& q, const ComplexMatrix& x, double tolerance = 1e-8) {
  if (static_cast<std::size_t>(x.rows()) != q.dim || x.rows() != x.cols())
    throw DimensionError("comultiply: x does not act on H");
  if (const double r = membership_in_algebra(q, x); r > tolerance)
    throw DimensionError("comultiply: x is not in M (membership residual " + format_real(r) + ")");
  const ComplexMatrix one = ComplexMatrix::Identity(q.dim, q.dim);
  return q.W.adjoint() * kron(one, x) * q.W;
}

/// Unitaries of the related quantum groups, each computed by one fixed route.
struct DerivedUnitaries {
  ComplexMatrix What;        // dual:            Σ W* Σ
  ComplexMatrix V;           // right regular:   (Ĵ⊗Ĵ) Σ W* Σ (Ĵ⊗Ĵ)
  ComplexMatrix Vhat;        // dual's V:        (J⊗J) Σ What* Σ (J⊗J)
  ComplexMatrix Wop;         // opposite:        Σ V* Σ
  ComplexMatrix Wprime;      // commutant:       (J⊗J) W (J⊗J)
  ComplexMatrix Wprime_op;   // commutant of the opposite: (J⊗J) Wop (J⊗J)
  ComplexMatrix What_prime;  // commutant of the dual:     (Ĵ⊗Ĵ) What (Ĵ⊗Ĵ)
};

inline DerivedUnitaries derived_unitaries(const FiniteQuantumGroup& q) {
  const auto n = q.dim;
  const ComplexMatrix sigma = flip_sigma(n, n);
  const auto jj = kron(q.J, q.J);
  const auto jhjh = kron(q.Jhat, q.Jhat);
  DerivedUnitaries d;
  d.What = sigma * q.W.adjoint() * sigma;
  d.V = conj_by_antilinear(jhjh, sigma * q.W.adjoint() * sigma);
  d.Vhat = conj_by_antilinear(jj, sigma * d.What.adjoint() * sigma);
  d.Wop = sigma * d.V.adjoint() * sigma;
  d.Wprime = conj_by_antilinear(jj, q.W);
  d.Wprime_op = conj_by_antilinear(jj, d.Wop);
  d.What_prime = conj_by_antilinear(jhjh, d.What);
  return d;
}

namespace anchors {
inline constexpr const char* catalog = "Proposition 2.2";
inline constexpr const char* definition = "Definition 2.1";
inline constexpr const char* background = "Section 2";
}  // namespace anchors

/// Evaluates the structural identity catalog. Two-leg relations are exact
/// operator-norm residuals; the pentagon is probed with `draws` random
/// three-leg vectors.
inline CheckReport verify_structure_identities(const FiniteQuantumGroup& q, Rng& rng, int draws = 20,
                                               double tolerance = tol::identity) {
  const auto n = q.dim;
  const auto d = derived_unitaries(q);
  const ComplexMatrix sigma = flip_sigma(n, n);
  const auto jj = kron(q.J, q.J);
  const auto jhjh = kron(q.Jhat, q.Jhat);
  const auto jhj = kron(q.Jhat, q.J);
  const std::string suite = "structure";
  CheckReport report;
  auto rel = [&](const std::string& name, const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                 const char* anchor = anchors::catalog) {
    report.add(CheckRecord::residual_check(suite, name, anchor, operator_norm(lhs - rhs), tolerance));
  };

  report.add(CheckRecord::residual_check(suite, "W unitary", anchors::background, unitarity_residual(q.W),
                                         tolerance));
  rel("W* = (Jhat⊗J) W (Jhat⊗J)", q.W.adjoint(), conj_by_antilinear(jhj, q.W));
  {
    // Ĵ J = ν^{i/4} J Ĵ, both sides linear.
    const cplx phase = std::pow(cplx(q.nu, 0.0), cplx(0.0, 0.25));
    rel("Jhat J = nu^(i/4) J Jhat", q.Jhat * q.J, phase * (q.J * q.Jhat));
  }
  rel("What = Σ W* Σ", d.What, sigma * q.W.adjoint() * sigma);
  rel("V = (Jhat⊗Jhat) Σ W* Σ (Jhat⊗Jhat)", d.V, conj_by_antilinear(jhjh, d.What));
  rel("Vhat = (J⊗J) W (J⊗J)", d.Vhat, conj_by_antilinear(jj, q.W));
  rel("Wop = Σ V* Σ", d.Wop, sigma * d.V.adjoint() * sigma);
  rel("Wop = (Jhat⊗Jhat) W (Jhat⊗Jhat)", d.Wop, conj_by_antilinear(jhjh, q.W));
  rel("W' = Vhat", d.Wprime, d.Vhat);
  rel("What' = (Wop)^", d.What_prime, sigma * d.Wop.adjoint() * sigma);

  {
    double worst = 0.0;
    for (int k = 0; k < draws; ++k) {
      TensorVector v(q.legs3(), random_unit_vector(n * n * n, rng));
      const auto lhs = apply_leg(q.W, {0, 1}, apply_leg(q.W, {0, 2}, apply_leg(q.W, {1, 2}, v)));
      const auto rhs = apply_leg(q.W, {1, 2}, apply_leg(q.W, {0, 1}, v));
      worst = std::max(worst, (lhs - rhs).norm());
    }
    report.add(CheckRecord::residual_check(suite, "pentagon W12 W13 W23 = W23 W12", anchors::catalog, worst,
                                           tolerance));
  }

  report.add(CheckRecord::residual_check(suite, "scaling constant nu = 1", anchors::catalog,
                                         std::abs(q.nu - 1.0), tolerance));
  report.add(CheckRecord::residual_check(suite, "J involutive", anchors::background,
                                         q.J.involution_residual(), tolerance));
  report.add(CheckRecord::residual_check(suite, "Jhat involutive", anchors::background,
                                         q.Jhat.involution_residual(), tolerance));

  // Γ(x) = W*(1⊗x)W = V(x⊗1)V*, and Wop implements the flipped coproduct.
  {
    const ComplexMatrix one = ComplexMatrix::Identity(n, n);
    double via_v = 0.0, via_op = 0.0, hom = 0.0;
    for (int k = 0; k < 4; ++k) {
      const ComplexMatrix x = random_element(q.algebra_basis, rng);
      const ComplexMatrix y = random_element(q.algebra_basis, rng);
      const ComplexMatrix gx = q.W.adjoint() * kron(one, x) * q.W;
      const ComplexMatrix gy = q.W.adjoint() * kron(one, y) * q.W;
      const ComplexMatrix gxy = q.W.adjoint() * kron(one, x * y) * q.W;
      via_v = std::max(via_v, operator_norm(gx - d.V * kron(x, one) * d.V.adjoint()));
      via_op = std::max(via_op, operator_norm(d.Wop.adjoint() * kron(one, x) * d.Wop - sigma * gx * sigma));
      hom = std::max(hom, operator_norm(gxy - gx * gy) / (1.0 + x.norm() * y.norm()));
    }
    report.add(CheckRecord::residual_check(suite, "V implements the comultiplication", anchors::background,
                                           via_v, tolerance));
    report.add(CheckRecord::residual_check(suite, "Wop implements the opposite comultiplication",
                                           anchors::background, via_op, tolerance));
    report.add(CheckRecord::residual_check(suite, "comultiplication multiplicative", anchors::definition, hom,
                                           tolerance));
  }
  report.add(CheckRecord::residual_check(suite, "W in M ⊗ Mhat", anchors::background,
                                         tensor_membership_residual(q.algebra_basis, left_slice_span(q.W, n), q.W),
                                         tolerance));
  return report;
}

}  // namespace qglab
