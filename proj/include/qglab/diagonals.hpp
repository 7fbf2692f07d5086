// Approximate diagonals ω_{W'*(ξ⊗η)} built from invariant and co-invariant
// unit vectors, the θ_ξ conditional map, and the commutator bound
// certificate.
#pragma once

#include "qglab/funalg.hpp"
#include "qglab/qgcore.hpp"
#include "qglab/random.hpp"
#include "qglab/report.hpp"

#include <cstdio>
#include <string>
#include <utility>

namespace qglab {

/// A quantum group with its derived unitaries and norm decompositions.
struct PreparedGroup {
  FiniteQuantumGroup q;
  DerivedUnitaries u;
  NormContext norms;
};

inline PreparedGroup prepare(FiniteQuantumGroup q, std::uint64_t seed = 0x5eed) {
  PreparedGroup g{std::move(q), {}, {}};
  g.u = derived_unitaries(g.q);
  g.norms = make_norm_context(g.q, seed);
  return g;
}

/// Unit vector drawn from one of the nets.
struct NetVector {
  TensorVector vector;
  std::string label;

  NetVector(TensorVector v, std::string l) : vector(std::move(v)), label(std::move(l)) {
    if (vector.leg_count() != 1 || !vector.is_unit(1e-12))
      throw DimensionError("NetVector '" + label + "': expected a unit vector on H");
  }
};

struct DiagonalCandidate {
  NetVector xi;
  NetVector eta;
  BiFunctional bifunctional;
};

/// ‖W(ζ⊗ξ) − ζ⊗ξ‖.
inline double sa_residual(const PreparedGroup& g, const TensorVector& xi, const TensorVector& zeta) {
  const auto v = tensor(zeta, xi);
  return (apply_leg(g.q.W, {0, 1}, v) - v).norm();
}

/// ‖W(η⊗ζ) − η⊗ζ‖.
inline double ca_residual(const PreparedGroup& g, const TensorVector& eta, const TensorVector& zeta) {
  const auto v = tensor(eta, zeta);
  return (apply_leg(g.q.W, {0, 1}, v) - v).norm();
}

/// ‖W*(ξ⊗ζ) − W'*(ξ⊗ζ)‖.
inline double c1_residual(const PreparedGroup& g, const TensorVector& xi, const TensorVector& zeta) {
  const auto v = tensor(xi, zeta);
  return (apply_leg(g.q.W.adjoint(), {0, 1}, v) - apply_leg(g.u.Wprime.adjoint(), {0, 1}, v)).norm();
}

/// ‖W*(ζ⊗η) − W'*(ζ⊗η)‖.
inline double c2_residual(const PreparedGroup& g, const TensorVector& eta, const TensorVector& zeta) {
  const auto v = tensor(zeta, eta);
  return (apply_leg(g.q.W.adjoint(), {0, 1}, v) - apply_leg(g.u.Wprime.adjoint(), {0, 1}, v)).norm();
}

/// (ξ* ⊗ 1) W' : the Kraus operator of θ_ξ, as an n × n² matrix.
inline ComplexMatrix theta_kraus_row(const PreparedGroup& g, const TensorVector& xi) {
  const auto n = static_cast<Eigen::Index>(g.q.dim);
  ComplexMatrix r = ComplexMatrix::Zero(n, n * n);
  for (Eigen::Index s = 0; s < n; ++s) r += std::conj(xi.data()(s)) * g.u.Wprime.middleRows(s * n, n);
  return r;
}

/// θ_ξ(Λ) = (ω_ξ ⊗ ι)(W' Λ W'*).
inline ComplexMatrix theta(const PreparedGroup& g, const TensorVector& xi, const ComplexMatrix& lambda) {
  const auto n = g.q.dim;
  if (static_cast<std::size_t>(lambda.rows()) != n * n || lambda.rows() != lambda.cols())
    throw DimensionError("theta: Λ must act on H ⊗ H");
  return slice(SliceSide::left, xi.data(), g.u.Wprime * lambda * g.u.Wprime.adjoint(), n, n);
}

/// The vector JĴξ appearing in the simple-tensor formula for θ.
inline TensorVector j_jhat(const PreparedGroup& g, const TensorVector& xi) {
  return TensorVector(g.q.J.apply(g.q.Jhat.apply(xi.data())));
}

/// (ω_w ⊗ ι)((X ⊗ 1) Γ(Y)).
inline ComplexMatrix theta_simple_tensor_form(const PreparedGroup& g, const TensorVector& w, const ComplexMatrix& x,
                                              const ComplexMatrix& y) {
  const auto n = g.q.dim;
  const ComplexMatrix one = ComplexMatrix::Identity(n, n);
  return slice(SliceSide::left, w.data(), kron(x, one) * comultiply(g.q, y), n, n);
}

/// Choi matrix Σ_{ij} E_ij ⊗ θ_ξ(E_ij) over matrix units of B(H ⊗ H).
inline ComplexMatrix theta_choi(const PreparedGroup& g, const TensorVector& xi) {
  const auto n = static_cast<Eigen::Index>(g.q.dim);
  const auto nn = n * n;
  const ComplexMatrix r = theta_kraus_row(g, xi);
  ComplexMatrix choi(nn * n, nn * n);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = 0; j < nn; ++j) choi.block(i * n, j * n, n, n) = r.col(i) * r.col(j).adjoint();
  return choi;
}

inline double min_eigenvalue(const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("min_eigenvalue: eigensolver failed");
  return es.eigenvalues()(0);
}

/// ω_{W'*(ξ⊗η)}.
inline DiagonalCandidate build_diagonal(const PreparedGroup& g, const NetVector& xi, const NetVector& eta) {
  const auto v = apply_leg(g.u.Wprime.adjoint(), {0, 1}, tensor(xi.vector, eta.vector));
  return {xi, eta, vector_bistate(v, g.q.label())};
}

struct ObadResiduals {
  double commutator = 0.0;  // ‖a·x − x·a‖
  double identity = 0.0;    // ‖Γ_*(x)∗a − a‖
};

inline ObadResiduals obad_residuals(const PreparedGroup& g, const BiFunctional& x, const Functional& a) {
  ObadResiduals r;
  r.commutator = g.norms.norm(module_action_left(g.q, a, x) - module_action_right(g.q, x, a));
  r.identity = g.norms.norm(convolve(g.q, gamma_star(g.q, x), a) - a);
  return r;
}

inline ObadResiduals obad_residuals(const PreparedGroup& g, const DiagonalCandidate& d, const Functional& a) {
  return obad_residuals(g, d.bifunctional, a);
}

inline double lambda_membership(const PreparedGroup& g, const ComplexMatrix& lambda) {
  return tensor_membership_residual(g.q.algebra_basis, g.q.algebra_basis, lambda);
}

/// |(ω_ζ·x − x·ω_ζ)(Λ)| for x = ω_v, via three-leg inner products.
inline double module_commutator_pairing(const PreparedGroup& g, const TensorVector& zeta, const TensorVector& v,
                                        const ComplexMatrix& lambda) {
  const auto a = apply_leg(g.q.W, {0, 1}, tensor(zeta, v));
  const auto b = apply_leg(g.q.W, {1, 2}, tensor(v, zeta));
  const cplx t1 = a.data().dot(apply_leg(lambda, {1, 2}, a).data());
  const cplx t2 = b.data().dot(apply_leg(lambda, {0, 2}, b).data());
  return std::abs(t1 - t2);
}

/// Checks |(ω_ζ·x − x·ω_ζ)(Λ)| ≤ 3ε‖Λ‖ for x = ω_{W'*(ξ⊗η)}, with ε the
/// larger of ‖W(ζ⊗ξ) − ζ⊗ξ‖ and ‖ω_ζ∗ω_η − ω_η∗ω_ζ‖.
inline CertRecord certify_commutator_bound(const PreparedGroup& g, const TensorVector& zeta, const NetVector& xi,
                                           const NetVector& eta, const ComplexMatrix& lambda, double slack = 1e-9) {
  if (const double r = lambda_membership(g, lambda); r > tol::norm_compare)
    throw DimensionError("certify_commutator_bound: Λ is not in M ⊗ M (residual " + format_real(r) + ")");
  const double eps1 = sa_residual(g, xi.vector, zeta);
  const auto wz = vector_state(zeta, g.q.label());
  const auto we = vector_state(eta.vector, g.q.label());
  const double eps2 = g.norms.norm(convolve(g.q, wz, we) - convolve(g.q, we, wz));
  const double eps = std::max(eps1, eps2);
  const auto v = apply_leg(g.u.Wprime.adjoint(), {0, 1}, tensor(xi.vector, eta.vector));
  CertRecord c;
  c.value = module_commutator_pairing(g, zeta, v, lambda);
  c.bound = 3.0 * eps * operator_norm(lambda);
  c.slack = slack;
  c.epsilon = eps;
  return c;
}

/// Exactly invariant vectors: for L^∞(G) the uniform vector satisfies the
/// strong-amenability condition and δ_e the co-amenability condition; for
/// the group algebra the roles are exchanged.
inline std::pair<NetVector, NetVector> exact_nets(const FiniteQuantumGroup& q) {
  const auto n = static_cast<Eigen::Index>(q.dim);
  ComplexVector uniform = ComplexVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  ComplexVector delta = ComplexVector::Zero(n);
  delta(0) = 1.0;
  switch (q.construction) {
    case Construction::function_algebra:
      return {NetVector(TensorVector(uniform), "exact-SA uniform"), NetVector(TensorVector(delta), "exact-CA delta_e")};
    case Construction::group_algebra:
      return {NetVector(TensorVector(delta), "exact-SA delta_e"), NetVector(TensorVector(uniform), "exact-CA uniform")};
    case Construction::generic: break;
  }
  throw DimensionError("exact_nets: no exact invariant vectors known for generic constructions");
}

/// normalize((1 − t)·exact + t·u) for a random unit u.
inline NetVector perturbed_net(const NetVector& exact, double t, Rng& rng) {
  const ComplexVector u = random_unit_vector(exact.vector.size(), rng);
  const ComplexVector v = (1.0 - t) * exact.vector.data() + t * u;
  char t_text[32];
  std::snprintf(t_text, sizeof t_text, " t=%g", t);
  return NetVector(TensorVector(v / v.norm()), exact.label + t_text);
}

/// ‖ω̂_{Ŵop* Ŵ(ζ⊗ξ)} − ω̂_{ζ⊗ξ}‖ on the dual side.
inline double quasicentral_bai_remark_check(const PreparedGroup& qhat, const TensorVector& zeta,
                                            const TensorVector& xi) {
  const auto v = tensor(zeta, xi);
  const auto moved = apply_leg(qhat.u.Wop.adjoint(), {0, 1}, apply_leg(qhat.q.W, {0, 1}, v));
  return qhat.norms.norm(vector_bistate(moved, qhat.q.label()) - vector_bistate(v, qhat.q.label()));
}

}  // namespace qglab
