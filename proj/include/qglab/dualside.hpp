// The dual picture: diagonals for the dual quantum group, the leg identities
// combining W, W' and W'^op, and the quasi-central approximate identity
// u = (1 ⊗ ι) ω_{W W'^op* (ξ⊗η)} with its two certificates.
#pragma once

#include "qglab/diagonals.hpp"

#include <array>

namespace qglab {

/// A quantum group together with its dual and (W^op)^ = Σ Wop* Σ.
struct DualContext {
  PreparedGroup g;
  PreparedGroup ghat;
  ComplexMatrix Wop_hat;

  /// ‖Ŵ' − (W^op)^‖ with Ŵ' computed from the dual's own modular data.
  double closure_residual() const { return operator_norm(ghat.u.Wprime - Wop_hat); }
};

inline DualContext make_dual_context(const FiniteQuantumGroup& q, std::uint64_t seed = 0x5eed) {
  DualContext ctx{prepare(q, seed), prepare(dual(q), seed), {}};
  const ComplexMatrix sigma = flip_sigma(q.dim, q.dim);
  ctx.Wop_hat = sigma * ctx.g.u.Wop.adjoint() * sigma;
  return ctx;
}

namespace detail {

inline TensorVector swap_legs(const TensorVector& v) {
  const auto& l = v.legs();
  return apply_leg(flip_sigma(l[0], l[1]), {0, 1}, v);
}

}  // namespace detail

/// r1 = ‖Ŵ*(ξ⊗ζ) − σW(ζ⊗ξ)‖, r2 = ‖Ŵ'*(ξ⊗ζ) − σW^op(ζ⊗ξ)‖.
inline std::pair<double, double> flip_identity_check(const DualContext& ctx, const TensorVector& xi,
                                                     const TensorVector& zeta) {
  const auto xz = tensor(xi, zeta);
  const auto zx = tensor(zeta, xi);
  const double r1 = (apply_leg(ctx.ghat.q.W.adjoint(), {0, 1}, xz) -
                     detail::swap_legs(apply_leg(ctx.g.q.W, {0, 1}, zx))).norm();
  const double r2 = (apply_leg(ctx.ghat.u.Wprime.adjoint(), {0, 1}, xz) -
                     detail::swap_legs(apply_leg(ctx.g.u.Wop, {0, 1}, zx))).norm();
  return {r1, r2};
}

/// The four hypotheses of the dual diagonal construction, in order:
/// ‖W(ζ⊗ξ) − ζ⊗ξ‖, ‖W(η⊗ζ) − η⊗ζ‖, ‖W(ζ⊗η) − Wop(ζ⊗η)‖, ‖W(ξ⊗ζ) − Wop(ξ⊗ζ)‖.
inline std::array<double, 4> dual_conditions_residuals(const DualContext& ctx, const TensorVector& xi,
                                                       const TensorVector& eta, const TensorVector& zeta) {
  const auto& W = ctx.g.q.W;
  const auto& Wop = ctx.g.u.Wop;
  auto diff = [&](const TensorVector& v) { return (apply_leg(W, {0, 1}, v) - apply_leg(Wop, {0, 1}, v)).norm(); };
  return {sa_residual(ctx.g, xi, zeta), ca_residual(ctx.g, eta, zeta), diff(tensor(zeta, eta)),
          diff(tensor(xi, zeta))};
}

/// ω_{(W^op)^*(ξ̂⊗η̂)} on the dual, where ξ̂ and η̂ are the invariant and
/// co-invariant vectors of the dual (the co-invariant and invariant vectors
/// of the original quantum group).
inline DiagonalCandidate build_dual_diagonal(const DualContext& ctx, const NetVector& xi_hat,
                                             const NetVector& eta_hat) {
  const auto v = apply_leg(ctx.Wop_hat.adjoint(), {0, 1}, tensor(xi_hat.vector, eta_hat.vector));
  return {xi_hat, eta_hat, vector_bistate(v, ctx.ghat.q.label())};
}

/// Unitary W'^op = (J⊗J) Wop (J⊗J).
inline const ComplexMatrix& commutant_opposite(const PreparedGroup& g) { return g.u.Wprime_op; }

/// Residuals of the three identities obtained from the pentagon:
///   W12 W'23* = W'23* W13 W12
///   W23 W'12* = W'12* W'13* W23
///   W13* W23* = (Ĵ⊗Ĵ⊗J) W13 W23 (Ĵ⊗Ĵ⊗J)
inline std::array<double, 3> pentagon_commutant_identities(const PreparedGroup& g, Rng& rng, int draws = 50) {
  const auto& W = g.q.W;
  const ComplexMatrix Wpa = g.u.Wprime.adjoint();
  const ComplexMatrix Wa = W.adjoint();
  const std::vector<AntilinearOp> k{g.q.Jhat, g.q.Jhat, g.q.J};
  std::array<double, 3> worst{0.0, 0.0, 0.0};
  for (int d = 0; d < draws; ++d) {
    const TensorVector v(g.q.legs3(), random_unit_vector(g.q.dim * g.q.dim * g.q.dim, rng));
    {
      const auto lhs = apply_leg(W, {0, 1}, apply_leg(Wpa, {1, 2}, v));
      const auto rhs = apply_leg(Wpa, {1, 2}, apply_leg(W, {0, 2}, apply_leg(W, {0, 1}, v)));
      worst[0] = std::max(worst[0], (lhs - rhs).norm());
    }
    {
      const auto lhs = apply_leg(W, {1, 2}, apply_leg(Wpa, {0, 1}, v));
      const auto rhs = apply_leg(Wpa, {0, 1}, apply_leg(Wpa, {0, 2}, apply_leg(W, {1, 2}, v)));
      worst[1] = std::max(worst[1], (lhs - rhs).norm());
    }
    {
      const auto lhs = apply_leg(Wa, {0, 2}, apply_leg(Wa, {1, 2}, v));
      const auto rhs = apply_antilinear_legs(
          k, apply_leg(W, {0, 2}, apply_leg(W, {1, 2}, apply_antilinear_legs(k, v))));
      worst[2] = std::max(worst[2], (lhs - rhs).norm());
    }
  }
  return worst;
}

/// Residual of W'op13* W'13 W'op23* W23 = W'12* W'op23* W'23 W'12 W'23* W23,
/// and of the commutation [W'13, W'op23*] = 0 used to derive it.
inline std::pair<double, double> opposite_commutant_identity(const PreparedGroup& g, Rng& rng, int draws = 50) {
  const auto& W = g.q.W;
  const auto& Wp = g.u.Wprime;
  const ComplexMatrix Wpa = Wp.adjoint();
  const ComplexMatrix Wpoa = commutant_opposite(g).adjoint();
  double identity = 0.0, commutation = 0.0;
  for (int d = 0; d < draws; ++d) {
    const TensorVector v(g.q.legs3(), random_unit_vector(g.q.dim * g.q.dim * g.q.dim, rng));
    const auto lhs = apply_leg(Wpoa, {0, 2}, apply_leg(Wp, {0, 2}, apply_leg(Wpoa, {1, 2}, apply_leg(W, {1, 2}, v))));
    auto rhs = apply_leg(W, {1, 2}, v);
    rhs = apply_leg(Wpa, {1, 2}, rhs);
    rhs = apply_leg(Wp, {0, 1}, rhs);
    rhs = apply_leg(Wp, {1, 2}, rhs);
    rhs = apply_leg(Wpoa, {1, 2}, rhs);
    rhs = apply_leg(Wpa, {0, 1}, rhs);
    identity = std::max(identity, (lhs - rhs).norm());
    const auto ab = apply_leg(Wp, {0, 2}, apply_leg(Wpoa, {1, 2}, v));
    const auto ba = apply_leg(Wpoa, {1, 2}, apply_leg(Wp, {0, 2}, v));
    commutation = std::max(commutation, (ab - ba).norm());
  }
  return {identity, commutation};
}

/// Residual of W23 W12 W'op12* = W12 W'op12* W13 W23 W'13*, and of the
/// commutation of W and W'op* (their first legs lie in M and M').
inline std::pair<double, double> bai_leg_identity(const PreparedGroup& g, Rng& rng, int draws = 50) {
  const auto& W = g.q.W;
  const ComplexMatrix Wpa = g.u.Wprime.adjoint();
  const ComplexMatrix Wpoa = commutant_opposite(g).adjoint();
  double identity = 0.0, commutation = 0.0;
  for (int d = 0; d < draws; ++d) {
    const TensorVector v(g.q.legs3(), random_unit_vector(g.q.dim * g.q.dim * g.q.dim, rng));
    const auto lhs = apply_leg(W, {1, 2}, apply_leg(W, {0, 1}, apply_leg(Wpoa, {0, 1}, v)));
    auto rhs = apply_leg(Wpa, {0, 2}, v);
    rhs = apply_leg(W, {1, 2}, rhs);
    rhs = apply_leg(W, {0, 2}, rhs);
    rhs = apply_leg(Wpoa, {0, 1}, rhs);
    rhs = apply_leg(W, {0, 1}, rhs);
    identity = std::max(identity, (lhs - rhs).norm());
    const auto ab = apply_leg(W, {0, 1}, apply_leg(Wpoa, {0, 1}, v));
    const auto ba = apply_leg(Wpoa, {0, 1}, apply_leg(W, {0, 1}, v));
    commutation = std::max(commutation, (ab - ba).norm());
  }
  return {identity, commutation};
}

/// The vector W W'op* (ξ⊗η) whose second-leg slice is u.
inline TensorVector quasicentral_vector(const PreparedGroup& g, const TensorVector& xi, const TensorVector& eta) {
  return apply_leg(g.q.W, {0, 1}, apply_leg(commutant_opposite(g).adjoint(), {0, 1}, tensor(xi, eta)));
}

/// u(x) = ω_v(1 ⊗ x) with v = W W'op* (ξ⊗η).
inline Functional build_quasicentral_identity(const PreparedGroup& g, const TensorVector& xi,
                                              const TensorVector& eta) {
  const auto v = quasicentral_vector(g, xi, eta);
  return {partial_trace_outer(v.data(), v.data(), g.q.legs2(), {1}), g.q.label()};
}

/// |X(u∗ω_ζ) − <X3 w, w>| for w = W23 W12 W'op12* (ξ⊗η⊗ζ): the pairing
/// route and the three-leg vector route must agree.
inline double quasicentral_slice_consistency(const PreparedGroup& g, const TensorVector& xi, const TensorVector& eta,
                                             const TensorVector& zeta, const ComplexMatrix& x) {
  const auto u = build_quasicentral_identity(g, xi, eta);
  const cplx paired = convolve(g.q, u, vector_state(zeta, g.q.label()))(x);
  auto w = apply_leg(commutant_opposite(g).adjoint(), {0, 1}, tensor(xi, eta, zeta));
  w = apply_leg(g.q.W, {1, 2}, apply_leg(g.q.W, {0, 1}, w));
  const cplx direct = w.data().dot(apply_leg(x, {2}, w).data());
  return std::abs(paired - direct);
}

/// |X(u∗ω_ζ) − X(ω_ζ)| ≤ 2‖X‖(‖WW'*(ξ⊗ζ) − ξ⊗ζ‖ + ‖W23 W'13*(ξ⊗η⊗ζ) − W'13*(ξ⊗η⊗ζ)‖).
inline CertRecord bai_residual_bound_check(const PreparedGroup& g, const TensorVector& xi, const TensorVector& eta,
                                           const TensorVector& zeta, const ComplexMatrix& x, double slack = 1e-9) {
  if (const double r = membership_in_algebra(g.q, x); r > tol::norm_compare)
    throw DimensionError("bai_residual_bound_check: X is not in M (residual " + format_real(r) + ")");
  const auto u = build_quasicentral_identity(g, xi, eta);
  const auto wz = vector_state(zeta, g.q.label());
  const ComplexMatrix Wpa = g.u.Wprime.adjoint();
  const auto xz = tensor(xi, zeta);
  const double t1 = (apply_leg(g.q.W, {0, 1}, apply_leg(Wpa, {0, 1}, xz)) - xz).norm();
  const auto s = apply_leg(Wpa, {0, 2}, tensor(xi, eta, zeta));
  const double t2 = (apply_leg(g.q.W, {1, 2}, s) - s).norm();
  CertRecord c;
  c.value = std::abs(convolve(g.q, u, wz)(x) - wz(x));
  c.bound = 2.0 * operator_norm(x) * (t1 + t2);
  c.slack = slack;
  c.epsilon = std::max(t1, t2);
  return c;
}

/// |(ω_ζ ⊗ u)(W'* W'op Λ W'op* W' − Λ)| against
/// 2‖Λ‖(‖W'23* W23 s − s‖ + ‖W'12 s − s‖ + ‖W23* W'23 s − s‖), s = ζ⊗ξ⊗η.
inline CertRecord quasicentral_residual(const PreparedGroup& g, const TensorVector& xi, const TensorVector& eta,
                                        const TensorVector& zeta, const ComplexMatrix& lambda, double slack = 1e-9) {
  if (const double r = lambda_membership(g, lambda); r > tol::norm_compare)
    throw DimensionError("quasicentral_residual: Λ is not in M ⊗ M (residual " + format_real(r) + ")");
  const auto& Wp = g.u.Wprime;
  const auto& Wpo = commutant_opposite(g);
  const ComplexMatrix moved = Wp.adjoint() * Wpo * lambda * Wpo.adjoint() * Wp - lambda;
  const auto u = build_quasicentral_identity(g, xi, eta);
  const ComplexMatrix pairing = kron(ComplexMatrix(zeta.data() * zeta.data().adjoint()), u.rho);
  const cplx value = (pairing.transpose().array() * moved.array()).sum();

  const auto s = tensor(zeta, xi, eta);
  const ComplexMatrix Wpa = Wp.adjoint();
  const ComplexMatrix Wa = g.q.W.adjoint();
  const double t1 = (apply_leg(Wpa, {1, 2}, apply_leg(g.q.W, {1, 2}, s)) - s).norm();
  const double t2 = (apply_leg(Wp, {0, 1}, s) - s).norm();
  const double t3 = (apply_leg(Wa, {1, 2}, apply_leg(Wp, {1, 2}, s)) - s).norm();
  CertRecord c;
  c.value = std::abs(value);
  c.bound = 2.0 * operator_norm(lambda) * (t1 + t2 + t3);
  c.slack = slack;
  c.epsilon = std::max({t1, t2, t3});
  return c;
}

}  // namespace qglab
