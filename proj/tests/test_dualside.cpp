#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qglab;

namespace {

TensorVector basis(std::size_t n, std::size_t i) {
  ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return TensorVector(e);
}

DualContext ctx_for(const std::string& name, bool group_algebra) {
  const auto f = from_cayley_function_algebra(*builtin_group(name));
  return make_dual_context(group_algebra ? dual(f) : f);
}

std::vector<DualContext> all_contexts() {
  std::vector<DualContext> out;
  for (const auto& name : builtin_group_names())
    for (bool side : {false, true}) out.push_back(ctx_for(name, side));
  return out;
}

}  // namespace

TEST(DualContext, ClosureOnEveryBuiltin) {
  for (const auto& ctx : all_contexts()) EXPECT_LE(ctx.closure_residual(), 1e-10) << ctx.g.q.label();
}

TEST(FlipIdentities, HoldForRandomVectors) {
  Rng rng(1);
  for (const auto& ctx : all_contexts()) {
    for (int k = 0; k < 5; ++k) {
      const TensorVector xi(random_unit_vector(ctx.g.q.dim, rng)), zeta(random_unit_vector(ctx.g.q.dim, rng));
      const auto [r1, r2] = flip_identity_check(ctx, xi, zeta);
      EXPECT_LE(r1, 1e-11);
      EXPECT_LE(r2, 1e-11);
    }
  }
  const auto z2 = ctx_for("Z2", false);
  const auto [r1, r2] = flip_identity_check(z2, basis(2, 0), basis(2, 0));
  EXPECT_EQ(r1, 0.0);
  EXPECT_EQ(r2, 0.0);
}

TEST(DualConditions, ExactNetsAndAbelianGroups) {
  Rng rng(2);
  for (const auto& name : builtin_group_names()) {
    const auto ctx = ctx_for(name, false);
    const auto [xi, eta] = exact_nets(ctx.g.q);
    const TensorVector zeta(random_unit_vector(ctx.g.q.dim, rng));
    const auto c = dual_conditions_residuals(ctx, xi.vector, eta.vector, zeta);
    EXPECT_LE(c[0], 1e-14);
    EXPECT_LE(c[1], 1e-14);
    if (builtin_group(name)->is_abelian()) {
      const TensorVector a(random_unit_vector(ctx.g.q.dim, rng)), b(random_unit_vector(ctx.g.q.dim, rng));
      const auto r = dual_conditions_residuals(ctx, a, b, zeta);
      EXPECT_LE(r[2], 1e-12) << name;
      EXPECT_LE(r[3], 1e-12) << name;
    }
  }
  const auto s3 = ctx_for("S3", false);
  const auto r = dual_conditions_residuals(s3, TensorVector(random_unit_vector(6, rng)),
                                           TensorVector(random_unit_vector(6, rng)), TensorVector(random_unit_vector(6, rng)));
  EXPECT_TRUE(std::isfinite(r[2]));
  EXPECT_GT(r[2], 1e-6);
}

TEST(DualDiagonal, ExactForEveryBuiltinBothSides) {
  for (const auto& ctx : all_contexts()) {
    const auto [xi, eta] = exact_nets(ctx.g.q);
    const auto d = build_dual_diagonal(ctx, eta, xi);
    EXPECT_NEAR(d.bifunctional(ComplexMatrix::Identity(d.bifunctional.rho2.rows(), d.bifunctional.rho2.cols())).real(),
                1.0, 1e-12);
    for (std::size_t i = 0; i < ctx.ghat.q.dim; ++i) {
      const auto r = obad_residuals(ctx.ghat, d, vector_state(basis(ctx.ghat.q.dim, i), ctx.ghat.q.label()));
      EXPECT_LE(r.commutator, 1e-10) << ctx.g.q.label();
      EXPECT_LE(r.identity, 1e-10) << ctx.g.q.label();
    }
  }
}

TEST(DualDiagonal, TrivialGroup) {
  const auto ctx = ctx_for("Z1", false);
  const auto [xi, eta] = exact_nets(ctx.g.q);
  EXPECT_NEAR(std::abs(build_dual_diagonal(ctx, eta, xi).bifunctional.rho2(0, 0)), 1.0, 1e-15);
}

TEST(PentagonCommutantIdentities, HoldOnBothSides) {
  for (const auto& name : {"Z2", "S3", "Q8"})
    for (bool side : {false, true}) {
      const auto ctx = ctx_for(name, side);
      Rng rng(3);
      const auto r = pentagon_commutant_identities(ctx.g, rng, 50);
      const double tol = std::string(name) == "Z2" ? 1e-12 : 1e-10;
      for (double x : r) EXPECT_LE(x, tol) << ctx.g.q.label();
    }
}

TEST(PentagonCommutantIdentities, DenseOracleAtSmallOrder) {
  for (bool side : {false, true}) {
    const auto ctx = ctx_for("S3", side);
    const auto& g = ctx.g;
    const auto n = g.q.dim;
    const LegList dims{n, n, n};
    auto e = [&](const ComplexMatrix& m, const LegList& legs) { return oracle::dense_embed(m, legs, dims); };
    const ComplexMatrix w12 = e(g.q.W, {0, 1}), w13 = e(g.q.W, {0, 2}), w23 = e(g.q.W, {1, 2});
    const ComplexMatrix p12 = e(g.u.Wprime, {0, 1}), p13 = e(g.u.Wprime, {0, 2}), p23 = e(g.u.Wprime, {1, 2});
    EXPECT_LE(operator_norm(w12 * p23.adjoint() - p23.adjoint() * w13 * w12), 1e-10);
    EXPECT_LE(operator_norm(w23 * p12.adjoint() - p12.adjoint() * p13.adjoint() * w23), 1e-10);
    const auto k = kron(kron(g.q.Jhat, g.q.Jhat), g.q.J);
    EXPECT_LE(operator_norm(w13.adjoint() * w23.adjoint() - conj_by_antilinear(k, ComplexMatrix(w13 * w23))), 1e-10);
  }
}

TEST(PentagonCommutantIdentities, RealSpecializationOnFunctionAlgebra) {
  // J = conjugation and W real: the third identity reads W13* W23* = (Ĵ⊗Ĵ⊗1) W13 W23 (Ĵ⊗Ĵ⊗1).
  const auto ctx = ctx_for("S3", false);
  const auto& g = ctx.g;
  const LegList dims{6, 6, 6};
  const ComplexMatrix w13 = oracle::dense_embed(g.q.W, {0, 2}, dims), w23 = oracle::dense_embed(g.q.W, {1, 2}, dims);
  const ComplexMatrix u = kron(kron(g.q.Jhat.unitary_part(), g.q.Jhat.unitary_part()), ComplexMatrix::Identity(6, 6));
  EXPECT_LE(operator_norm(w13.adjoint() * w23.adjoint() - u * w13 * w23 * u.adjoint()), 1e-12);
}

TEST(OppositeCommutantIdentity, HoldsWithCommutationSubcheck) {
  for (const auto& name : {"Z2", "S3", "D4"})
    for (bool side : {false, true}) {
      const auto ctx = ctx_for(name, side);
      Rng rng(4);
      const auto [identity, commutation] = opposite_commutant_identity(ctx.g, rng, 50);
      EXPECT_LE(identity, std::string(name) == "Z2" ? 1e-12 : 1e-10);
      EXPECT_LE(commutation, 1e-12);
    }
}

TEST(BaiLegIdentity, HoldsWithCommutationSubcheck) {
  for (const auto& name : {"Z2", "S3", "Q8"})
    for (bool side : {false, true}) {
      const auto ctx = ctx_for(name, side);
      Rng rng(5);
      const auto [identity, commutation] = bai_leg_identity(ctx.g, rng, 50);
      EXPECT_LE(identity, std::string(name) == "Z2" ? 1e-12 : 1e-10);
      EXPECT_LE(commutation, 1e-12);
    }
}

TEST(QuasicentralIdentity, UnitalAndExactAtExactNets) {
  for (const auto& name : builtin_group_names()) {
    const auto g = prepare(from_cayley_function_algebra(*builtin_group(name)));
    const auto [xi, eta] = exact_nets(g.q);
    const auto u = build_quasicentral_identity(g, xi.vector, eta.vector);
    EXPECT_NEAR(std::abs(u(ComplexMatrix::Identity(g.q.dim, g.q.dim))), 1.0, 1e-12);
    for (std::size_t i = 0; i < g.q.dim; ++i) {
      const auto a = vector_state(basis(g.q.dim, i), g.q.label());
      EXPECT_LE(g.norms.norm(convolve(g.q, u, a) - a), 1e-10) << name;
    }
  }
}

TEST(QuasicentralIdentity, Z2Explicit) {
  const auto g = prepare(from_cayley_function_algebra(cyclic_group(2)));
  const auto [xi, eta] = exact_nets(g.q);
  // W'op = W for abelian G, so v = W W* (ξ⊗η) = ξ⊗η and u = ω_η = δ_e.
  const auto v = quasicentral_vector(g, xi.vector, eta.vector);
  EXPECT_LE((v - tensor(xi.vector, eta.vector)).norm(), 1e-15);
  const auto u = build_quasicentral_identity(g, xi.vector, eta.vector);
  ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_LE((u.rho - expected).norm(), 1e-15);
}

TEST(QuasicentralIdentity, SliceConventionOracle) {
  for (const auto& name : {"S3", "D4", "Z5"})
    for (bool side : {false, true}) {
      const auto ctx = ctx_for(name, side);
      Rng rng(6);
      for (int k = 0; k < 50; ++k) {
        const auto n = ctx.g.q.dim;
        const TensorVector xi(random_unit_vector(n, rng)), eta(random_unit_vector(n, rng)), zeta(random_unit_vector(n, rng));
        EXPECT_LE(quasicentral_slice_consistency(ctx.g, xi, eta, zeta, random_element(ctx.g.q.algebra_basis, rng)),
                  1e-10);
      }
    }
}

TEST(QuasicentralIdentity, FirstLegReadingFailsTheOracle) {
  const auto ctx = ctx_for("S3", true);
  const auto& g = ctx.g;
  Rng rng(7);
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    const TensorVector xi(random_unit_vector(6, rng)), eta(random_unit_vector(6, rng)), zeta(random_unit_vector(6, rng));
    const ComplexMatrix x = random_element(g.q.algebra_basis, rng);
    const auto v = quasicentral_vector(g, xi, eta);
    const Functional wrong{partial_trace_outer(v.data(), v.data(), g.q.legs2(), {0}), g.q.label()};
    auto w = apply_leg(g.u.Wprime_op.adjoint(), {0, 1}, tensor(xi, eta, zeta));
    w = apply_leg(g.q.W, {1, 2}, apply_leg(g.q.W, {0, 1}, w));
    const cplx direct = w.data().dot(apply_leg(x, {2}, w).data());
    worst = std::max(worst, std::abs(convolve(g.q, wrong, vector_state(zeta, g.q.label()))(x) - direct));
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(BaiBound, ExactNetsAndIdentity) {
  const auto g = prepare(from_cayley_function_algebra(symmetric_group_3()));
  const auto [xi, eta] = exact_nets(g.q);
  Rng rng(8);
  const TensorVector zeta(random_unit_vector(6, rng));
  const auto c = bai_residual_bound_check(g, xi.vector, eta.vector, zeta, random_element(g.q.algebra_basis, rng));
  EXPECT_LE(c.bound, 1e-10);
  EXPECT_LE(c.value, 1e-9);
  const auto p = perturbed_net(xi, 0.3, rng), q = perturbed_net(eta, 0.3, rng);
  EXPECT_LE(bai_residual_bound_check(g, p.vector, q.vector, zeta, ComplexMatrix::Identity(6, 6)).value, 1e-14);
}

TEST(BaiBound, HoldsOnPerturbedNets) {
  for (const auto& name : {"Z4", "S3"})
    for (bool side : {false, true}) {
      const auto ctx = ctx_for(name, side);
      const auto& g = ctx.g;
      const auto exact = exact_nets(g.q);
      Rng rng(9);
      int violations = 0;
      for (double t : {0.01, 0.1, 0.3}) {
        const auto xi = perturbed_net(exact.first, t, rng), eta = perturbed_net(exact.second, t, rng);
        for (int k = 0; k < 100; ++k) {
          const TensorVector zeta(random_unit_vector(g.q.dim, rng));
          violations += !bai_residual_bound_check(g, xi.vector, eta.vector, zeta, random_element(g.q.algebra_basis, rng))
                              .holds();
        }
      }
      EXPECT_EQ(violations, 0) << g.q.label();
    }
}

TEST(BaiBound, RejectsXOutsideM) {
  const auto g = prepare(from_cayley_function_algebra(cyclic_group(3)));
  Rng rng(10);
  const TensorVector v(random_unit_vector(3, rng));
  EXPECT_THROW(bai_residual_bound_check(g, v, v, v, random_matrix(3, 3, rng)), DimensionError);
}

TEST(QuasicentralBound, ExactNetsIdentityAndSweep) {
  const auto g = prepare(from_cayley_function_algebra(cyclic_group(3)));
  const auto exact = exact_nets(g.q);
  Rng rng(11);
  const ComplexMatrix lam = random_tensor_element(g.q.algebra_basis, g.q.algebra_basis, rng);
  const TensorVector zeta(random_unit_vector(3, rng));
  EXPECT_LE(quasicentral_residual(g, exact.first.vector, exact.second.vector, zeta, lam).value, 1e-9);
  for (double t : {0.01, 0.1, 0.3}) {
    const auto xi = perturbed_net(exact.first, t, rng), eta = perturbed_net(exact.second, t, rng);
    EXPECT_LE(quasicentral_residual(g, xi.vector, eta.vector, zeta, ComplexMatrix::Identity(9, 9)).value, 1e-14);
    for (int k = 0; k < 20; ++k) {
      const auto c = quasicentral_residual(g, xi.vector, eta.vector, TensorVector(random_unit_vector(3, rng)),
                                           random_tensor_element(g.q.algebra_basis, g.q.algebra_basis, rng));
      EXPECT_TRUE(c.holds());
    }
  }
}

TEST(QuasicentralBound, HoldsOnNonabelianDuals) {
  for (const auto& name : {"S3", "Q8"}) {
    const auto ctx = ctx_for(name, true);
    const auto& g = ctx.g;
    const auto exact = exact_nets(g.q);
    Rng rng(12);
    for (double t : {0.01, 0.1, 0.3}) {
      const auto xi = perturbed_net(exact.first, t, rng), eta = perturbed_net(exact.second, t, rng);
      for (int k = 0; k < 30; ++k) {
        ComplexMatrix lam = random_tensor_element(g.q.algebra_basis, g.q.algebra_basis, rng);
        const auto c = quasicentral_residual(g, xi.vector, eta.vector, TensorVector(random_unit_vector(g.q.dim, rng)), lam);
        EXPECT_TRUE(c.holds()) << name << " " << c.value << " " << c.bound;
      }
    }
  }
}

TEST(QuasicentralBound, PairingMatchesVectorRoute) {
  const auto ctx = ctx_for("S3", true);
  const auto& g = ctx.g;
  Rng rng(13);
  const TensorVector xi(random_unit_vector(6, rng)), eta(random_unit_vector(6, rng)), zeta(random_unit_vector(6, rng));
  const ComplexMatrix lam = random_tensor_element(g.q.algebra_basis, g.q.algebra_basis, rng);
  const ComplexMatrix t = g.u.Wprime.adjoint() * g.u.Wprime_op * lam * g.u.Wprime_op.adjoint() * g.u.Wprime - lam;
  // ⟨T13 (ζ⊗v), ζ⊗v⟩ with v = W W'op* (ξ⊗η) on legs 2, 3.
  const auto s = tensor(zeta, quasicentral_vector(g, xi, eta));
  const cplx direct = s.data().dot(apply_leg(t, {0, 2}, s).data());
  EXPECT_NEAR(quasicentral_residual(g, xi, eta, zeta, lam).value, std::abs(direct), 1e-11);
}

TEST(QuasicentralBound, RejectsLambdaOutsideTensorSquare) {
  const auto g = prepare(from_cayley_function_algebra(cyclic_group(2)));
  Rng rng(14);
  const TensorVector v(random_unit_vector(2, rng));
  EXPECT_THROW(quasicentral_residual(g, v, v, v, random_matrix(4, 4, rng)), DimensionError);
}
