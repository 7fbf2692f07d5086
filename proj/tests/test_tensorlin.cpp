#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace qglab;

namespace {

ComplexMatrix diag2(cplx a, cplx b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

TensorVector basis(std::size_t n, std::size_t i) {
  ComplexVector e = ComplexVector::Zero(static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return TensorVector(e);
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_TRUE(kron(ComplexMatrix(ComplexMatrix::Identity(2, 2)), ComplexMatrix(ComplexMatrix::Identity(2, 2))).isApprox(ComplexMatrix::Identity(4, 4)));
}

TEST(Kron, DiagonalEntriesMultiply) {
  const ComplexMatrix k = kron(diag2(1, 2), diag2(3, 4));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 3.0, 4.0, 6.0, 8.0;
  EXPECT_LE((k - expected).norm(), 0.0);
}

TEST(Kron, ActsOnSimpleTensors) {
  Rng rng(1);
  const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
  const auto v = tensor(basis(2, 0), basis(2, 1));
  const ComplexVector lhs = kron(a, b) * v.data();
  const ComplexVector rhs = kron(ComplexVector(a * basis(2, 0).data()), ComplexVector(b * basis(2, 1).data()));
  EXPECT_LE((lhs - rhs).norm(), 1e-12);
}

TEST(Kron, CapIsEnforced) {
  const ComplexMatrix big = ComplexMatrix::Identity(200, 200);
  EXPECT_THROW(kron(big, big), CapExceeded);
}

TEST(TensorVector, RejectsLengthMismatch) {
  EXPECT_THROW(TensorVector(LegList{2, 3}, ComplexVector::Zero(5)), DimensionError);
  EXPECT_THROW(TensorVector(LegList{2, 0}, ComplexVector::Zero(0)), DimensionError);
}

TEST(TensorVector, NonFiniteRejected) {
  ComplexVector v = ComplexVector::Zero(2);
  v(1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(TensorVector{v}, DimensionError);
}

TEST(ApplyLeg, AgreesWithDenseEmbeddingForAllPlacements) {
  Rng rng(2);
  const std::vector<LegList> placements{{0, 1}, {1, 2}, {0, 2}, {1, 0}, {2, 0}, {2, 1}};
  for (const LegList dims : {LegList{2, 2, 2}, LegList{2, 3, 2}, LegList{3, 3, 3}, LegList{3, 2, 1}}) {
    const TensorVector v(dims, random_vector(dims[0] * dims[1] * dims[2], rng));
    for (const auto& legs : placements) {
      const auto m = dims[legs[0]] * dims[legs[1]];
      const ComplexMatrix op = random_matrix(m, m, rng);
      const ComplexVector dense = oracle::dense_embed(op, legs, dims) * v.data();
      EXPECT_LE((apply_leg(op, legs, v).data() - dense).norm(), 1e-12) << legs[0] << legs[1];
    }
  }
}

TEST(ApplyLeg, FirstTwoLegsMatchesKronWithIdentity) {
  Rng rng(3);
  const ComplexMatrix w = random_unitary(4, rng);
  const auto v = tensor(TensorVector(random_unit_vector(2, rng)), TensorVector(random_unit_vector(2, rng)),
                        TensorVector(random_unit_vector(2, rng)));
  const ComplexVector dense = kron(w, ComplexMatrix::Identity(2, 2)) * v.data();
  EXPECT_LE((apply_leg(w, {0, 1}, v).data() - dense).norm(), 1e-12);
}

TEST(ApplyLeg, IdentityOnOuterLegsIsIdentity) {
  Rng rng(4);
  const TensorVector v(LegList{3, 2, 3}, random_vector(18, rng));
  EXPECT_LE((apply_leg(ComplexMatrix::Identity(9, 9), {0, 2}, v) - v).norm(), 0.0);
}

TEST(ApplyLeg, SwapPermutesLegs) {
  const auto v = tensor(basis(3, 0), basis(3, 1), basis(3, 2));
  const auto w = apply_leg(flip_sigma(3, 3), {0, 1}, v);
  EXPECT_LE((w - tensor(basis(3, 1), basis(3, 0), basis(3, 2))).norm(), 0.0);
}

TEST(ApplyLeg, SingleLegAndThreeLegOperators) {
  Rng rng(5);
  const LegList dims{2, 3, 2};
  const TensorVector v(dims, random_vector(12, rng));
  const ComplexMatrix a = random_matrix(3, 3, rng);
  EXPECT_LE((apply_leg(a, {1}, v).data() - oracle::dense_embed(a, {1}, dims) * v.data()).norm(), 1e-12);
  const ComplexMatrix b = random_matrix(12, 12, rng);
  EXPECT_LE((apply_leg(b, {2, 0, 1}, v).data() - oracle::dense_embed(b, {2, 0, 1}, dims) * v.data()).norm(), 1e-12);
}

TEST(ApplyLeg, Errors) {
  const TensorVector v(LegList{2, 2, 2}, ComplexVector::Ones(8));
  EXPECT_THROW(apply_leg(ComplexMatrix::Identity(4, 4), {0, 0}, v), DimensionError);
  EXPECT_THROW(apply_leg(ComplexMatrix::Identity(4, 4), {0, 3}, v), DimensionError);
  EXPECT_THROW(apply_leg(ComplexMatrix::Identity(3, 3), {0, 1}, v), DimensionError);
}

TEST(Flip, Definition) {
  const ComplexVector out = flip_sigma(2, 2) * tensor(basis(2, 0), basis(2, 1)).data();
  EXPECT_LE((out - tensor(basis(2, 1), basis(2, 0)).data()).norm(), 0.0);
}

TEST(Flip, InvolutionAndRectangular) {
  EXPECT_TRUE((flip_sigma(2, 2) * flip_sigma(2, 2)).isApprox(ComplexMatrix::Identity(4, 4)));
  EXPECT_TRUE((flip_sigma(3, 2) * flip_sigma(2, 3)).isApprox(ComplexMatrix::Identity(6, 6)));
  Rng rng(6);
  const TensorVector a(random_vector(2, rng)), b(random_vector(3, rng));
  EXPECT_LE((flip_sigma(2, 3) * tensor(a, b).data() - tensor(b, a).data()).norm(), 1e-14);
}

TEST(Flip, SwapsKronFactors) {
  Rng rng(7);
  const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
  const ComplexMatrix s = flip_sigma(2, 2);
  EXPECT_LE((s * kron(a, b) * s - kron(b, a)).norm(), 1e-12);
}

TEST(Norms, TraceNormExamples) {
  EXPECT_NEAR(trace_norm(ComplexMatrix::Identity(5, 5)), 5.0, 1e-12);
  Rng rng(8);
  const ComplexVector x = random_vector(4, rng), y = random_vector(3, rng);
  EXPECT_NEAR(trace_norm(x * y.adjoint()), x.norm() * y.norm(), 1e-12);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  EXPECT_NEAR(trace_norm(random_unitary(3, rng) * a * random_unitary(3, rng)), trace_norm(a), 1e-10);
}

TEST(Norms, TraceNormTriangleInequality) {
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = random_matrix(4, 4, rng), b = random_matrix(4, 4, rng);
    EXPECT_LE(trace_norm(a + b), trace_norm(a) + trace_norm(b) + 1e-10);
  }
}

TEST(Norms, OperatorNormExamples) {
  Rng rng(10);
  EXPECT_NEAR(operator_norm(random_unitary(4, rng)), 1.0, 1e-12);
  EXPECT_NEAR(operator_norm(diag2(3, -1)), 3.0, 1e-14);
}

TEST(Norms, OperatorNormDominatesRandomVectors) {
  Rng rng(11);
  const ComplexMatrix a = random_matrix(3, 3, rng);
  const double norm = operator_norm(a);
  double best = 0.0;
  for (int k = 0; k < 10000; ++k) best = std::max(best, (a * random_unit_vector(3, rng)).norm());
  EXPECT_LE(best, norm + 1e-12);
  EXPECT_GE(best, norm - 1e-3 * norm - 0.05 * norm);
}

TEST(Norms, TraceNormDominatesOperatorNormWithEqualityAtRankOne) {
  Rng rng(12);
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix a = random_matrix(3, 3, rng);
    EXPECT_GE(trace_norm(a), operator_norm(a));
    const ComplexMatrix r1 = random_vector(3, rng) * random_vector(3, rng).adjoint();
    EXPECT_NEAR(trace_norm(r1), operator_norm(r1), 1e-12);
  }
}

TEST(Norms, NonFiniteInputThrows) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(trace_norm(a), NumericalError);
}

TEST(Slice, FactorizedCases) {
  Rng rng(13);
  const ComplexVector w = random_vector(2, rng);
  const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(3, 3, rng);
  EXPECT_LE((slice(SliceSide::left, w, kron(ComplexMatrix::Identity(2, 2), b), 2, 3) - w.squaredNorm() * b).norm(),
            1e-12);
  const cplx aw = w.dot(a * w);
  EXPECT_LE((slice(SliceSide::left, w, kron(a, b), 2, 3) - aw * b).norm(), 1e-12);
  const ComplexVector w3 = random_vector(3, rng);
  const cplx bw = w3.dot(b * w3);
  EXPECT_LE((slice(SliceSide::right, w3, kron(a, b), 2, 3) - bw * a).norm(), 1e-12);
}

TEST(Slice, EntrywiseDefinition) {
  Rng rng(14);
  const ComplexVector w = random_vector(2, rng);
  const ComplexMatrix x = random_matrix(6, 6, rng);
  const ComplexMatrix s = slice(SliceSide::left, w, x, 2, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      const ComplexVector el = tensor(TensorVector(w), basis(3, l)).data();
      const ComplexVector ek = tensor(TensorVector(w), basis(3, k)).data();
      EXPECT_LE(std::abs(s(k, l) - ek.dot(x * el)), 1e-12);
    }
}

TEST(Slice, Z2FunctionAlgebraUnitaryAtE1) {
  const auto q = from_cayley_function_algebra(cyclic_group(2));
  const ComplexMatrix s = slice(SliceSide::left, basis(2, 1).data(), q.W, 2, 2);
  ComplexMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_LE((s - swap).norm(), 0.0);
}

TEST(Slice, DimensionMismatchThrows) {
  EXPECT_THROW(slice(SliceSide::left, ComplexVector(ComplexVector::Ones(3)), ComplexMatrix(ComplexMatrix::Identity(4, 4)), 2, 2), DimensionError);
}

TEST(PartialTrace, MatchesDefinition) {
  Rng rng(15);
  const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(3, 3, rng);
  EXPECT_LE((partial_trace(kron(a, b), {2, 3}, {1}) - a.trace() * b).norm(), 1e-12);
  EXPECT_LE((partial_trace(kron(a, b), {2, 3}, {0}) - b.trace() * a).norm(), 1e-12);
  const ComplexVector p = random_vector(6, rng), r = random_vector(6, rng);
  EXPECT_LE((partial_trace_outer(p, r, {2, 3}, {1}) - partial_trace(p * r.adjoint(), {2, 3}, {1})).norm(), 1e-12);
}

TEST(Antilinear, RealFixedPointAndScalars) {
  Rng rng(16);
  const auto j = AntilinearOp::conjugation(2);
  const ComplexMatrix real = random_matrix(2, 2, rng).real().cast<cplx>();
  EXPECT_LE((conj_by_antilinear(j, real) - real).norm(), 0.0);
  const ComplexMatrix i_one = cplx(0.0, 1.0) * ComplexMatrix::Identity(2, 2);
  EXPECT_LE((conj_by_antilinear(j, i_one) + i_one).norm(), 0.0);
}

TEST(Antilinear, ConjugationIsHomomorphism) {
  Rng rng(17);
  const ComplexMatrix v = random_unitary(2, rng);
  const AntilinearOp j(ComplexMatrix(v * v.transpose()));
  ASSERT_LE(j.involution_residual(), 1e-12);
  const ComplexMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
  EXPECT_LE((conj_by_antilinear(j, a) * conj_by_antilinear(j, b) - conj_by_antilinear(j, a * b)).norm(), 1e-12);
}

TEST(Antilinear, CompositionRules) {
  Rng rng(18);
  const AntilinearOp j(random_unitary(3, rng)), k(random_unitary(3, rng));
  const ComplexVector v = random_vector(3, rng);
  const ComplexMatrix jk = j * k;
  EXPECT_LE((jk * v - j.apply(k.apply(v))).norm(), 1e-12);
  const ComplexMatrix m = random_matrix(3, 3, rng);
  EXPECT_LE(((j * m).apply(v) - j.apply(ComplexVector(m * v))).norm(), 1e-12);
  EXPECT_LE(((m * j).apply(v) - m * j.apply(v)).norm(), 1e-12);
  const cplx s(0.3, -1.2);
  EXPECT_LE((j.apply(ComplexVector(s * v)) - std::conj(s) * j.apply(v)).norm(), 1e-12);
}

TEST(Antilinear, IsometricAndInvolutionResidual) {
  Rng rng(19);
  const AntilinearOp j(random_unitary(4, rng));
  const ComplexVector v = random_vector(4, rng);
  EXPECT_NEAR(j.apply(v).norm(), v.norm(), 1e-12);
  EXPECT_LE(AntilinearOp::conjugation(4).involution_residual(), 0.0);
  ComplexMatrix perm = ComplexMatrix::Zero(3, 3);
  perm(0, 0) = perm(1, 2) = perm(2, 1) = 1.0;
  EXPECT_LE(AntilinearOp(perm).involution_residual(), 1e-15);
}

TEST(Antilinear, KronActsLegwise) {
  Rng rng(20);
  const AntilinearOp j(random_unitary(2, rng)), k(random_unitary(3, rng));
  const TensorVector a(random_vector(2, rng)), b(random_vector(3, rng));
  const ComplexVector lhs = kron(j, k).apply(tensor(a, b).data());
  const ComplexVector rhs = tensor(TensorVector(j.apply(a.data())), TensorVector(k.apply(b.data()))).data();
  EXPECT_LE((lhs - rhs).norm(), 1e-12);
  const auto legwise = apply_antilinear_legs({j, k}, tensor(a, b));
  EXPECT_LE((legwise.data() - rhs).norm(), 1e-12);
}
