// The convolution algebra M_* and its tensor square: functionals as trace
// pairings, convolution, the bimodule actions, Γ_*, and predual norms through
// the block (Artin–Wedderburn) decomposition of M.
#pragma once

#include "qglab/algebra.hpp"
#include "qglab/qgcore.hpp"
#include "qglab/random.hpp"
#include "qglab/tensorlin.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qglab {

/// ω(x) = tr(rho x). Only the restriction to M carries meaning; rho is kept
/// on all of B(H).
struct Functional {
  ComplexMatrix rho;
  std::string algebra;

  cplx operator()(const ComplexMatrix& x) const { return (rho.transpose().array() * x.array()).sum(); }

  friend Functional operator-(const Functional& a, const Functional& b) { return {a.rho - b.rho, a.algebra}; }
  friend Functional operator+(const Functional& a, const Functional& b) { return {a.rho + b.rho, a.algebra}; }
  friend Functional operator*(cplx s, const Functional& a) { return {s * a.rho, a.algebra}; }
};

/// Element of the predual of M ⊗ M, paired against operators on H ⊗ H.
struct BiFunctional {
  ComplexMatrix rho2;
  std::string algebra;

  cplx operator()(const ComplexMatrix& x) const { return (rho2.transpose().array() * x.array()).sum(); }

  friend BiFunctional operator-(const BiFunctional& a, const BiFunctional& b) {
    return {a.rho2 - b.rho2, a.algebra};
  }
};

/// ω_ζ(x) = <xζ, ζ>.
inline Functional vector_state(const TensorVector& zeta, std::string algebra = {}) {
  if (zeta.leg_count() != 1) throw DimensionError("vector_state: expected a single-leg vector");
  return {zeta.data() * zeta.data().adjoint(), std::move(algebra)};
}

/// ω_v on H ⊗ H.
inline BiFunctional vector_bistate(const TensorVector& v, std::string algebra = {}) {
  if (v.leg_count() != 2) throw DimensionError("vector_bistate: expected a two-leg vector");
  return {v.data() * v.data().adjoint(), std::move(algebra)};
}

namespace detail {

inline void check_algebra(const FiniteQuantumGroup& q, const std::string& tag) {
  if (!tag.empty() && tag != q.label())
    throw DimensionError("functional normed against '" + tag + "' used with '" + q.label() + "'");
}

/// rho = Σ p_r q_r* with numerically zero singular values dropped.
inline std::vector<std::pair<ComplexVector, ComplexVector>> rank_one_terms(const ComplexMatrix& rho) {
  Eigen::BDCSVD<ComplexMatrix> svd(rho, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalError("rank_one_terms: SVD did not converge");
  const auto& s = svd.singularValues();
  std::vector<std::pair<ComplexVector, ComplexVector>> out;
  if (s.size() == 0 || s(0) == 0.0) return out;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-15 * s(0)) out.emplace_back(s(i) * svd.matrixU().col(i), svd.matrixV().col(i));
  return out;
}

// Tr_{trace_leg}( U_legs (a ⊗ b) U_legs* ) on three legs, with a on `a_legs`
// positions determined by the caller through the tensor order.
inline ComplexMatrix three_leg_action(const ComplexMatrix& w, const LegList& w_legs, const ComplexMatrix& first,
                                      const ComplexMatrix& second, bool first_is_single, const LegList& dims,
                                      const LegList& keep) {
  const auto ta = rank_one_terms(first);
  const auto tb = rank_one_terms(second);
  const auto kept_dim = dims[keep[0]] * dims[keep[1]];
  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  const LegList a_legs = first_is_single ? LegList{dims[0]} : LegList{dims[0], dims[1]};
  const LegList b_legs = first_is_single ? LegList{dims[1], dims[2]} : LegList{dims[2]};
  for (const auto& [pa, qa] : ta)
    for (const auto& [pb, qb] : tb) {
      const TensorVector p = tensor(TensorVector(a_legs, pa), TensorVector(b_legs, pb));
      const TensorVector r = tensor(TensorVector(a_legs, qa), TensorVector(b_legs, qb));
      out += partial_trace_outer(apply_leg(w, w_legs, p).data(), apply_leg(w, w_legs, r).data(), dims, keep);
    }
  return out;
}

}  // namespace detail

/// (a ∗ b)(x) = (a ⊗ b)(Γ(x)); pairing matrix Tr_1(W (ρ_a ⊗ ρ_b) W*).
inline Functional convolve(const FiniteQuantumGroup& q, const Functional& a, const Functional& b) {
  detail::check_algebra(q, a.algebra);
  detail::check_algebra(q, b.algebra);
  const auto n = static_cast<Eigen::Index>(q.dim);
  if (a.rho.rows() != n || b.rho.rows() != n) throw DimensionError("convolve: functional dimension mismatch");
  const ComplexMatrix big = q.W * kron(a.rho, b.rho) * q.W.adjoint();
  return {partial_trace(big, q.legs2(), {1}), q.label()};
}

/// Γ_*(x)(X) = x(Γ(X)).
inline Functional gamma_star(const FiniteQuantumGroup& q, const BiFunctional& x) {
  detail::check_algebra(q, x.algebra);
  if (x.rho2.rows() != static_cast<Eigen::Index>(q.dim * q.dim))
    throw DimensionError("gamma_star: bifunctional dimension mismatch");
  return {partial_trace(q.W * x.rho2 * q.W.adjoint(), q.legs2(), {1}), q.label()};
}

/// (a·x)(Λ) = (a ⊗ x)((Γ ⊗ ι)Λ) = (a ⊗ x)(W12* Λ23 W12).
inline BiFunctional module_action_left(const FiniteQuantumGroup& q, const Functional& a, const BiFunctional& x) {
  detail::check_algebra(q, a.algebra);
  detail::check_algebra(q, x.algebra);
  if (a.rho.rows() != static_cast<Eigen::Index>(q.dim) || x.rho2.rows() != static_cast<Eigen::Index>(q.dim * q.dim))
    throw DimensionError("module_action_left: dimension mismatch");
  return {detail::three_leg_action(q.W, {0, 1}, a.rho, x.rho2, true, q.legs3(), {1, 2}), q.label()};
}

/// (x·a)(Λ) = (x ⊗ a)((ι ⊗ Γ)Λ) = (x ⊗ a)(W23* Λ13 W23).
inline BiFunctional module_action_right(const FiniteQuantumGroup& q, const BiFunctional& x, const Functional& a) {
  detail::check_algebra(q, a.algebra);
  detail::check_algebra(q, x.algebra);
  if (a.rho.rows() != static_cast<Eigen::Index>(q.dim) || x.rho2.rows() != static_cast<Eigen::Index>(q.dim * q.dim))
    throw DimensionError("module_action_right: dimension mismatch");
  return {detail::three_leg_action(q.W, {1, 2}, x.rho2, a.rho, false, q.legs3(), {0, 2}), q.label()};
}

// ---------------------------------------------------------------------------
// Block decomposition

/// M ≅ ⊕_i M_{n_i} ⊗ 1_{m_i}: each block's isometry U satisfies
/// U* x U = A ⊗ 1_m for x ∈ M, with column index k·m + j.
struct BlockDecomposition {
  struct Block {
    std::size_t n = 0;
    std::size_t m = 0;
    ComplexMatrix isometry;
  };
  std::size_t dim = 0;
  std::vector<Block> blocks;

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> s;
    for (auto& b : blocks) s.push_back(b.n);
    return s;
  }
};

namespace detail {

/// Index ranges of eigenvalue clusters (eigenvalues sorted ascending).
inline std::vector<std::pair<Eigen::Index, Eigen::Index>> eigen_clusters(const Eigen::VectorXd& ev) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  if (ev.size() == 0) return out;
  const double spread = std::max(1.0, ev.cwiseAbs().maxCoeff());
  const double gap = 1e-7 * spread;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ev.size(); ++i)
    if (i == ev.size() || ev(i) - ev(i - 1) > gap) {
      out.emplace_back(start, i - start);
      start = i;
    }
  return out;
}

inline MatrixList center_basis(const MatrixList& ortho) {
  const auto d = static_cast<Eigen::Index>(ortho.size());
  std::vector<MatrixList> comm(ortho.size());
  for (std::size_t k = 0; k < ortho.size(); ++k)
    for (const auto& b : ortho) comm[k].push_back(ortho[k] * b - b * ortho[k]);
  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k)
    for (Eigen::Index l = k; l < d; ++l) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < ortho.size(); ++j) acc += hs_inner(comm[k][j], comm[l][j]);
      gram(k, l) = acc;
      gram(l, k) = std::conj(acc);
    }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram);
  if (es.info() != Eigen::Success) throw NumericalError("block_decompose: center computation failed");
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  MatrixList center;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (es.eigenvalues()(i) > 1e-9 * scale) continue;
    ComplexMatrix z = ComplexMatrix::Zero(ortho.front().rows(), ortho.front().cols());
    for (Eigen::Index k = 0; k < d; ++k) z += es.eigenvectors()(k, i) * ortho[static_cast<std::size_t>(k)];
    center.push_back(std::move(z));
  }
  return center;
}

inline std::optional<BlockDecomposition> try_decompose(const MatrixList& ortho, const MatrixList& center, Rng& rng) {
  const auto dim = static_cast<std::size_t>(ortho.front().rows());
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (const auto& z : center) {
    std::normal_distribution<double> g;
    h += g(rng) * (z + z.adjoint()) + g(rng) * cplx(0.0, 1.0) * (z - z.adjoint());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> central(h);
  if (central.info() != Eigen::Success) return std::nullopt;
  const auto clusters = eigen_clusters(central.eigenvalues());
  if (clusters.size() != center.size()) return std::nullopt;

  BlockDecomposition out;
  out.dim = dim;
  for (const auto& [start, size] : clusters) {
    const ComplexMatrix qb = central.eigenvectors().middleCols(start, size);
    MatrixList compressed;
    for (const auto& a : ortho) compressed.push_back(qb.adjoint() * a * qb);
    compressed = orthonormal_basis(compressed);
    const auto c = compressed.size();
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(c))));
    if (n == 0 || n * n != c || static_cast<std::size_t>(size) % n != 0) return std::nullopt;
    const auto m = static_cast<std::size_t>(size) / n;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> inner(random_self_adjoint_element(compressed, rng));
    const auto levels = eigen_clusters(inner.eigenvalues());
    if (levels.size() != n) return std::nullopt;
    for (const auto& lv : levels)
      if (static_cast<std::size_t>(lv.second) != m) return std::nullopt;

    const ComplexMatrix g = random_element(compressed, rng);
    const ComplexMatrix f1 = inner.eigenvectors().middleCols(levels[0].first, static_cast<Eigen::Index>(m));
    ComplexMatrix u(qb.rows(), static_cast<Eigen::Index>(n * m));
    for (std::size_t k = 0; k < n; ++k) {
      const ComplexMatrix fk = inner.eigenvectors().middleCols(levels[k].first, static_cast<Eigen::Index>(m));
      ComplexMatrix sk = f1;
      if (k > 0) {
        const ComplexMatrix t = fk.adjoint() * g * f1;
        const double ck = t.norm() / std::sqrt(static_cast<double>(m));
        if (ck < 1e-6) return std::nullopt;
        sk = fk * (t / ck);
      }
      u.middleCols(static_cast<Eigen::Index>(k * m), static_cast<Eigen::Index>(m)) = qb * sk;
    }

    // Every basis element must compress to A ⊗ 1_m and leave the block invariant.
    for (const auto& a : ortho) {
      const ComplexMatrix x = u.adjoint() * a * u;
      ComplexMatrix reduced = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) reduced(k, l) = x(k * m, l * m);
      const ComplexMatrix rebuilt = kron(reduced, ComplexMatrix::Identity(m, m));
      const ComplexMatrix leak = a * u - u * x;
      if ((x - rebuilt).norm() > 1e-8 || leak.norm() > 1e-8) return std::nullopt;
    }
    out.blocks.push_back({n, m, std::move(u)});
  }
  return out;
}

}  // namespace detail

/// Simultaneous block diagonalization of the *-algebra spanned by `basis`.
/// Central projections come from a random self-adjoint central element;
/// each central block is split by a random self-adjoint algebra element.
/// Degenerate draws are retried.
inline BlockDecomposition block_decompose(const MatrixList& basis, std::uint64_t seed = 0x5eed, int retries = 5) {
  if (basis.empty()) throw DimensionError("block_decompose: empty basis");
  const auto ortho = orthonormal_basis(basis);
  const auto center = detail::center_basis(ortho);
  if (center.empty()) throw NumericalError("block_decompose: trivial center (span does not contain I?)");
  Rng rng(seed);
  for (int attempt = 0; attempt <= retries; ++attempt)
    if (auto d = detail::try_decompose(ortho, center, rng)) return *d;
  throw NumericalError("block_decompose: degenerate random draws after " + std::to_string(retries) + " retries");
}

/// Decomposition of A ⊗ B from decompositions of A and B.
inline BlockDecomposition tensor_decomposition(const BlockDecomposition& a, const BlockDecomposition& b) {
  BlockDecomposition out;
  out.dim = a.dim * b.dim;
  for (const auto& ba : a.blocks)
    for (const auto& bb : b.blocks) {
      const ComplexMatrix k = kron(ba.isometry, bb.isometry);
      const auto n = ba.n * bb.n, m = ba.m * bb.m;
      ComplexMatrix u(k.rows(), static_cast<Eigen::Index>(n * m));
      for (std::size_t ka = 0; ka < ba.n; ++ka)
        for (std::size_t ja = 0; ja < ba.m; ++ja)
          for (std::size_t kb = 0; kb < bb.n; ++kb)
            for (std::size_t jb = 0; jb < bb.m; ++jb) {
              const auto src = (ka * ba.m + ja) * (bb.n * bb.m) + kb * bb.m + jb;
              const auto dst = (ka * bb.n + kb) * m + (ja * bb.m + jb);
              u.col(static_cast<Eigen::Index>(dst)) = k.col(static_cast<Eigen::Index>(src));
            }
      out.blocks.push_back({n, m, std::move(u)});
    }
  return out;
}

/// Block compressions Tr_m(U* ρ U), one per block.
inline std::vector<ComplexMatrix> block_compressions(const ComplexMatrix& rho, const BlockDecomposition& d) {
  if (static_cast<std::size_t>(rho.rows()) != d.dim || rho.rows() != rho.cols())
    throw DimensionError("predual_norm: decomposition does not match the functional");
  std::vector<ComplexMatrix> out;
  for (const auto& b : d.blocks) {
    const ComplexMatrix x = b.isometry.adjoint() * rho * b.isometry;
    ComplexMatrix r = ComplexMatrix::Zero(static_cast<Eigen::Index>(b.n), static_cast<Eigen::Index>(b.n));
    for (std::size_t k = 0; k < b.n; ++k)
      for (std::size_t l = 0; l < b.n; ++l)
        for (std::size_t j = 0; j < b.m; ++j) r(k, l) += x(k * b.m + j, l * b.m + j);
    out.push_back(std::move(r));
  }
  return out;
}

/// sup{|ω(x)| : x ∈ M, ‖x‖ ≤ 1} as the sum of block trace norms.
inline double predual_norm(const Functional& omega, const BlockDecomposition& d) {
  double total = 0.0;
  for (const auto& c : block_compressions(omega.rho, d)) total += trace_norm(c);
  return total;
}

inline double tensor_predual_norm(const BiFunctional& x, const BlockDecomposition& d) {
  double total = 0.0;
  for (const auto& c : block_compressions(x.rho2, d)) total += trace_norm(c);
  return total;
}

/// Decompositions of M and M ⊗ M for one quantum group.
struct NormContext {
  BlockDecomposition single;
  BlockDecomposition pair;

  double norm(const Functional& a) const { return predual_norm(a, single); }
  double norm(const BiFunctional& x) const { return tensor_predual_norm(x, pair); }
};

inline NormContext make_norm_context(const FiniteQuantumGroup& q, std::uint64_t seed = 0x5eed) {
  NormContext ctx;
  ctx.single = block_decompose(q.algebra_basis, seed);
  ctx.pair = tensor_decomposition(ctx.single, ctx.single);
  return ctx;
}

}  // namespace qglab
