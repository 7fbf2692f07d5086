// Dense complex linear algebra on tensor legs.
//
// Vectors on H_1 ⊗ ... ⊗ H_k are stored flat with the first leg most
// significant, matching the index order produced by kron(). Operators on a
// subset of legs are applied by gather/contract/scatter; the full k-leg
// matrix is never formed.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qglab {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using LegList = std::vector<std::size_t>;

/// Raised on incompatible shapes, bad leg indices and similar caller errors.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical kernel fails to converge or a randomized
/// factorization exhausts its retries.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a requested dense size exceeds the configured cap.
struct CapExceeded : std::length_error {
  using std::length_error::length_error;
};

/// Largest dense dimension any kron() result may have.
inline constexpr std::size_t kMaxDenseDim = std::size_t{1} << 14;

namespace tol {
inline constexpr double identity = 1e-10;
inline constexpr double norm_compare = 1e-8;
inline constexpr double cp_slack = -1e-9;
inline constexpr double unitary = 1e-10;
}  // namespace tol

/// A vector on a tensor product of finite-dimensional Hilbert spaces.
class TensorVector {
 public:
  TensorVector() = default;

  TensorVector(LegList legs, ComplexVector data)
      : legs_(std::move(legs)), data_(std::move(data)) {
    if (legs_.empty()) throw DimensionError("TensorVector: no legs");
    std::size_t total = 1;
    for (auto d : legs_) {
      if (d == 0) throw DimensionError("TensorVector: zero leg dimension");
      total *= d;
    }
    if (static_cast<std::size_t>(data_.size()) != total)
      throw DimensionError("TensorVector: entry count " + std::to_string(data_.size()) +
                           " does not match leg product " + std::to_string(total));
    if (!data_.allFinite()) throw DimensionError("TensorVector: non-finite entry");
  }

  /// Single-leg vector.
  explicit TensorVector(const ComplexVector& data)
      : TensorVector(LegList{static_cast<std::size_t>(data.size())}, data) {}

  const LegList& legs() const noexcept { return legs_; }
  const ComplexVector& data() const noexcept { return data_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(data_.size()); }
  std::size_t leg_count() const noexcept { return legs_.size(); }
  double norm() const { return data_.norm(); }

  TensorVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw DimensionError("TensorVector: cannot normalize zero vector");
    return {legs_, data_ / n};
  }

  bool is_unit(double tolerance = 1e-12) const { return std::abs(norm() - 1.0) <= tolerance; }

  /// v ⊗ w with the legs of v first.
  friend TensorVector tensor(const TensorVector& v, const TensorVector& w) {
    LegList legs = v.legs_;
    legs.insert(legs.end(), w.legs_.begin(), w.legs_.end());
    ComplexVector out(v.data_.size() * w.data_.size());
    for (Eigen::Index i = 0; i < v.data_.size(); ++i)
      out.segment(i * w.data_.size(), w.data_.size()) = v.data_(i) * w.data_;
    return {std::move(legs), std::move(out)};
  }

  friend TensorVector operator-(const TensorVector& a, const TensorVector& b) {
    if (a.legs_ != b.legs_) throw DimensionError("TensorVector: leg mismatch in subtraction");
    return {a.legs_, a.data_ - b.data_};
  }

 private:
  LegList legs_;
  ComplexVector data_;
};

inline TensorVector tensor(const TensorVector& a, const TensorVector& b, const TensorVector& c) {
  return tensor(tensor(a, b), c);
}

/// Kronecker product; (a ⊗ b)(v ⊗ w) = av ⊗ bw.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                          std::size_t max_dim = kMaxDenseDim) {
  const auto rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows > max_dim || cols > max_dim)
    throw CapExceeded("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " exceeds cap " + std::to_string(max_dim));
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

/// The flip Σ(v ⊗ w) = w ⊗ v from C^a ⊗ C^b to C^b ⊗ C^a.
inline ComplexMatrix flip_sigma(std::size_t dim_a, std::size_t dim_b) {
  ComplexMatrix s = ComplexMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) s(j * dim_a + i, i * dim_b + j) = 1.0;
  return s;
}

namespace detail {

struct LegPlan {
  std::vector<std::size_t> selected_offsets;  // op index -> flat offset
  std::vector<std::size_t> base_offsets;      // remaining legs -> flat offset
  std::size_t op_dim = 1;
};

inline LegPlan plan_legs(const LegList& dims, const LegList& legs) {
  if (legs.empty()) throw DimensionError("apply_leg: no legs selected");
  std::vector<bool> used(dims.size(), false);
  for (auto l : legs) {
    if (l >= dims.size())
      throw DimensionError("apply_leg: leg index " + std::to_string(l) + " out of range");
    if (used[l]) throw DimensionError("apply_leg: repeated leg index " + std::to_string(l));
    used[l] = true;
  }
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) stride[k - 1] = stride[k] * dims[k];

  auto enumerate = [&](const LegList& which) {
    std::vector<std::size_t> offsets{0};
    for (auto l : which) {
      std::vector<std::size_t> next;
      next.reserve(offsets.size() * dims[l]);
      for (auto o : offsets)
        for (std::size_t i = 0; i < dims[l]; ++i) next.push_back(o + i * stride[l]);
      offsets = std::move(next);
    }
    return offsets;
  };

  LegList rest;
  for (std::size_t l = 0; l < dims.size(); ++l)
    if (!used[l]) rest.push_back(l);

  LegPlan plan;
  plan.selected_offsets = enumerate(legs);
  plan.base_offsets = enumerate(rest);
  plan.op_dim = plan.selected_offsets.size();
  return plan;
}

template <class Column>
void apply_planned(const ComplexMatrix& op, const LegPlan& plan, Column&& col) {
  ComplexVector gathered(plan.op_dim);
  for (auto base : plan.base_offsets) {
    for (std::size_t i = 0; i < plan.op_dim; ++i) gathered(i) = col(base + plan.selected_offsets[i]);
    ComplexVector mapped = op * gathered;
    for (std::size_t i = 0; i < plan.op_dim; ++i) col(base + plan.selected_offsets[i]) = mapped(i);
  }
}

}  // namespace detail

/// Applies `op` to the listed legs of `v` (first listed leg is the most
/// significant index of `op`), identity on the others.
inline TensorVector apply_leg(const ComplexMatrix& op, const LegList& legs, const TensorVector& v) {
  auto plan = detail::plan_legs(v.legs(), legs);
  if (static_cast<std::size_t>(op.rows()) != plan.op_dim ||
      static_cast<std::size_t>(op.cols()) != plan.op_dim)
    throw DimensionError("apply_leg: operator is " + std::to_string(op.rows()) + "x" +
                         std::to_string(op.cols()) + ", selected legs span " +
                         std::to_string(plan.op_dim));
  ComplexVector out = v.data();
  detail::apply_planned(op, plan, [&](std::size_t i) -> cplx& { return out(i); });
  return {v.legs(), std::move(out)};
}

/// Left-multiplies every column of `x` (an operator on the leg space `dims`)
/// by `op` placed on `legs`.
inline ComplexMatrix apply_leg_columns(const ComplexMatrix& op, const LegList& legs,
                                       const LegList& dims, ComplexMatrix x) {
  auto plan = detail::plan_legs(dims, legs);
  if (static_cast<std::size_t>(op.rows()) != plan.op_dim)
    throw DimensionError("apply_leg_columns: operator size mismatch");
  const auto total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (static_cast<std::size_t>(x.rows()) != total)
    throw DimensionError("apply_leg_columns: matrix rows do not match leg product");
  for (Eigen::Index c = 0; c < x.cols(); ++c)
    detail::apply_planned(op, plan, [&](std::size_t i) -> cplx& { return x(i, c); });
  return x;
}

/// op_legs · x · op_legs*, for x an operator on the leg space `dims`.
inline ComplexMatrix conjugate_legs(const ComplexMatrix& op, const LegList& legs,
                                    const LegList& dims, const ComplexMatrix& x) {
  ComplexMatrix left = apply_leg_columns(op, legs, dims, x);
  ComplexMatrix both = apply_leg_columns(op, legs, dims, left.adjoint());
  return both.adjoint();
}

/// Dense embedding of `op` on `legs` within the leg space `dims`. Intended
/// for small reference computations only.
inline ComplexMatrix embed_legs(const ComplexMatrix& op, const LegList& legs, const LegList& dims) {
  const auto total = std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  return apply_leg_columns(op, legs, dims, ComplexMatrix::Identity(total, total));
}

/// Traces out the legs not listed in `keep` (kept legs retain their order).
inline ComplexMatrix partial_trace(const ComplexMatrix& x, const LegList& dims, const LegList& keep) {
  auto plan = detail::plan_legs(dims, keep);
  const auto total = plan.op_dim * plan.base_offsets.size();
  if (static_cast<std::size_t>(x.rows()) != total || static_cast<std::size_t>(x.cols()) != total)
    throw DimensionError("partial_trace: matrix does not match leg product");
  ComplexMatrix out = ComplexMatrix::Zero(plan.op_dim, plan.op_dim);
  for (auto base : plan.base_offsets)
    for (std::size_t i = 0; i < plan.op_dim; ++i)
      for (std::size_t j = 0; j < plan.op_dim; ++j)
        out(i, j) += x(base + plan.selected_offsets[i], base + plan.selected_offsets[j]);
  return out;
}

/// Tr over `dims` legs not in `keep` of the rank-one operator p q*.
inline ComplexMatrix partial_trace_outer(const ComplexVector& p, const ComplexVector& q,
                                         const LegList& dims, const LegList& keep) {
  auto plan = detail::plan_legs(dims, keep);
  ComplexMatrix a(plan.op_dim, plan.base_offsets.size());
  ComplexMatrix b(plan.op_dim, plan.base_offsets.size());
  for (std::size_t r = 0; r < plan.base_offsets.size(); ++r)
    for (std::size_t i = 0; i < plan.op_dim; ++i) {
      a(i, r) = p(plan.base_offsets[r] + plan.selected_offsets[i]);
      b(i, r) = q(plan.base_offsets[r] + plan.selected_offsets[i]);
    }
  return a * b.adjoint();
}

inline Eigen::VectorXd singular_values(const ComplexMatrix& a) {
  if (a.size() == 0) return {};
  if (!a.allFinite()) throw NumericalError("singular_values: non-finite input");
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  if (svd.info() != Eigen::Success) throw NumericalError("singular_values: SVD did not converge");
  return svd.singularValues();
}

/// Schatten-1 norm.
inline double trace_norm(const ComplexMatrix& a) { return singular_values(a).sum(); }

/// Largest singular value.
inline double operator_norm(const ComplexMatrix& a) {
  auto s = singular_values(a);
  return s.size() == 0 ? 0.0 : s.maxCoeff();
}

inline double unitarity_residual(const ComplexMatrix& a) {
  return operator_norm(a.adjoint() * a - ComplexMatrix::Identity(a.cols(), a.cols()));
}

enum class SliceSide { left, right };

/// Slice of an operator on H ⊗ K by the functional tr(rho ·) on one leg:
/// left gives (ω ⊗ ι)(x) on K, right gives (ι ⊗ ω)(x) on H.
inline ComplexMatrix slice(SliceSide side, const ComplexMatrix& rho, const ComplexMatrix& x,
                           std::size_t dim_h, std::size_t dim_k) {
  if (static_cast<std::size_t>(x.rows()) != dim_h * dim_k || x.rows() != x.cols())
    throw DimensionError("slice: operator does not act on the two-leg space");
  const std::size_t sliced = side == SliceSide::left ? dim_h : dim_k;
  const std::size_t kept = side == SliceSide::left ? dim_k : dim_h;
  if (static_cast<std::size_t>(rho.rows()) != sliced || rho.rows() != rho.cols())
    throw DimensionError("slice: functional dimension mismatch");
  auto index = [&](std::size_t s, std::size_t k) {
    return side == SliceSide::left ? s * dim_k + k : k * dim_k + s;
  };
  ComplexMatrix out = ComplexMatrix::Zero(kept, kept);
  for (std::size_t k = 0; k < kept; ++k)
    for (std::size_t l = 0; l < kept; ++l) {
      cplx acc = 0.0;
      for (std::size_t s = 0; s < sliced; ++s)
        for (std::size_t t = 0; t < sliced; ++t) acc += rho(t, s) * x(index(s, k), index(t, l));
      out(k, l) = acc;
    }
  return out;
}

/// Vector-functional slice: [(ω_w ⊗ ι)(x)]_{kl} = <x(w ⊗ e_l), w ⊗ e_k>.
inline ComplexMatrix slice(SliceSide side, const ComplexVector& w, const ComplexMatrix& x,
                           std::size_t dim_h, std::size_t dim_k) {
  return slice(side, ComplexMatrix(w * w.adjoint()), x, dim_h, dim_k);
}

/// Antilinear operator v ↦ u · conj(v). Composition with linear maps and
/// other antilinear maps is resolved by type: two antilinear factors give a
/// linear operator.
class AntilinearOp {
 public:
  AntilinearOp() = default;
  explicit AntilinearOp(ComplexMatrix u) : u_(std::move(u)) {
    if (u_.rows() != u_.cols()) throw DimensionError("AntilinearOp: unitary part must be square");
  }

  static AntilinearOp conjugation(std::size_t n) { return AntilinearOp(ComplexMatrix::Identity(n, n)); }

  const ComplexMatrix& unitary_part() const noexcept { return u_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(u_.rows()); }

  ComplexVector apply(const ComplexVector& v) const {
    if (v.size() != u_.cols()) throw DimensionError("AntilinearOp: dimension mismatch");
    return u_ * v.conjugate();
  }
  TensorVector apply(const TensorVector& v) const { return {v.legs(), apply(v.data())}; }

  /// |J² − I| in operator norm; zero for conjugations.
  double involution_residual() const {
    return operator_norm(u_ * u_.conjugate() - ComplexMatrix::Identity(u_.rows(), u_.cols()));
  }

  friend ComplexMatrix operator*(const AntilinearOp& a, const AntilinearOp& b) {
    if (a.dim() != b.dim()) throw DimensionError("AntilinearOp: composition dimension mismatch");
    return a.u_ * b.u_.conjugate();
  }
  friend AntilinearOp operator*(const AntilinearOp& a, const ComplexMatrix& m) {
    if (static_cast<Eigen::Index>(a.dim()) != m.rows())
      throw DimensionError("AntilinearOp: composition dimension mismatch");
    return AntilinearOp(a.u_ * m.conjugate());
  }
  friend AntilinearOp operator*(const ComplexMatrix& m, const AntilinearOp& a) {
    if (m.cols() != static_cast<Eigen::Index>(a.dim()))
      throw DimensionError("AntilinearOp: composition dimension mismatch");
    return AntilinearOp(m * a.u_);
  }
  friend AntilinearOp kron(const AntilinearOp& a, const AntilinearOp& b) {
    return AntilinearOp(kron(a.u_, b.u_));
  }

 private:
  ComplexMatrix u_;
};

/// The linear operator J a J.
inline ComplexMatrix conj_by_antilinear(const AntilinearOp& j, const ComplexMatrix& a) {
  if (static_cast<Eigen::Index>(j.dim()) != a.rows() || a.rows() != a.cols())
    throw DimensionError("conj_by_antilinear: dimension mismatch");
  return (j * a) * j;
}

/// (J_1 ⊗ ... ⊗ J_k) v, applied one leg at a time.
inline TensorVector apply_antilinear_legs(const std::vector<AntilinearOp>& per_leg, const TensorVector& v) {
  if (per_leg.size() != v.leg_count())
    throw DimensionError("apply_antilinear_legs: one antilinear factor per leg required");
  TensorVector out(v.legs(), v.data().conjugate());
  for (std::size_t l = 0; l < per_leg.size(); ++l) out = apply_leg(per_leg[l].unitary_part(), {l}, out);
  return out;
}

}  // namespace qglab
