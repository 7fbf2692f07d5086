// Seeded random draws used by the certification sweeps.
#pragma once

#include "qglab/tensorlin.hpp"

#include <cstdint>
#include <random>

namespace qglab {

using Rng = std::mt19937_64;

inline cplx random_gaussian(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

inline ComplexVector random_vector(std::size_t n, Rng& rng) {
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v(i) = random_gaussian(rng);
  return v;
}

inline ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector v = random_vector(n, rng);
  return v / v.norm();
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_gaussian(rng);
  return m;
}

/// Haar-distributed unitary via QR with the phase correction on R's diagonal.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(n, n, rng));
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix m = random_matrix(n, n, rng);
  return (m + m.adjoint()) / 2.0;
}

}  // namespace qglab
