#pragma once

// Dense vector/matrix products over Z_q with 128-bit accumulation. Inputs
// are symmetric representatives, so every partial product fits in 126 bits.

#include <string>

#include <Eigen/Core>

#include "lattika/arith.hpp"
#include "lattika/errors.hpp"

namespace lattika {

template <typename DerivedA, typename DerivedB>
i128 dot_wide(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) {
    throw DimMismatch("dot product of lengths " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()));
  }
  i128 acc = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc += static_cast<i128>(a(i)) * b(i);
  return acc;
}

template <typename DerivedA, typename DerivedB>
std::int64_t dot_mod(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                     const Modulus& q) {
  return q.reduce(dot_wide(a, b));
}

/// [M x]_q
template <typename DerivedM, typename DerivedX>
Coeffs mat_vec_mod(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedX>& x,
                   const Modulus& q) {
  if (m.cols() != x.size()) throw DimMismatch("matrix-vector shape mismatch");
  Coeffs out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out(i) = dot_mod(m.row(i).transpose(), x, q);
  return out;
}

/// [M^T x]_q without materialising the transpose.
template <typename DerivedM, typename DerivedX>
Coeffs mat_t_vec_mod(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedX>& x,
                     const Modulus& q) {
  if (m.rows() != x.size()) throw DimMismatch("transposed matrix-vector shape mismatch");
  std::vector<i128> acc(static_cast<std::size_t>(m.cols()), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const i128 xi = x(i);
    if (xi == 0) continue;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      acc[static_cast<std::size_t>(j)] += xi * m(i, j);
      // keep the running sums bounded for long columns of large entries
      if ((i & 1023) == 1023) acc[static_cast<std::size_t>(j)] = q.reduce(acc[static_cast<std::size_t>(j)]);
    }
  }
  Coeffs out(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) out(j) = q.reduce(acc[static_cast<std::size_t>(j)]);
  return out;
}

/// Coefficient-wise [x]_q of an integer vector or matrix expression.
template <typename Derived>
typename Derived::PlainObject reduce_mod(const Eigen::MatrixBase<Derived>& x, const Modulus& q) {
  return x.unaryExpr([&](std::int64_t v) { return q.reduce(v); });
}

}  // namespace lattika
