#pragma once

// Small-dimension exact lattice toolbox. Basis vectors are the ROWS of the
// basis matrix B; the lattice vector with integer coordinates z is B^T z.

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lattika/arith.hpp"
#include "lattika/errors.hpp"
#include "lattika/rational.hpp"

namespace lattika::lattice {

inline constexpr Eigen::Index kMaxDim = 8;
inline constexpr Eigen::Index kMaxEnumDim = 6;
inline constexpr std::int64_t kMaxBox = 8;

/// Fraction-free (Bareiss) determinant. Every division is exact, so the
/// result is exact for integer and rational scalars alike.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimMismatch("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a = m;
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Gauss-Jordan inverse over an exact field scalar; throws Singular.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw DimMismatch("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == Scalar(0)) ++p;
    if (p == n) throw Singular("matrix is singular");
    a.row(k).swap(a.row(p));
    inv.row(k).swap(inv.row(p));
    const Scalar pivot = a(k, k);
    a.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == Scalar(0)) continue;
      const Scalar f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

template <typename Derived>
RationalMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

/// Full-rank square basis, dimension 1..8, exact rational entries.
class LatticeBasis {
 public:
  /// Throws DimMismatch for non-square or oversize input, Singular when the
  /// rows are linearly dependent.
  explicit LatticeBasis(RationalMatrix rows);
  explicit LatticeBasis(const IntMatrix& rows) : LatticeBasis(to_rational(rows)) {}

  Eigen::Index dim() const noexcept { return rows_.rows(); }
  const RationalMatrix& matrix() const noexcept { return rows_; }

  /// B^T z
  RationalVector lattice_vector(const IntVector& z) const;
  /// Real coordinates c with w = B^T c.
  RationalVector coordinates(const RationalVector& w) const;

 private:
  RationalMatrix rows_;
  RationalMatrix dual_;  // (B^T)^{-1}
  friend LatticeBasis dual_basis(const LatticeBasis& b);
};

/// |det B|
Rational determinant(const LatticeBasis& b);

/// |det A| == 1 over the integers; false for non-square input.
bool is_unimodular(const IntMatrix& a);

/// D = (B^T)^{-1}: the rows of D satisfy <b_i, d_j> = delta_ij.
LatticeBasis dual_basis(const LatticeBasis& b);

/// w - B^T floor(coordinates(w)); lands in the half-open fundamental
/// parallelepiped. Throws DimMismatch.
RationalVector mod_basis(const RationalVector& w, const LatticeBasis& b);

struct LatticePoint {
  IntVector coeffs;        // z
  RationalVector vector;   // B^T z
  Rational norm2;          // squared length, or squared distance to a target
};

/// Shortest nonzero B^T z over z in [-box, box]^n. Exact only when a shortest
/// vector has coordinates inside the box; certified SVP is not attempted.
/// Requires dim <= 6 and 1 <= box <= 8.
LatticePoint brute_svp(const LatticeBasis& b, std::int64_t box);

/// Squared successive minima lambda_1^2 <= ... <= lambda_n^2 over the same
/// box enumeration as brute_svp.
std::vector<Rational> brute_successive_minima(const LatticeBasis& b, std::int64_t box);

/// GapSVP decision through the brute oracle: true ("YES") iff
/// lambda_1^2 <= d2. Correct on every promise instance whenever the box
/// contains a shortest vector.
bool gap_svp(const LatticeBasis& b, const Rational& d2, std::int64_t box);

/// Closest lattice vector to t among z = round(coordinates(t)) + [-box, box]^n.
LatticePoint brute_cvp(const LatticeBasis& b, const RationalVector& t, std::int64_t box);

/// Round-off decoding B^T round(coordinates(t)).
RationalVector babai_round(const LatticeBasis& b, const RationalVector& t);

Rational squared_norm(const RationalVector& v);

/// SIS hash f_A(x) = [A x]_q for x in {0, ..., d-1}^m. Throws DimMismatch
/// for shape errors and InvalidParameter for out-of-range entries of x.
Coeffs sis_hash(const CoeffMatrix& a, const Coeffs& x, const Modulus& q, std::int64_t d);

}  // namespace lattika::lattice
