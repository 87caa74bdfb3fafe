#include "lattika/lattice.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace lattika::lattice {

namespace {

void check_enum_args(const LatticeBasis& b, std::int64_t box) {
  if (b.dim() > kMaxEnumDim) {
    throw InvalidParameter("brute-force enumeration supports dim <= " + std::to_string(kMaxEnumDim));
  }
  if (box < 1 || box > kMaxBox) {
    throw InvalidParameter("enumeration box must lie in [1, " + std::to_string(kMaxBox) + "]");
  }
}

// Basis rows scaled to integers: B = rows / den.
struct IntegralBasis {
  IntMatrix rows;
  std::int64_t den;
};

IntegralBasis integral_form(const RationalMatrix& m) {
  std::int64_t den = 1;
  for (Eigen::Index i = 0; i < m.size(); ++i) den = std::lcm(den, m.data()[i].den());
  IntMatrix rows(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows(i, j) = (m(i, j) * Rational(den)).num();
  return {rows, den};
}

// Calls fn(z) for every z = center + [-box, box]^dim.
template <typename Fn>
void for_each_in_box(const IntVector& center, std::int64_t box, Fn&& fn) {
  const Eigen::Index dim = center.size();
  IntVector offset = IntVector::Constant(dim, -box);
  while (true) {
    fn(IntVector(center + offset));
    Eigen::Index k = 0;
    while (k < dim && offset(k) == box) {
      offset(k) = -box;
      ++k;
    }
    if (k == dim) return;
    ++offset(k);
  }
}

i128 int_norm2(const IntMatrix& rows, const IntVector& z) {
  i128 total = 0;
  for (Eigen::Index j = 0; j < rows.cols(); ++j) {
    i128 coord = 0;
    for (Eigen::Index i = 0; i < rows.rows(); ++i) coord += static_cast<i128>(z(i)) * rows(i, j);
    total += coord * coord;
  }
  return total;
}

Rational wide_ratio(i128 num, std::int64_t den) {
  i128 den2 = static_cast<i128>(den) * den;
  i128 a = num < 0 ? -num : num, b = den2;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den2 /= a;
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den2));
}

}  // namespace

LatticeBasis::LatticeBasis(RationalMatrix rows) : rows_(std::move(rows)) {
  if (rows_.rows() != rows_.cols()) throw DimMismatch("basis matrix must be square");
  if (rows_.rows() < 1 || rows_.rows() > kMaxDim) {
    throw DimMismatch("basis dimension must lie in [1, " + std::to_string(kMaxDim) + "]");
  }
  dual_ = exact_inverse(rows_.transpose());
}

RationalVector LatticeBasis::lattice_vector(const IntVector& z) const {
  if (z.size() != dim()) throw DimMismatch("coordinate vector has the wrong dimension");
  return rows_.transpose() * z.cast<Rational>();
}

RationalVector LatticeBasis::coordinates(const RationalVector& w) const {
  if (w.size() != dim()) throw DimMismatch("vector has the wrong dimension");
  return dual_ * w;
}

Rational determinant(const LatticeBasis& b) { return abs(exact_determinant(b.matrix())); }

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  return abs(exact_determinant(to_rational(a))) == Rational(1);
}

LatticeBasis dual_basis(const LatticeBasis& b) { return LatticeBasis(b.dual_); }

RationalVector mod_basis(const RationalVector& w, const LatticeBasis& b) {
  const RationalVector c = b.coordinates(w);
  IntVector floors(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) floors(i) = c(i).floor();
  return w - b.lattice_vector(floors);
}

Rational squared_norm(const RationalVector& v) {
  Rational total(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) total += v(i) * v(i);
  return total;
}

LatticePoint brute_svp(const LatticeBasis& b, std::int64_t box) {
  check_enum_args(b, box);
  const auto [rows, den] = integral_form(b.matrix());
  IntVector best;
  i128 best_norm = -1;
  for_each_in_box(IntVector::Zero(b.dim()), box, [&](const IntVector& z) {
    if (z.isZero()) return;
    const i128 n2 = int_norm2(rows, z);
    if (best_norm < 0 || n2 < best_norm) {
      best_norm = n2;
      best = z;
    }
  });
  return {best, b.lattice_vector(best), wide_ratio(best_norm, den)};
}

std::vector<Rational> brute_successive_minima(const LatticeBasis& b, std::int64_t box) {
  check_enum_args(b, box);
  const auto [rows, den] = integral_form(b.matrix());
  const Eigen::Index dim = b.dim();
  struct Candidate {
    i128 norm2;
    std::array<std::int8_t, kMaxEnumDim> z;
  };
  std::vector<Candidate> candidates;
  for_each_in_box(IntVector::Zero(dim), box, [&](const IntVector& z) {
    if (z.isZero()) return;
    Candidate c{int_norm2(rows, z), {}};
    for (Eigen::Index i = 0; i < dim; ++i) c.z[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(z(i));
    candidates.push_back(c);
  });
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.norm2 < y.norm2; });

  // Greedy selection of independent coordinate vectors, kept in reduced
  // echelon form; independence of z is independence of B^T z.
  std::vector<RationalVector> echelon;
  std::vector<Eigen::Index> pivots;
  std::vector<Rational> minima;
  for (const auto& c : candidates) {
    if (static_cast<Eigen::Index>(minima.size()) == dim) break;
    RationalVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Rational(c.z[static_cast<std::size_t>(i)]);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational f = v(pivots[k]);
      if (f != Rational(0)) v -= f * echelon[k];
    }
    Eigen::Index pivot = 0;
    while (pivot < dim && v(pivot) == Rational(0)) ++pivot;
    if (pivot == dim) continue;
    v /= v(pivot);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational f = echelon[k](pivot);
      if (f != Rational(0)) echelon[k] -= f * v;
    }
    echelon.push_back(v);
    pivots.push_back(pivot);
    minima.push_back(wide_ratio(c.norm2, den));
  }
  return minima;
}

bool gap_svp(const LatticeBasis& b, const Rational& d2, std::int64_t box) {
  return brute_svp(b, box).norm2 <= d2;
}

LatticePoint brute_cvp(const LatticeBasis& b, const RationalVector& t, std::int64_t box) {
  check_enum_args(b, box);
  const RationalVector c = b.coordinates(t);
  IntVector center(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) center(i) = c(i).round();
  LatticePoint best{IntVector(), RationalVector(), Rational(0)};
  bool found = false;
  for_each_in_box(center, box, [&](const IntVector& z) {
    const RationalVector v = b.lattice_vector(z);
    const Rational d2 = squared_norm(v - t);
    if (!found || d2 < best.norm2) {
      best = {z, v, d2};
      found = true;
    }
  });
  return best;
}

RationalVector babai_round(const LatticeBasis& b, const RationalVector& t) {
  const RationalVector c = b.coordinates(t);
  IntVector z(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) z(i) = c(i).round();
  return b.lattice_vector(z);
}

Coeffs sis_hash(const CoeffMatrix& a, const Coeffs& x, const Modulus& q, std::int64_t d) {
  if (a.cols() != x.size()) throw DimMismatch("sis_hash: A has " + std::to_string(a.cols()) +
                                              " columns but x has length " + std::to_string(x.size()));
  if (d < 2) throw InvalidParameter("sis_hash: digit bound d must be at least 2");
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x(j) < 0 || x(j) >= d) throw InvalidParameter("sis_hash: input entry outside [0, d)");
  }
  Coeffs out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    i128 acc = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) acc += static_cast<i128>(a(i, j)) * x(j);
    out(i) = q.reduce(acc);
  }
  return out;
}

}  // namespace lattika::lattice
