#pragma once

// Exact dense linear algebra over a field.
//
// Everything here is templated on the scalar so the same elimination code runs
// on any exact field type; the library instantiates it with Rational. No
// routine compares against a tolerance: a scalar is zero or it is not.

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

#include "splitnull/errors.hpp"
#include "splitnull/rational.hpp"

namespace splitnull {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  return x == Scalar(0);
}
inline bool is_zero(const Rational& x) { return x.is_zero(); }

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& expr) {
  // coeff() on an unevaluated product recomputes the whole product each call.
  const typename Derived::PlainObject m = expr;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m.coeff(i, j))) return false;
  return true;
}

template <typename Scalar>
struct RrefResult {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;  // strictly increasing

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan reduction to reduced row-echelon form.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RrefResult<Scalar> out{m, {}};
  Matrix<Scalar>& a = out.reduced;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Index width = cols - c;
    if (!(a(r, c) == Scalar(1))) {
      const Scalar inv = Scalar(1) / a(r, c);
      for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index j = c; j < c + width; ++j) {
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Basis of a linear subspace, stored as the columns of a matrix.
/// Invariant: the columns are linearly independent.
template <typename Scalar>
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(Index ambient_dim) : columns_(ambient_dim, 0) {}

  /// Basis of the span of the given columns (a maximal independent subset, in order).
  static SubspaceBasis spanned_by(const Matrix<Scalar>& columns) {
    const auto red = rref(columns);
    SubspaceBasis out(columns.rows());
    out.columns_.resize(columns.rows(), red.rank());
    for (Index k = 0; k < red.rank(); ++k) out.columns_.col(k) = columns.col(red.pivots[k]);
    return out;
  }

  /// Wraps columns known to be independent. Throws DimensionError if they are not.
  static SubspaceBasis from_independent(Matrix<Scalar> columns) {
    if (rank(columns) != columns.cols())
      throw DimensionError("SubspaceBasis: vectors are linearly dependent");
    SubspaceBasis out;
    out.columns_ = std::move(columns);
    return out;
  }

  Index ambient_dim() const { return columns_.rows(); }
  Index dim() const { return columns_.cols(); }
  bool empty() const { return columns_.cols() == 0; }

  const Matrix<Scalar>& matrix() const { return columns_; }
  Vector<Scalar> vector(Index k) const { return columns_.col(k); }

 private:
  Matrix<Scalar> columns_;
};

using QSubspace = SubspaceBasis<Rational>;

/// Canonical kernel basis: one vector per free column, that coordinate set to 1.
template <typename Derived>
SubspaceBasis<typename Derived::Scalar> nullspace_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto red = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, cols - red.rank());
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Scalar(1);
    for (Index i = 0; i < red.rank(); ++i) {
      if (!is_zero(red.reduced(i, f))) basis(red.pivots[i], k) = -red.reduced(i, f);
    }
    ++k;
  }
  return SubspaceBasis<Scalar>::from_independent(std::move(basis));
}

/// Basis of the column space made of the pivot columns of m.
template <typename Derived>
SubspaceBasis<typename Derived::Scalar> image_basis(const Eigen::MatrixBase<Derived>& m) {
  return SubspaceBasis<typename Derived::Scalar>::spanned_by(m);
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <typename Derived>
typename Derived::Scalar det_bareiss(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("det_bareiss: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      Index p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return Scalar(0);
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Inverse by Gauss-Jordan on [M | I]; nullopt when M is singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  auto red = rref(aug);
  if (red.rank() < n || (n > 0 && red.pivots[static_cast<std::size_t>(n - 1)] != n - 1))
    return std::nullopt;
  return Matrix<Scalar>(red.reduced.rightCols(n));
}

/// Square submatrix with row `row` and column `col` deleted.
template <typename Derived>
Matrix<typename Derived::Scalar> minor_matrix(const Eigen::MatrixBase<Derived>& m, Index row,
                                              Index col) {
  const Index n = m.rows();
  Matrix<typename Derived::Scalar> out(n - 1, m.cols() - 1);
  for (Index i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (Index j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

/// Classical adjoint: adj(M)(i, j) = (-1)^(i+j) det(M without row j and column i).
/// Uses det(M) * M^-1 when M is invertible and explicit cofactors otherwise.
template <typename Derived>
Matrix<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionError("adjugate: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Matrix<Scalar>(0, 0);
  if (n == 1) return Matrix<Scalar>::Constant(1, 1, Scalar(1));
  const Index r = rank(m);
  if (r == n) {
    const Scalar det = det_bareiss(m);
    return det * *inverse(m);
  }
  Matrix<Scalar> adj = Matrix<Scalar>::Zero(n, n);
  if (r < n - 1) return adj;  // every (n-1)-minor vanishes
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Scalar cof = det_bareiss(minor_matrix(m, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? cof : Scalar(-cof);
    }
  }
  return adj;
}

/// Some x with M x = b, or nullopt when b is outside im(M).
template <typename DerivedM, typename DerivedB>
std::optional<Vector<typename DerivedM::Scalar>> solve_particular(
    const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  if (b.cols() != 1 || b.rows() != m.rows())
    throw DimensionError("solve_particular: right-hand side length does not match rows");
  Matrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
  for (Index i = 0; i < red.rank(); ++i) x(red.pivots[i]) = red.reduced(i, m.cols());
  return x;
}

template <typename DerivedM, typename DerivedV>
bool image_contains(const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedV>& v) {
  return solve_particular(m, v).has_value();
}

template <typename Scalar, typename DerivedV>
bool span_contains(const SubspaceBasis<Scalar>& basis, const Eigen::MatrixBase<DerivedV>& v) {
  if (v.rows() != basis.ambient_dim())
    throw DimensionError("span_contains: vector length does not match ambient dimension");
  return image_contains(basis.matrix(), v);
}

/// A ∩ B, found by solving A a = B b for the coefficient pairs.
template <typename Scalar>
SubspaceBasis<Scalar> subspace_intersect(const SubspaceBasis<Scalar>& a,
                                         const SubspaceBasis<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspace_intersect: ambient dimensions differ");
  const Index n = a.ambient_dim();
  if (a.empty() || b.empty()) return SubspaceBasis<Scalar>(n);
  Matrix<Scalar> stacked(n, a.dim() + b.dim());
  stacked.leftCols(a.dim()) = a.matrix();
  stacked.rightCols(b.dim()) = -b.matrix();
  const auto coeffs = nullspace_basis(stacked);
  Matrix<Scalar> common = a.matrix() * coeffs.matrix().topRows(a.dim());
  return SubspaceBasis<Scalar>::spanned_by(common);
}

/// True when both bases span the same subspace.
template <typename Scalar>
bool same_span(const SubspaceBasis<Scalar>& a, const SubspaceBasis<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) return false;
  Matrix<Scalar> both(a.ambient_dim(), a.dim() + b.dim());
  both.leftCols(a.dim()) = a.matrix();
  both.rightCols(b.dim()) = b.matrix();
  return rank(both) == a.dim();
}

/// Indices of the nonzero coordinates of any vector in the span.
template <typename Scalar>
std::vector<Index> support_of(const SubspaceBasis<Scalar>& basis) {
  std::vector<Index> out;
  for (Index i = 0; i < basis.ambient_dim(); ++i) {
    for (Index k = 0; k < basis.dim(); ++k) {
      if (!is_zero(basis.matrix()(i, k))) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

/// Scales v to a primitive integer vector (gcd of entries 1) whose first
/// nonzero entry is positive. The zero vector is returned unchanged.
QVector primitive_integer_vector(const QVector& v);

inline QVector ones(Index n) { return QVector::Constant(n, Rational(1)); }

/// (I - J)^-1 = I - J/(k-1) for the k×k clique block, k >= 2.
QMatrix clique_block_inverse(Index k);

}  // namespace splitnull
