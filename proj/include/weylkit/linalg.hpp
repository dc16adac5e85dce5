#pragma once

// Exact dense linear algebra over a field. Everything here is templated on
// the scalar and works for any exact field type with Eigen NumTraits
// (Rational in practice). No pivoting by magnitude: a pivot is any nonzero.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "weylkit/rational.hpp"

namespace weylkit {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

template <typename Scalar>
Echelon<Scalar> rref(Matrix<Scalar> m) {
  using Index = Eigen::Index;
  Echelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index piv = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (m(r, col) != Scalar(0)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      for (Index c = col; c < m.cols(); ++c)
        if (m(row, c) != Scalar(0)) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<Eigen::Index>(rref<Scalar>(m).pivots.size());
}

/// Basis of the right null space {v : m v = 0}, as columns.
template <typename Scalar>
Matrix<Scalar> kernel(const Matrix<Scalar>& m) {
  using Index = Eigen::Index;
  const Index n = m.cols();
  if (m.rows() == 0) return Matrix<Scalar>::Identity(n, n);
  const auto e = rref<Scalar>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = -e.reduced(static_cast<Index>(r), free);
    ++k;
  }
  return basis;
}

/// Independent columns of m spanning its column space (a subset of m's columns).
template <typename Scalar>
Matrix<Scalar> column_basis(const Matrix<Scalar>& m) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix<Scalar>(m.rows(), 0);
  const auto e = rref<Scalar>(m);
  Matrix<Scalar> out(m.rows(), static_cast<Eigen::Index>(e.pivots.size()));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    out.col(static_cast<Eigen::Index>(i)) = m.col(e.pivots[i]);
  return out;
}

template <typename Scalar>
Matrix<Scalar> hstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Matrix<Scalar> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

template <typename Scalar>
Matrix<Scalar> vstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Matrix<Scalar> out(a.rows() + b.rows(), a.cols());
  out << a, b;
  return out;
}

/// Some x with m x = b, or nullopt if the system is inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& m, const Vector<Scalar>& b) {
  using Index = Eigen::Index;
  Matrix<Scalar> aug(m.rows(), m.cols() + 1);
  if (m.cols() > 0) aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const auto e = rref<Scalar>(aug);
  Vector<Scalar> x = Vector<Scalar>::Zero(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(static_cast<Index>(r), m.cols());
  }
  return x;
}

/// Column-space containment: every column of b lies in span(a).
template <typename Scalar>
bool spans(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (b.cols() == 0) return true;
  return rank<Scalar>(hstack<Scalar>(a, b)) == rank<Scalar>(a);
}

template <typename Scalar>
bool same_span(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return spans<Scalar>(a, b) && spans<Scalar>(b, a);
}

/// Matrix of the restriction of `op` to an invariant subspace with column
/// basis `basis`: op * basis = basis * result. Returns nullopt if the
/// subspace is not invariant.
template <typename Scalar>
std::optional<Matrix<Scalar>> restrict_to(const Matrix<Scalar>& op, const Matrix<Scalar>& basis) {
  const Matrix<Scalar> image = op * basis;
  Matrix<Scalar> out(basis.cols(), basis.cols());
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    auto x = solve<Scalar>(basis, image.col(j));
    if (!x) return std::nullopt;
    out.col(j) = *x;
  }
  return out;
}

template <typename Scalar>
bool is_zero(const Matrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

}  // namespace weylkit
