#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csg/rational.hpp"

namespace csg {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Reduced row echelon form in place. Column sweep is left to right and
/// the pivot is the first nonzero entry below, so the result is unique
/// and no magnitude comparisons are involved. Returns the pivot columns.
template <typename Derived>
std::vector<int> rref_inplace(Eigen::MatrixBase<Derived>& m) {
  std::vector<int> pivots;
  Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    m.row(r) /= m(r, c);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && m(i, c) != 0) m.row(i) -= m(i, c) * m.row(r);
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

template <typename Derived>
int rank_of_matrix(const Eigen::MatrixBase<Derived>& m) {
  Mat t = m;
  return static_cast<int>(rref_inplace(t).size());
}

/// Row space of a matrix in unique reduced echelon form; zero rows are
/// dropped, so rows() equals the dimension.
struct Subspace {
  Mat basis;    // dim x ambient, RREF, no zero rows
  int ambient = 0;

  int dim() const { return static_cast<int>(basis.rows()); }

  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis.rows() == o.basis.rows() && basis == o.basis;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool is_zero() const { return basis.rows() == 0; }

  /// Membership of a vector in the row space.
  bool contains_vector(const RowVec& v) const;
  /// Containment of another subspace.
  bool contains(const Subspace& other) const;

  std::string key() const {
    std::string s = std::to_string(ambient) + "|" + std::to_string(dim());
    for (Eigen::Index i = 0; i < basis.rows(); ++i)
      for (Eigen::Index j = 0; j < basis.cols(); ++j) {
        s += basis(i, j).get_str();
        s += ',';
      }
    return s;
  }
};

inline Subspace zero_subspace(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(0, ambient);
  return s;
}

inline Subspace full_space(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat::Identity(ambient, ambient);
  return s;
}

/// Canonical form of the row space spanned by the given rows.
inline Subspace canonical_form(const Mat& rows, int ambient) {
  if (rows.rows() > 0 && rows.cols() != ambient)
    throw DimensionMismatch("canonical_form: row length does not match ambient dimension");
  Mat t = rows;
  t.conservativeResize(t.rows(), ambient);
  int r = static_cast<int>(rref_inplace(t).size());
  Subspace s;
  s.ambient = ambient;
  s.basis = t.topRows(r);
  return s;
}

inline Subspace canonical_form(const std::vector<RowVec>& rows, int ambient) {
  for (const auto& v : rows)
    if (v.size() != ambient)
      throw DimensionMismatch("canonical_form: mixed ambient dimensions");
  Mat m(static_cast<Eigen::Index>(rows.size()), ambient);
  for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = rows[i];
  return canonical_form(m, ambient);
}

inline int rank_of(const std::vector<RowVec>& rows) {
  if (rows.empty()) return 0;
  int ambient = static_cast<int>(rows[0].size());
  return canonical_form(rows, ambient).dim();
}

template <typename Derived>
bool row_is_zero(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

/// Reduces v against the rows of an RREF matrix; the residual is zero
/// exactly when v lies in the row space.
inline RowVec reduce_against(const Mat& rref, const std::vector<int>& pivots, RowVec v) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Rat& c = v(pivots[i]);
    if (c != 0) v -= c * rref.row(static_cast<Eigen::Index>(i));
  }
  return v;
}

inline std::vector<int> pivot_columns(const Mat& rref) {
  std::vector<int> p;
  for (Eigen::Index i = 0; i < rref.rows(); ++i)
    for (Eigen::Index j = 0; j < rref.cols(); ++j)
      if (rref(i, j) != 0) {
        p.push_back(static_cast<int>(j));
        break;
      }
  return p;
}

inline bool Subspace::contains_vector(const RowVec& v) const {
  if (v.size() != ambient) throw DimensionMismatch("contains_vector: ambient mismatch");
  RowVec r = reduce_against(basis, pivot_columns(basis), v);
  return row_is_zero(r);
}

inline bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient) throw DimensionMismatch("contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  auto piv = pivot_columns(basis);
  for (Eigen::Index i = 0; i < other.basis.rows(); ++i)
    if (!row_is_zero(reduce_against(basis, piv, other.basis.row(i)))) return false;
  return true;
}

/// Kernel of the row-wise linear map, i.e. {x : m x^T = 0}, as a subspace
/// of the column-index space.
inline Subspace nullspace(const Mat& m, int ambient) {
  Mat t = m;
  t.conservativeResize(t.rows(), ambient);
  std::vector<int> pivots = rref_inplace(t);
  int r = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(ambient, false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis(ambient - r, ambient);
  basis.setZero();
  int row = 0;
  for (int f = 0; f < ambient; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = 1;
    for (int i = 0; i < r; ++i) basis(row, pivots[i]) = -t(i, f);
    ++row;
  }
  return canonical_form(basis, ambient);
}

inline Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient != w.ambient) throw DimensionMismatch("sum: ambient mismatch");
  Mat stacked(u.basis.rows() + w.basis.rows(), u.ambient);
  stacked << u.basis, w.basis;
  return canonical_form(stacked, u.ambient);
}

inline Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient != w.ambient) throw DimensionMismatch("intersect: ambient mismatch");
  Eigen::Index p = u.basis.rows(), q = w.basis.rows();
  if (p == 0 || q == 0) return zero_subspace(u.ambient);
  // Columns of m are the u_i and w_j; kernel vectors (a|b) satisfy
  // sum a_i u_i = -sum b_j w_j, an element of the intersection.
  Mat m(u.ambient, p + q);
  m.leftCols(p) = u.basis.transpose();
  m.rightCols(q) = w.basis.transpose();
  Subspace ker = nullspace(m, static_cast<int>(p + q));
  Mat vecs(ker.dim(), u.ambient);
  for (Eigen::Index i = 0; i < vecs.rows(); ++i)
    vecs.row(i) = ker.basis.row(i).leftCols(p) * u.basis;
  return canonical_form(vecs, u.ambient);
}

}  // namespace csg
