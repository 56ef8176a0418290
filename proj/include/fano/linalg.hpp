#pragma once

// Exact linear algebra: deterministic leftmost-pivot Gaussian elimination
// (incremental RREF) and memoized cofactor determinants for matrices of
// polynomials.

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fano/poly.hpp"

namespace fano {

// Incremental row reducer.  Rows are folded one at a time into a reduced
// row-echelon basis, so rank and nullspace of large streamed systems never
// materialize the full matrix.  The resulting RREF (and hence the nullspace
// basis) is canonical: it does not depend on the order rows arrive.
template <class K>
class RowReducer {
 public:
  explicit RowReducer(int ncols) : ncols_(ncols) {}

  int ncols() const { return static_cast<int>(ncols_); }
  int rank() const { return static_cast<int>(rows_.size()); }
  // RREF basis of the row space: (pivot column, normalized row) pairs.
  const std::vector<std::pair<int, Vec<K>>>& pivot_rows() const { return rows_; }

  bool add_row(Vec<K> r) {
    if (r.size() != ncols_) throw std::invalid_argument("fano: row width mismatch");
    for (const auto& [col, row] : rows_) {
      if (is_zero(r[col])) continue;
      K f = r[col];
      for (int j = col; j < ncols_; ++j) r[j] -= f * row[j];
    }
    int piv = -1;
    for (int j = 0; j < ncols_; ++j)
      if (!is_zero(r[j])) { piv = j; break; }
    if (piv < 0) return false;
    K inv = r[piv].inverse();
    for (int j = piv; j < ncols_; ++j) r[j] = r[j] * inv;
    for (auto& [col, row] : rows_) {
      if (is_zero(row[piv])) continue;
      K f = row[piv];
      for (int j = piv; j < ncols_; ++j) row[j] -= f * r[j];
    }
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->first < piv) ++pos;
    rows_.insert(pos, {piv, std::move(r)});
    return true;
  }

  bool add_row_sparse(const std::vector<std::pair<int, K>>& entries) {
    Vec<K> r = Vec<K>::Constant(ncols_, K(0));
    for (const auto& [j, c] : entries) r[j] += c;
    return add_row(std::move(r));
  }

  // True iff the row lies in the span of the rows already folded in.
  bool in_row_span(Vec<K> r) const {
    for (const auto& [col, row] : rows_) {
      if (is_zero(r[col])) continue;
      K f = r[col];
      for (int j = col; j < ncols_; ++j) r[j] -= f * row[j];
    }
    for (int j = 0; j < ncols_; ++j)
      if (!is_zero(r[j])) return false;
    return true;
  }

  // Canonical nullspace basis: one vector per free column j, with 1 in
  // position j and -RREF coefficients in the pivot positions.
  std::vector<Vec<K>> nullspace() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (const auto& [col, row] : rows_) is_pivot[col] = true;
    std::vector<Vec<K>> basis;
    for (int j = 0; j < ncols_; ++j) {
      if (is_pivot[j]) continue;
      Vec<K> v = Vec<K>::Constant(ncols_, K(0));
      v[j] = K(1);
      for (const auto& [col, row] : rows_) v[col] = -row[j];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  Eigen::Index ncols_;
  std::vector<std::pair<int, Vec<K>>> rows_;
};

template <class K>
struct RankNullspace {
  int rank = 0;
  std::vector<Vec<K>> nullspace;
};

// Rank and exact nullspace basis of M (solutions of M v = 0).
template <class K>
RankNullspace<K> rank_nullspace(const Mat<K>& m) {
  RowReducer<K> red(static_cast<int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    red.add_row(m.row(i).transpose());
  return {red.rank(), red.nullspace()};
}

template <class K>
int rank_of(const Mat<K>& m) {
  RowReducer<K> red(static_cast<int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    red.add_row(m.row(i).transpose());
  return red.rank();
}

// Memoized cofactor determinants of minors of one fixed polynomial matrix.
// Expansion is along the lowest remaining column, memoized on the
// (row-set, column-set) pair, so every minor of the matrix shares work.
template <class K>
class DetCache {
 public:
  explicit DetCache(const Mat<Poly<K>>& m) : m_(&m) {
    if (m.rows() == 0 || m.cols() == 0)
      throw std::invalid_argument("fano: empty matrix");
    if (m.rows() > 31 || m.cols() > 31)
      throw std::invalid_argument("fano: matrix too large for DetCache");
    arity_ = (*m_)(0, 0).arity();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        if ((*m_)(i, j).arity() != arity_)
          throw std::invalid_argument("fano: mixed arity entries");
  }

  int arity() const { return arity_; }

  const Poly<K>& minor_det(uint32_t rowmask, uint32_t colmask) {
    int k = std::popcount(rowmask);
    if (k != std::popcount(colmask))
      throw std::invalid_argument("fano: non-square minor");
    if (k > 12) throw std::invalid_argument("fano: minor size above 12x12 cap");
    auto it = memo_.find({rowmask, colmask});
    if (it != memo_.end()) return it->second;
    Poly<K> out(arity_);
    if (k == 0) {
      out = Poly<K>::constant(arity_, K(1));
    } else {
      int col = std::countr_zero(colmask);
      uint32_t rest_cols = colmask & (colmask - 1);
      int sign = 1;
      for (uint32_t rm = rowmask; rm; rm &= rm - 1, sign = -sign) {
        int row = std::countr_zero(rm);
        const Poly<K>& entry = (*m_)(row, col);
        if (!entry.is_zero_poly()) {
          const Poly<K>& sub = minor_det(rowmask & ~(uint32_t{1} << row), rest_cols);
          Poly<K> prod = entry * sub;
          out = sign > 0 ? out + prod : out - prod;
        }
      }
    }
    return memo_.emplace(std::make_pair(rowmask, colmask), std::move(out)).first->second;
  }

  const Poly<K>& det() {
    if (m_->rows() != m_->cols()) throw std::invalid_argument("fano: det of non-square");
    uint32_t full = (m_->rows() == 31) ? 0x7fffffffu : ((uint32_t{1} << m_->rows()) - 1);
    return minor_det(full, full);
  }

 private:
  const Mat<Poly<K>>* m_;
  int arity_;
  std::map<std::pair<uint32_t, uint32_t>, Poly<K>> memo_;
};

// Exact determinant of a square matrix of polynomials.
template <class K>
Poly<K> det_polymat(const Mat<Poly<K>>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("fano: det of non-square");
  if (m.rows() > 12) throw std::invalid_argument("fano: det capped at 12x12");
  DetCache<K> cache(m);
  return cache.det();
}

// Uniformly initialized polynomial matrix (Eigen default-constructs entries
// with arity 0, which is never what we want).
template <class K>
Mat<Poly<K>> poly_mat(Eigen::Index rows, Eigen::Index cols, int arity) {
  Mat<Poly<K>> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Poly<K>(arity);
  return m;
}

}  // namespace fano
