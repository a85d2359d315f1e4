#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "moldkit/field.hpp"

namespace moldkit {

/// Row-major dense matrix over an exact field. Only what the 2x2 theory
/// needs: row reduction, rank, kernel, determinant.
template <ExactField F>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const FieldSpec& spec)
      : rows_(rows), cols_(cols), data_(rows * cols, F::from_int(0, spec)), spec_(spec) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& spec() const { return spec_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<F> data_;
  FieldSpec spec_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <ExactField F>
std::vector<std::size_t> rref(DenseMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const F scale = m(r, c).inv();
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const F f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <ExactField F>
std::size_t rank(DenseMatrix<F> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <ExactField F>
std::vector<std::vector<F>> kernel(DenseMatrix<F> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<F>> basis;
  const F zero = F::from_int(0, m.spec());
  const F one = F::from_int(1, m.spec());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), zero);
    v[free] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant of a square matrix by Gaussian elimination with row swaps.
template <ExactField F>
F determinant(DenseMatrix<F> m) {
  const std::size_t n = m.rows();
  F acc = F::from_int(1, m.spec());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return F::from_int(0, m.spec());
    if (piv != c) {
      m.swap_rows(c, piv);
      acc = -acc;
    }
    acc *= m(c, c);
    const F scale = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const F f = m(i, c) * scale;
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return acc;
}

}  // namespace moldkit
