#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eicat/field.hpp"

namespace eicat {

/// Dense row-major matrix over a field `F` (PrimeField or RationalField).
template <class F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<std::vector<Element>>& rows,
                          std::size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const F& field, const std::vector<std::vector<Element>>& cols,
                             std::size_t rows) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Element> column(std::size_t c) const {
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<Element> apply(std::span<const Element> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<Element> out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      const Element* a = data_.data() + r * cols_;
      Element acc = field_.zero();
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!field_.is_zero(a[c]) && !field_.is_zero(v[c])) acc = field_.add(acc, field_.mul(a[c], v[c]));
      }
      out[r] = acc;
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& x) { return field_.is_zero(x); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: size mismatch");
    const F& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      Element* o = out.data_.data() + i * b.cols_;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Element& aik = a(i, k);
        if (f.is_zero(aik)) continue;
        const Element* brow = b.data_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!f.is_zero(brow[j])) o[j] = f.add(o[j], f.mul(aik, brow[j]));
        }
      }
    }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: size mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

// row_a -= factor * row_b, starting at column `from`.
template <class F, class E>
void axpy_row(const F& f, std::span<E> a, std::span<const E> b, const E& factor, std::size_t from) {
  for (std::size_t j = from; j < a.size(); ++j) {
    if (!f.is_zero(b[j])) a[j] = f.sub_mul(a[j], factor, b[j]);
  }
}

}  // namespace detail

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
Echelon<F> rref(Matrix<F> m) {
  const F& f = m.field();
  Echelon<F> out{m, 0, {}};
  Matrix<F>& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && f.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      auto rp = a.row(p);
      auto rr = a.row(r);
      std::swap_ranges(rp.begin(), rp.end(), rr.begin());
    }
    auto pivot_row = a.row(r);
    const auto inv = f.inv(pivot_row[c]);
    for (std::size_t j = c; j < a.cols(); ++j) pivot_row[j] = f.mul(pivot_row[j], inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      const auto factor = a(i, c);
      detail::axpy_row(f, a.row(i), std::span<const typename F::Element>(pivot_row), factor, c);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Element>> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Element>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, or nullopt when b is not in the column space.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const Matrix<F>& m,
                                                      std::span<const typename F::Element> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  const F& f = m.field();
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto e = rref(std::move(aug));
  if (e.rank > 0 && e.pivots[e.rank - 1] == m.cols()) return std::nullopt;
  std::vector<typename F::Element> x(m.cols(), f.zero());
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

/// A subspace of F^n kept as a fully reduced row-echelon basis; grows by insertion.
template <class F>
class RowSpace {
 public:
  using Element = typename F::Element;

  RowSpace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<std::vector<Element>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

  /// Remainder of v after elimination against the basis; zero iff v lies in the span.
  std::vector<Element> reduce(std::vector<Element> v) const {
    check(v.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element factor = v[pivots_[i]];
      if (field_.is_zero(factor)) continue;
      detail::axpy_row(field_, std::span<Element>(v), std::span<const Element>(rows_[i]), factor, 0);
    }
    return v;
  }

  bool contains(std::span<const Element> v) const {
    auto r = reduce(std::vector<Element>(v.begin(), v.end()));
    return std::all_of(r.begin(), r.end(), [&](const Element& x) { return field_.is_zero(x); });
  }

  /// Adds v to the spanning set; returns true iff the dimension grew.
  bool insert(std::vector<Element> v) {
    v = reduce(std::move(v));
    std::size_t c = 0;
    while (c < v.size() && field_.is_zero(v[c])) ++c;
    if (c == v.size()) return false;
    const auto inv = field_.inv(v[c]);
    for (std::size_t j = c; j < v.size(); ++j) v[j] = field_.mul(v[j], inv);
    for (auto& row : rows_) {
      if (field_.is_zero(row[c])) continue;
      const Element factor = row[c];
      detail::axpy_row(field_, std::span<Element>(row), std::span<const Element>(v), factor, 0);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  /// Coefficients of v in terms of basis(); throws if v is outside the span.
  std::vector<Element> coordinates(std::span<const Element> v) const {
    check(v.size());
    std::vector<Element> coeff;
    coeff.reserve(rows_.size());
    for (auto p : pivots_) coeff.push_back(v[p]);
    std::vector<Element> rest(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!field_.is_zero(coeff[i]))
        detail::axpy_row(field_, std::span<Element>(rest), std::span<const Element>(rows_[i]), coeff[i], 0);
    }
    for (const auto& x : rest)
      if (!field_.is_zero(x)) throw std::domain_error("RowSpace::coordinates: vector outside subspace");
    return coeff;
  }

 private:
  void check(std::size_t n) const {
    if (n != ambient_) throw std::invalid_argument("RowSpace: vector of wrong length");
  }

  F field_;
  std::size_t ambient_;
  std::vector<std::vector<Element>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Quotient V / W of F^n by a subspace W: the quotient basis is the set of non-pivot
/// coordinates of W's reduced basis.
template <class F>
class QuotientSpace {
 public:
  using Element = typename F::Element;

  explicit QuotientSpace(RowSpace<F> relations) : relations_(std::move(relations)) {
    std::vector<bool> pivot(relations_.ambient(), false);
    for (auto p : relations_.pivots()) pivot[p] = true;
    for (std::size_t c = 0; c < relations_.ambient(); ++c)
      if (!pivot[c]) free_.push_back(c);
  }

  std::size_t dim() const { return free_.size(); }
  std::size_t ambient() const { return relations_.ambient(); }

  /// Ambient coordinate that represents quotient basis vector i.
  std::size_t representative(std::size_t i) const { return free_[i]; }

  /// Coordinates in the quotient of the class of v.
  std::vector<Element> project(std::vector<Element> v) const {
    v = relations_.reduce(std::move(v));
    std::vector<Element> out;
    out.reserve(free_.size());
    for (auto c : free_) out.push_back(v[c]);
    return out;
  }

  const RowSpace<F>& relations() const { return relations_; }

 private:
  RowSpace<F> relations_;
  std::vector<std::size_t> free_;
};

}  // namespace eicat
