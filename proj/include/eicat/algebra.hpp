#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eicat/category.hpp"
#include "eicat/matrix.hpp"

namespace eicat {

/// Column-compressed matrix; column c lists its nonzero (row, value) entries.
template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;
  using Entry = std::pair<std::size_t, Element>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static SparseMatrix from_dense(const Matrix<F>& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m.field().is_zero(m(r, c))) s.columns_[c].emplace_back(r, m(r, c));
    return s;
  }

  static SparseMatrix identity(const F& f, std::size_t n) {
    SparseMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) s.columns_[i].emplace_back(i, f.one());
    return s;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }
  void set_column(std::size_t c, std::vector<Entry> entries) { columns_[c] = std::move(entries); }

  /// out += scale * (this · v)
  void apply_add(const F& f, std::span<const Element> v, const Element& scale, std::span<Element> out) const {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (f.is_zero(v[c])) continue;
      const Element coeff = f.mul(scale, v[c]);
      for (const auto& [r, x] : columns_[c]) out[r] = f.add(out[r], f.mul(coeff, x));
    }
  }

  std::vector<Element> apply(const F& f, std::span<const Element> v) const {
    if (v.size() != cols()) throw std::invalid_argument("SparseMatrix::apply: size mismatch");
    std::vector<Element> out(rows_, f.zero());
    apply_add(f, v, f.one(), out);
    return out;
  }

  Matrix<F> dense(const F& f) const {
    Matrix<F> m(f, rows_, cols());
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, x] : columns_[c]) m(r, c) = x;
    return m;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, x] : columns_[c]) t.columns_[r].emplace_back(c, x);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite-dimensional associative unital algebra given by structure constants
/// b_i b_j = sum_k c_ij^k b_k, with a complete set of orthogonal idempotents.
template <class F>
class FiniteDimAlgebra {
 public:
  using Element = typename F::Element;
  using Term = std::pair<std::size_t, Element>;
  using Vector = std::vector<Element>;

  /// products[i * dim + j] is the expansion of b_i b_j. With no idempotents given,
  /// the unit alone is used. Throws AlgebraError on unit or idempotent failures.
  FiniteDimAlgebra(F field, std::vector<std::string> labels, std::vector<std::vector<Term>> products, Vector unit,
                   std::vector<Vector> idempotents = {})
      : field_(std::move(field)),
        labels_(std::move(labels)),
        products_(std::move(products)),
        unit_(std::move(unit)),
        idempotents_(std::move(idempotents)) {
    const std::size_t n = labels_.size();
    if (products_.size() != n * n) throw AlgebraError("algebra: product table has the wrong size");
    if (unit_.size() != n) throw AlgebraError("algebra: unit has the wrong length");
    for (auto& terms : products_) {
      for (const auto& t : terms)
        if (t.first >= n) throw AlgebraError("algebra: product refers to an unknown basis element");
      std::erase_if(terms, [&](const Term& t) { return field_.is_zero(t.second); });
    }
    for (std::size_t j = 0; j < n; ++j) {
      Vector e(n, field_.zero());
      e[j] = field_.one();
      if (!equal(multiply(unit_, e), e) || !equal(multiply(e, unit_), e))
        throw AlgebraError("algebra: unit law fails at basis element '" + labels_[j] + "'");
    }
    if (idempotents_.empty()) idempotents_.push_back(unit_);
    Vector sum(n, field_.zero());
    for (std::size_t a = 0; a < idempotents_.size(); ++a) {
      if (idempotents_[a].size() != n) throw AlgebraError("algebra: idempotent has the wrong length");
      for (std::size_t b = 0; b < idempotents_.size(); ++b) {
        const Vector prod = multiply(idempotents_[a], idempotents_[b]);
        if (!equal(prod, a == b ? idempotents_[a] : Vector(n, field_.zero())))
          throw AlgebraError("algebra: idempotents are not orthogonal idempotents");
      }
      for (std::size_t i = 0; i < n; ++i) sum[i] = field_.add(sum[i], idempotents_[a][i]);
    }
    if (!equal(sum, unit_)) throw AlgebraError("algebra: idempotents do not sum to the unit");
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const std::vector<Vector>& idempotents() const { return idempotents_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }

  Vector basis_vector(std::size_t i) const {
    Vector e(dim(), field_.zero());
    e.at(i) = field_.one();
    return e;
  }

  Vector multiply(std::span<const Element> x, std::span<const Element> y) const {
    Vector out(dim(), field_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (field_.is_zero(y[j])) continue;
        const Element c = field_.mul(x[i], y[j]);
        for (const auto& [k, s] : product(i, j)) out[k] = field_.add(out[k], field_.mul(c, s));
      }
    }
    return out;
  }

  /// Matrix of x -> b_i x.
  SparseMatrix<F> left_multiplication(std::size_t i) const {
    SparseMatrix<F> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, product(i, j));
    return m;
  }

  /// First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k); exhaustive.
  std::optional<std::array<std::size_t, 3>> associativity_violation() const {
    const std::size_t n = dim();
    Vector lhs(n), rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          std::fill(lhs.begin(), lhs.end(), field_.zero());
          std::fill(rhs.begin(), rhs.end(), field_.zero());
          for (const auto& [m, s] : product(i, j))
            for (const auto& [r, t] : product(m, k)) lhs[r] = field_.add(lhs[r], field_.mul(s, t));
          for (const auto& [m, s] : product(j, k))
            for (const auto& [r, t] : product(i, m)) rhs[r] = field_.add(rhs[r], field_.mul(s, t));
          if (!equal(lhs, rhs)) return std::array<std::size_t, 3>{i, j, k};
        }
      }
    }
    return std::nullopt;
  }

  bool equal(std::span<const Element> a, std::span<const Element> b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field_.equal(a[i], b[i])) return false;
    return true;
  }

 private:
  F field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> products_;
  Vector unit_;
  std::vector<Vector> idempotents_;
};

/// A left module: one action matrix per algebra basis element.
template <class F>
struct ModuleRep {
  using Element = typename F::Element;

  F field;
  std::size_t dim = 0;
  std::vector<SparseMatrix<F>> action;

  std::vector<Element> act(std::size_t basis_index, std::span<const Element> v) const {
    return action.at(basis_index).apply(field, v);
  }

  /// a·v for an algebra element a given in coordinates.
  std::vector<Element> act(std::span<const Element> a, std::span<const Element> v) const {
    std::vector<Element> out(dim, field.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!field.is_zero(a[i])) action[i].apply_add(field, v, a[i], out);
    return out;
  }
};

/// Basis = morphisms (in morphism order); product = composition or zero; unit = sum of
/// identities; idempotents = identities, in object order unless `object_order` is given.
template <class F>
FiniteDimAlgebra<F> algebra_from_category(const FiniteCategory& c, const F& field,
                                          std::span<const ObjectId> object_order = {}) {
  const std::size_t n = c.morphism_count();
  std::vector<std::string> labels;
  for (MorphismId f = 0; f < n; ++f) labels.push_back(c.morphism_name(f));
  std::vector<std::vector<typename FiniteDimAlgebra<F>::Term>> products(n * n);
  for (MorphismId f = 0; f < n; ++f)
    for (MorphismId g = 0; g < n; ++g) {
      const MorphismId h = c.compose(f, g);
      if (h != kNoMorphism) products[f * n + g].emplace_back(h, field.one());
    }
  std::vector<typename F::Element> unit(n, field.zero());
  std::vector<std::vector<typename F::Element>> idempotents;
  std::vector<ObjectId> order(object_order.begin(), object_order.end());
  if (order.empty())
    for (ObjectId x = 0; x < c.object_count(); ++x) order.push_back(x);
  for (ObjectId x : order) {
    unit[c.identity(x)] = field.one();
    std::vector<typename F::Element> e(n, field.zero());
    e[c.identity(x)] = field.one();
    idempotents.push_back(std::move(e));
  }
  return FiniteDimAlgebra<F>(field, std::move(labels), std::move(products), std::move(unit), std::move(idempotents));
}

/// c'_ij^k = c_ji^k, same unit and idempotents.
template <class F>
FiniteDimAlgebra<F> opposite(const FiniteDimAlgebra<F>& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<typename FiniteDimAlgebra<F>::Term>> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j] = a.product(j, i);
  return FiniteDimAlgebra<F>(a.field(), a.labels(), std::move(products), a.unit(), a.idempotents());
}

template <class F>
ModuleRep<F> regular_module(const FiniteDimAlgebra<F>& a) {
  ModuleRep<F> m{a.field(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_multiplication(i));
  return m;
}

/// The k-dual Hom_k(M, k) of a left A-module, as a left module over the opposite algebra.
template <class F>
ModuleRep<F> dual_module(const ModuleRep<F>& m) {
  ModuleRep<F> d{m.field, m.dim, {}};
  for (const auto& s : m.action) d.action.push_back(s.transpose());
  return d;
}

/// Why `m` fails to be a module over `a` (unit or product rule), if it does.
template <class F>
std::optional<std::string> module_violation(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m) {
  const F& f = a.field();
  if (m.action.size() != a.dim()) return "one action matrix per basis element is required";
  for (const auto& s : m.action)
    if (s.rows() != m.dim || s.cols() != m.dim) return "action matrix has the wrong size";
  for (std::size_t x = 0; x < m.dim; ++x) {
    std::vector<typename F::Element> v(m.dim, f.zero());
    v[x] = f.one();
    if (m.act(std::span<const typename F::Element>(a.unit()), v) != v) return "the unit does not act as the identity";
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const auto bv = m.act(i, v);
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto lhs = m.act(j, bv);
        std::vector<typename F::Element> rhs(m.dim, f.zero());
        for (const auto& [k, s] : a.product(j, i)) m.action[k].apply_add(f, v, s, rhs);
        if (!a.equal(lhs, rhs))
          return "action of '" + a.labels()[j] + "' after '" + a.labels()[i] + "' is not that of their product";
      }
    }
  }
  return std::nullopt;
}

}  // namespace eicat
