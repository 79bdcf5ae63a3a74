#include "eicat/triangular.hpp"

#include <numeric>
#include <string>

#include "eicat/freeness.hpp"
#include "eicat/projectivity.hpp"

namespace eicat {

TriangularPresentation::TriangularPresentation(Presentation p, FieldSpec field)
    : presentation_(std::move(p)), field_(field) {
  const auto& c = presentation_.category();
  basis_index_.assign(c.morphism_count(), 0);
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i; j < size(); ++j)
      for (MorphismId f : block(i, j)) {
        basis_index_[f] = basis_.size();
        basis_.push_back(f);
      }
  if (basis_.size() != c.morphism_count())
    throw std::logic_error("triangular form does not cover every morphism");
  parent_ids_.resize(c.morphism_count());
  std::iota(parent_ids_.begin(), parent_ids_.end(), MorphismId{0});
}

bool TriangularPresentation::psi_associative() const {
  const auto& c = category();
  const std::size_t m = c.morphism_count();
  for (MorphismId f = 0; f < m; ++f)
    for (MorphismId g = 0; g < m; ++g) {
      const MorphismId fg = c.compose(f, g);
      if (fg == kNoMorphism) continue;
      for (MorphismId h = 0; h < m; ++h) {
        const MorphismId gh = c.compose(g, h);
        if (gh == kNoMorphism) continue;
        if (c.compose(fg, h) != c.compose(f, gh)) return false;
      }
    }
  return true;
}

TriangularPresentation TriangularPresentation::leading(std::size_t t) const {
  if (t < 1 || t > size()) throw IndexOutOfRange("leading block size out of range: " + std::to_string(t));
  std::vector<ObjectId> objects(presentation_.ordering().begin(), presentation_.ordering().begin() + t);
  FiniteCategory sub = full_subcategory(category(), objects);
  std::vector<ObjectId> order(t);
  std::iota(order.begin(), order.end(), ObjectId{0});
  TriangularPresentation out(presentation_with_order(sub, order), field_);
  // full_subcategory keeps the morphisms in their original relative order
  out.parent_ids_.clear();
  for (MorphismId f = 0; f < category().morphism_count(); ++f)
    if (presentation_.position(category().src(f)) < t && presentation_.position(category().dst(f)) < t)
      out.parent_ids_.push_back(parent_ids_[f]);
  return out;
}

TriangularPresentation build_triangular(const Presentation& p, const FieldSpec& field) {
  TriangularPresentation tp(p, field);
  if (!tp.psi_associative()) throw std::logic_error("composition is not associative");
  return tp;
}

namespace {

// Index of each morphism inside its own Hom list.
std::vector<std::size_t> local_indices(const FiniteCategory& c) {
  std::vector<std::size_t> idx(c.morphism_count(), 0);
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      const auto& h = c.hom(x, y);
      for (std::size_t k = 0; k < h.size(); ++k) idx[h[k]] = k;
    }
  return idx;
}

template <class F>
std::vector<Matrix<F>> dense_actions(const ModuleRep<F>& a) {
  std::vector<Matrix<F>> out;
  for (const auto& s : a.action) out.push_back(s.dense(a.field));
  return out;
}

void check_position(const TriangularPresentation& tp, std::size_t t) {
  if (t >= tp.size()) throw IndexOutOfRange("position out of range: " + std::to_string(t));
}

void check_vertex_module(const TriangularPresentation& tp, std::size_t t, std::size_t actions) {
  if (actions != tp.presentation().aut(t).order())
    throw std::invalid_argument("module needs one action matrix per automorphism of the vertex");
}

void check_mstar_index(const TriangularPresentation& tp, std::size_t t) {
  if (t < 1 || t + 1 > tp.size())
    throw IndexOutOfRange("M* index must lie in [1, " + std::to_string(tp.size() == 0 ? 0 : tp.size() - 1) +
                          "], got " + std::to_string(t));
}

}  // namespace

template <class F>
FiniteDimAlgebra<F> triangular_algebra(const TriangularPresentation& tp, const F& field) {
  const auto& c = tp.category();
  const auto& basis = tp.basis();
  const std::size_t d = basis.size();
  std::vector<std::string> labels;
  for (MorphismId f : basis) labels.push_back(c.morphism_name(f));
  std::vector<std::vector<typename FiniteDimAlgebra<F>::Term>> products(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const MorphismId h = c.compose(basis[a], basis[b]);
      if (h != kNoMorphism) products[a * d + b].emplace_back(tp.basis_index(h), field.one());
    }
  std::vector<typename F::Element> unit(d, field.zero());
  std::vector<std::vector<typename F::Element>> idempotents;
  for (std::size_t i = 0; i < tp.size(); ++i) {
    const std::size_t k = tp.basis_index(c.identity(tp.presentation().object(i)));
    unit[k] = field.one();
    std::vector<typename F::Element> e(d, field.zero());
    e[k] = field.one();
    idempotents.push_back(std::move(e));
  }
  return FiniteDimAlgebra<F>(field, std::move(labels), std::move(products), std::move(unit), std::move(idempotents));
}

template <class F>
FiniteDimAlgebra<F> vertex_algebra(const TriangularPresentation& tp, std::size_t t, const F& field) {
  check_position(tp, t);
  const auto& g = tp.presentation().aut(t);
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back(tp.category().morphism_name(tp.presentation().aut_element(t, x)));
  std::vector<std::vector<typename FiniteDimAlgebra<F>::Term>> products(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) products[a * n + b].emplace_back(g.mul(a, b), field.one());
  std::vector<typename F::Element> unit(n, field.zero());
  unit[g.identity()] = field.one();
  return FiniteDimAlgebra<F>(field, std::move(labels), std::move(products), std::move(unit));
}

template <class F>
std::size_t tensor_dim(const std::vector<Matrix<F>>& right, const std::vector<Matrix<F>>& left) {
  if (right.size() != left.size() || right.empty())
    throw std::invalid_argument("tensor_dim: both sides need one matrix per group element");
  const F& f = right.front().field();
  const std::size_t m = right.front().rows(), n = left.front().rows();
  RowSpace<F> relations(f, m * n);
  for (std::size_t g = 0; g < right.size(); ++g)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<typename F::Element> v(m * n, f.zero());
        for (std::size_t a = 0; a < m; ++a) v[a * n + j] = f.add(v[a * n + j], right[g](a, i));
        for (std::size_t b = 0; b < n; ++b) v[i * n + b] = f.sub(v[i * n + b], left[g](b, j));
        relations.insert(std::move(v));
      }
  return m * n - relations.dim();
}

template <class F>
ColumnModule<F> build_i_t(const TriangularPresentation& tp, std::size_t t, const ModuleRep<F>& a) {
  check_position(tp, t);
  check_vertex_module(tp, t, a.action.size());
  const F& f = a.field;
  const auto& p = tp.presentation();
  const auto& c = tp.category();
  const auto local = local_indices(c);
  const auto act = dense_actions(a);
  const std::size_t da = a.dim, n = tp.size();

  std::vector<QuotientSpace<F>> slots;
  ColumnModule<F> out{f, {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    const auto& h = p.hom(t, j);
    RowSpace<F> rel(f, h.size() * da);
    for (MorphismId beta : h)
      for (std::size_t g = 0; g < act.size(); ++g) {
        const MorphismId bh = c.compose(beta, p.aut_element(t, g));
        for (std::size_t r = 0; r < da; ++r) {
          // (β∘h) ⊗ a_r - β ⊗ (h·a_r)
          std::vector<typename F::Element> v(h.size() * da, f.zero());
          v[local[bh] * da + r] = f.add(v[local[bh] * da + r], f.one());
          for (std::size_t s = 0; s < da; ++s)
            v[local[beta] * da + s] = f.sub(v[local[beta] * da + s], act[g](s, r));
          rel.insert(std::move(v));
        }
      }
    slots.emplace_back(std::move(rel));
    out.dims.push_back(slots.back().dim());
  }

  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const std::size_t l = p.position(c.src(m)), j = p.position(c.dst(m));
    Matrix<F> map(f, out.dims[j], out.dims[l]);
    const auto& hl = p.hom(t, l);
    for (std::size_t col = 0; col < out.dims[l]; ++col) {
      const std::size_t rep = slots[l].representative(col);
      const MorphismId image = c.compose(m, hl[rep / da]);
      std::vector<typename F::Element> v(slots[j].ambient(), f.zero());
      v[local[image] * da + rep % da] = f.one();
      const auto coords = slots[j].project(std::move(v));
      for (std::size_t row = 0; row < coords.size(); ++row) map(row, col) = coords[row];
    }
    out.maps.push_back(std::move(map));
  }
  return out;
}

template <class F>
ColumnModule<F> build_j_t(const TriangularPresentation& tp, std::size_t t, const ModuleRep<F>& a) {
  check_position(tp, t);
  check_vertex_module(tp, t, a.action.size());
  const F& f = a.field;
  const auto& p = tp.presentation();
  const auto& c = tp.category();
  const auto local = local_indices(c);
  const auto act = dense_actions(a);
  const std::size_t da = a.dim, n = tp.size();

  std::vector<RowSpace<F>> slots;
  ColumnModule<F> out{f, {}, {}};
  for (std::size_t j = 0; j < n; ++j) {
    const auto& h = p.hom(j, t);
    const std::size_t amb = h.size() * da;
    RowSpace<F> space(f, amb);
    if (amb > 0) {
      // F(h∘γ) = h·F(γ)
      std::vector<std::vector<typename F::Element>> rows;
      for (std::size_t g = 0; g < act.size(); ++g)
        for (MorphismId gamma : h) {
          const MorphismId hg = c.compose(p.aut_element(t, g), gamma);
          for (std::size_t r = 0; r < da; ++r) {
            std::vector<typename F::Element> v(amb, f.zero());
            v[local[hg] * da + r] = f.add(v[local[hg] * da + r], f.one());
            for (std::size_t s = 0; s < da; ++s)
              v[local[gamma] * da + s] = f.sub(v[local[gamma] * da + s], act[g](r, s));
            rows.push_back(std::move(v));
          }
        }
      for (auto& k : kernel_basis(Matrix<F>::from_rows(f, rows, amb))) space.insert(std::move(k));
    }
    out.dims.push_back(space.dim());
    slots.push_back(std::move(space));
  }

  for (MorphismId m = 0; m < c.morphism_count(); ++m) {
    const std::size_t j = p.position(c.src(m)), l = p.position(c.dst(m));
    Matrix<F> map(f, out.dims[l], out.dims[j]);
    const auto& hl = p.hom(l, t);
    for (std::size_t col = 0; col < out.dims[j]; ++col) {
      const auto& fn = slots[j].basis()[col];
      // (β·F)(γ) = F(γ∘β)
      std::vector<typename F::Element> image(hl.size() * da, f.zero());
      for (std::size_t k = 0; k < hl.size(); ++k) {
        const MorphismId gb = c.compose(hl[k], m);
        for (std::size_t r = 0; r < da; ++r) image[k * da + r] = fn[local[gb] * da + r];
      }
      const auto coords = slots[l].coordinates(image);
      for (std::size_t row = 0; row < coords.size(); ++row) map(row, col) = coords[row];
    }
    out.maps.push_back(std::move(map));
  }
  return out;
}

template <class F>
MStarModule<F> build_m_star(const TriangularPresentation& tp, std::size_t t, const F& field) {
  check_mstar_index(tp, t);
  TriangularPresentation sub = tp.leading(t);
  const auto& p = tp.presentation();
  const auto& c = tp.category();
  const auto local = local_indices(c);
  ColumnModule<F> out{field, {}, {}};
  for (std::size_t i = 0; i < t; ++i) out.dims.push_back(p.hom(t, i).size());
  const auto& sc = sub.category();
  for (MorphismId m = 0; m < sc.morphism_count(); ++m) {
    const MorphismId parent = sub.parent_ids()[m];
    const std::size_t l = p.position(c.src(parent)), j = p.position(c.dst(parent));
    Matrix<F> map(field, out.dims[j], out.dims[l]);
    for (MorphismId alpha : p.hom(t, l)) map(local[c.compose(parent, alpha)], local[alpha]) = field.one();
    out.maps.push_back(std::move(map));
  }
  return MStarModule<F>{t, std::move(sub), std::move(out)};
}

std::size_t m_star_dim(const TriangularPresentation& tp, std::size_t t) {
  check_mstar_index(tp, t);
  std::size_t d = 0;
  for (std::size_t i = 0; i < t; ++i) d += tp.presentation().hom(t, i).size();
  return d;
}

std::size_t phi_domain_dim(const TriangularPresentation& tp, std::size_t t) {
  check_mstar_index(tp, t);
  return with_field(tp.field(), [&](auto field) {
    using F = decltype(field);
    const TriangularPresentation sub = tp.leading(t);
    const UnfactorizableTable u(tp.presentation());
    const auto& c = tp.category();
    std::size_t total = 0;
    for (std::size_t l = 0; l < t; ++l) {
      const auto& h0 = u.hom0(t, l);
      std::vector<std::size_t> index(c.morphism_count(), 0);
      for (std::size_t k = 0; k < h0.size(); ++k) index[h0[k]] = k;
      ModuleRep<F> m{field, h0.size(), {}};
      for (std::size_t g = 0; g < sub.presentation().aut(l).order(); ++g) {
        const MorphismId h = sub.parent_ids()[sub.presentation().aut_element(l, g)];
        SparseMatrix<F> s(h0.size(), h0.size());
        for (std::size_t k = 0; k < h0.size(); ++k) s.set_column(k, {{index[c.compose(h, h0[k])], field.one()}});
        m.action.push_back(std::move(s));
      }
      total += build_i_t(sub, l, m).total_dim();
    }
    return total;
  });
}

bool is_mstar_projective(const TriangularPresentation& tp, std::size_t t) {
  check_mstar_index(tp, t);
  if (!is_projective_over(tp.presentation(), tp.field()).projective)
    throw HypothesisViolated("the category is not projective over this field");
  return phi_domain_dim(tp, t) == m_star_dim(tp, t);
}

template <class F>
ModuleRep<F> column_to_rep(const TriangularPresentation& tp, const ColumnModule<F>& m) {
  const auto& p = tp.presentation();
  const auto& c = tp.category();
  const F& f = m.field;
  if (m.dims.size() != tp.size() || m.maps.size() != c.morphism_count())
    throw IncompatibleMaps("module needs one component per object and one map per morphism");
  for (MorphismId a = 0; a < c.morphism_count(); ++a) {
    const std::size_t s = p.position(c.src(a)), d = p.position(c.dst(a));
    if (m.maps[a].rows() != m.dims[d] || m.maps[a].cols() != m.dims[s])
      throw IncompatibleMaps("map of '" + c.morphism_name(a) + "' has the wrong shape");
    if (c.is_identity(a) && !(m.maps[a] == Matrix<F>::identity(f, m.dims[s])))
      throw IncompatibleMaps("identity '" + c.morphism_name(a) + "' does not act as the identity");
  }
  for (MorphismId a = 0; a < c.morphism_count(); ++a)
    for (MorphismId b = 0; b < c.morphism_count(); ++b) {
      const MorphismId ab = c.compose(a, b);
      if (ab == kNoMorphism) continue;
      if (!(m.maps[ab] == m.maps[a] * m.maps[b]))
        throw IncompatibleMaps("maps of '" + c.morphism_name(a) + "' and '" + c.morphism_name(b) +
                               "' do not compose to the map of their composite");
    }

  std::vector<std::size_t> offset(tp.size() + 1, 0);
  for (std::size_t i = 0; i < tp.size(); ++i) offset[i + 1] = offset[i] + m.dims[i];
  const std::size_t total = offset.back();
  ModuleRep<F> rep{f, total, {}};
  for (MorphismId a : tp.basis()) {
    const std::size_t s = p.position(c.src(a)), d = p.position(c.dst(a));
    SparseMatrix<F> act(total, total);
    const auto& blk = m.maps[a];
    for (std::size_t col = 0; col < blk.cols(); ++col) {
      std::vector<typename SparseMatrix<F>::Entry> entries;
      for (std::size_t row = 0; row < blk.rows(); ++row)
        if (!f.is_zero(blk(row, col))) entries.emplace_back(offset[d] + row, blk(row, col));
      act.set_column(offset[s] + col, std::move(entries));
    }
    rep.action.push_back(std::move(act));
  }
  return rep;
}

template <class F>
ModuleRep<F> restrict_to_vertex(const TriangularPresentation& tp, const ColumnModule<F>& m, std::size_t i) {
  check_position(tp, i);
  ModuleRep<F> rep{m.field, m.dims.at(i), {}};
  for (std::size_t g = 0; g < tp.presentation().aut(i).order(); ++g)
    rep.action.push_back(SparseMatrix<F>::from_dense(m.maps.at(tp.presentation().aut_element(i, g))));
  return rep;
}

template <class F>
ModuleRep<F> vertex_regular(const TriangularPresentation& tp, std::size_t t, const F& field) {
  return regular_module(vertex_algebra(tp, t, field));
}

template <class F>
ModuleRep<F> vertex_injective(const TriangularPresentation& tp, std::size_t t, const F& field) {
  check_position(tp, t);
  const auto& g = tp.presentation().aut(t);
  const std::size_t n = g.order();
  ModuleRep<F> m{field, n, {}};
  for (std::size_t x = 0; x < n; ++x) {
    // (x·φ)(y) = φ(y x): transpose of right multiplication by x
    SparseMatrix<F> right(n, n);
    for (std::size_t y = 0; y < n; ++y) right.set_column(y, {{g.mul(y, x), field.one()}});
    m.action.push_back(right.transpose());
  }
  return m;
}

#define EICAT_INSTANTIATE(F)                                                                                    \
  template FiniteDimAlgebra<F> triangular_algebra(const TriangularPresentation&, const F&);                    \
  template FiniteDimAlgebra<F> vertex_algebra(const TriangularPresentation&, std::size_t, const F&);           \
  template std::size_t tensor_dim(const std::vector<Matrix<F>>&, const std::vector<Matrix<F>>&);               \
  template ColumnModule<F> build_i_t(const TriangularPresentation&, std::size_t, const ModuleRep<F>&);         \
  template ColumnModule<F> build_j_t(const TriangularPresentation&, std::size_t, const ModuleRep<F>&);         \
  template MStarModule<F> build_m_star(const TriangularPresentation&, std::size_t, const F&);                  \
  template ModuleRep<F> column_to_rep(const TriangularPresentation&, const ColumnModule<F>&);                  \
  template ModuleRep<F> restrict_to_vertex(const TriangularPresentation&, const ColumnModule<F>&, std::size_t); \
  template ModuleRep<F> vertex_regular(const TriangularPresentation&, std::size_t, const F&);                  \
  template ModuleRep<F> vertex_injective(const TriangularPresentation&, std::size_t, const F&);

EICAT_INSTANTIATE(PrimeField)
EICAT_INSTANTIATE(RationalField)

}  // namespace eicat
