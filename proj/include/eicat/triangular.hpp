#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eicat/algebra.hpp"
#include "eicat/field.hpp"
#include "eicat/presentation.hpp"

// Template functions are implemented for PrimeField and RationalField only.

namespace eicat {

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class HypothesisViolated : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IncompatibleMaps : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The upper triangular matrix form of the category algebra: vertex algebras R_i = k Aut(x_i),
/// bimodules M_ij = k Hom(x_j, x_i) for i < j, products by composition. Positions are 0-based.
class TriangularPresentation {
 public:
  TriangularPresentation(Presentation p, FieldSpec field);

  const Presentation& presentation() const { return presentation_; }
  const FiniteCategory& category() const { return presentation_.category(); }
  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return presentation_.size(); }

  /// Basis of M_ij = Hom(x_j, x_i); for i == j the automorphisms of x_i.
  const std::vector<MorphismId>& block(std::size_t i, std::size_t j) const { return presentation_.hom(j, i); }
  /// Algebra basis: blocks (i, j), i <= j, row by row.
  const std::vector<MorphismId>& basis() const { return basis_; }
  std::size_t basis_index(MorphismId f) const { return basis_index_.at(f); }
  std::size_t total_dim() const { return basis_.size(); }

  /// ψ associativity on all composable basis triples.
  bool psi_associative() const;

  /// Γ_t on the first t positions (1 <= t <= n).
  TriangularPresentation leading(std::size_t t) const;
  /// For a leading sub-presentation: morphism id in the parent category of each morphism.
  const std::vector<MorphismId>& parent_ids() const { return parent_ids_; }

 private:
  Presentation presentation_;
  FieldSpec field_;
  std::vector<MorphismId> basis_;
  std::vector<std::size_t> basis_index_;
  std::vector<MorphismId> parent_ids_;
};

TriangularPresentation build_triangular(const Presentation& p, const FieldSpec& field);

/// Γ as structure constants over F, basis in TriangularPresentation::basis() order, idempotents
/// the identities in position order.
template <class F>
FiniteDimAlgebra<F> triangular_algebra(const TriangularPresentation& tp, const F& field);

/// R_t = k Aut(x_t), basis = group elements in Presentation::aut order.
template <class F>
FiniteDimAlgebra<F> vertex_algebra(const TriangularPresentation& tp, std::size_t t, const F& field);

/// A left Γ-module as components X_i with one structure map per morphism f: x_l -> x_j,
/// a matrix X_l -> X_j. Identities and automorphisms are included, so the R_i-actions are part of it.
template <class F>
struct ColumnModule {
  F field;
  std::vector<std::size_t> dims;  // by position
  std::vector<Matrix<F>> maps;    // by morphism id

  std::size_t total_dim() const {
    std::size_t d = 0;
    for (auto x : dims) d += x;
    return d;
  }
};

/// dim M ⊗_R N for a right R-module M (matrix of x -> x·g per group element) and a left R-module N.
template <class F>
std::size_t tensor_dim(const std::vector<Matrix<F>>& right, const std::vector<Matrix<F>>& left);

/// i_t(A): slot j is k Hom(x_t, x_j) ⊗_{R_t} A. A is a module over vertex_algebra(tp, t).
template <class F>
ColumnModule<F> build_i_t(const TriangularPresentation& tp, std::size_t t, const ModuleRep<F>& a);

/// j_t(A): slot j is Hom_{R_t}(k Hom(x_j, x_t), A).
template <class F>
ColumnModule<F> build_j_t(const TriangularPresentation& tp, std::size_t t, const ModuleRep<F>& a);

template <class F>
struct MStarModule {
  std::size_t t;                    // Γ_t acts; components come from x_{t+1} (position t)
  TriangularPresentation gamma_t;   // leading(t)
  ColumnModule<F> module;
};

/// M_t^*: components k Hom(x_{t+1}, x_i), i < t, over Γ_t. Requires 1 <= t <= n-1.
template <class F>
MStarModule<F> build_m_star(const TriangularPresentation& tp, std::size_t t, const F& field);

/// dim M_t^* = sum of |Hom(x_{t+1}, x_i)|.
std::size_t m_star_dim(const TriangularPresentation& tp, std::size_t t);

/// Sum over l < t of dim i_l(M⁰_{l,t+1}) over Γ_t: the domain of the projective cover of M_t^*.
std::size_t phi_domain_dim(const TriangularPresentation& tp, std::size_t t);

/// Φ is an isomorphism iff the dimensions agree. Throws HypothesisViolated unless the
/// category is projective over the field.
bool is_mstar_projective(const TriangularPresentation& tp, std::size_t t);

/// Checks functoriality of the maps; throws IncompatibleMaps, then assembles the module over
/// triangular_algebra(tp).
template <class F>
ModuleRep<F> column_to_rep(const TriangularPresentation& tp, const ColumnModule<F>& m);

/// Component X_i as a module over vertex_algebra(tp, i).
template <class F>
ModuleRep<F> restrict_to_vertex(const TriangularPresentation& tp, const ColumnModule<F>& m, std::size_t i);

/// Column t of Γ (= i_t(R_t)) and the injective R_t-module D(R_t), as modules over vertex_algebra(tp, t).
template <class F>
ModuleRep<F> vertex_regular(const TriangularPresentation& tp, std::size_t t, const F& field);
template <class F>
ModuleRep<F> vertex_injective(const TriangularPresentation& tp, std::size_t t, const F& field);

}  // namespace eicat
