#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eicat/algebra.hpp"

// Implemented for PrimeField and RationalField only.

namespace eicat {

class RadicalVerificationFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ZaksViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Either an exact dimension <= cap or ">cap".
struct DimensionVerdict {
  std::optional<std::size_t> value;
  std::size_t cap = 8;

  bool finite() const { return value.has_value(); }
  bool at_most(std::size_t m) const { return value && *value <= m; }
  std::string to_string() const { return value ? std::to_string(*value) : ">" + std::to_string(cap); }
  friend bool operator==(const DimensionVerdict&, const DimensionVerdict&) = default;
};

/// Jacobson radical as a subspace of the algebra. Char 0: kernel of the trace form;
/// char p: iterated p-power trace refinement. The result is always checked to be nilpotent.
template <class F>
RowSpace<F> radical(const FiniteDimAlgebra<F>& a);

/// Left module a / rad(a).
template <class F>
ModuleRep<F> top_module(const FiniteDimAlgebra<F>& a, const RowSpace<F>& rad);
template <class F>
ModuleRep<F> top_module(const FiniteDimAlgebra<F>& a);

template <class F>
struct ResolutionDegree {
  /// Idempotent index of each generator; P_i is the sum of the A·e over generators.
  std::vector<std::size_t> types;
  /// Image of each generator: in the resolved module for i = 0, else in P_{i-1}.
  std::vector<std::vector<typename F::Element>> images;
  std::size_t dim = 0;            // dim P_i
  std::size_t target_dim = 0;     // dim of the module P_i covers
  std::size_t boundary_rank = 0;  // rank of P_i -> target
  std::size_t kernel_dim = 0;     // dim of the next syzygy
};

template <class F>
struct ResolutionTrace {
  std::vector<ResolutionDegree<F>> degrees;
  /// True when a zero syzygy was reached, so the resolution is finite.
  bool complete = false;

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& d : degrees) r.push_back(d.types.size());
    return r;
  }
  /// Every boundary is onto its target and rank + nullity matches.
  bool exact() const {
    for (const auto& d : degrees)
      if (d.boundary_rank != d.target_dim || d.boundary_rank + d.kernel_dim != d.dim) return false;
    return true;
  }
};

/// All homological computations over one algebra share its projective summands A·e and its radical.
template <class F>
class HomologicalOracle {
 public:
  using Element = typename F::Element;

  explicit HomologicalOracle(FiniteDimAlgebra<F> a);
  /// Reuses a radical known for this algebra (e.g. from the opposite algebra).
  HomologicalOracle(FiniteDimAlgebra<F> a, RowSpace<F> rad);

  const FiniteDimAlgebra<F>& algebra() const { return algebra_; }
  const RowSpace<F>& radical() const { return radical_; }
  const ModuleRep<F>& top() const { return top_; }
  ModuleRep<F> regular() const { return regular_module(algebra_); }

  /// Projective resolution P_0, ..., P_max_degree of m (shorter if it terminates).
  /// Generators lift a basis of m_i / rad m_i; `seed` varies the choice.
  ResolutionTrace<F> resolve(const ModuleRep<F>& m, std::size_t max_degree, std::uint64_t seed = 0) const;

  /// dim Ext^i(m, n) for i = 0..upto, from a resolution of m reaching degree upto + 1.
  std::vector<std::size_t> ext_dims(const ResolutionTrace<F>& trace, const ModuleRep<F>& n, std::size_t upto) const;
  std::vector<std::size_t> ext_dims(const ModuleRep<F>& m, const ModuleRep<F>& n, std::size_t upto,
                                    std::uint64_t seed = 0) const;

  /// d_{i-1} ∘ d_i = 0 on every generator, and d_0 lands in m.
  bool boundaries_compose_to_zero(const ModuleRep<F>& m, const ResolutionTrace<F>& trace) const;

  /// max{i : Ext^i(m, top) != 0}, ">cap" if Ext^{cap+1}(m, top) != 0.
  DimensionVerdict projective_dimension(const ModuleRep<F>& m, std::size_t cap) const;
  /// max{i : Ext^i(top, m) != 0}, ">cap" if Ext^{cap+1}(top, m) != 0.
  DimensionVerdict injective_dimension(const ModuleRep<F>& m, std::size_t cap) const;
  DimensionVerdict self_injective_dimension(std::size_t cap) const;
  DimensionVerdict global_dimension(std::size_t cap) const;

  struct Dimensions {
    DimensionVerdict self_injective;
    DimensionVerdict global;
  };
  /// Both verdicts from a single resolution of top.
  Dimensions dimensions(std::size_t cap) const;

  /// Ext^1(m, top) = 0.
  bool is_projective(const ModuleRep<F>& m) const;

  /// Number of projective summands A·e (one per idempotent).
  std::size_t summand_count() const { return summands_.size(); }
  std::size_t summand_dim(std::size_t k) const { return summands_[k].basis.size(); }

 private:
  struct Summand {
    std::vector<std::vector<Element>> basis;  // vectors of A spanning A·e
    std::vector<SparseMatrix<F>> action;      // b_i on A·e, in basis coordinates
  };

  void build_summands();
  std::vector<std::size_t> ext_from_top(const ResolutionTrace<F>& trace, const ModuleRep<F>& n, std::size_t upto) const;

  FiniteDimAlgebra<F> algebra_;
  RowSpace<F> radical_;
  ModuleRep<F> top_;
  std::vector<Summand> summands_;
};

enum class Side { Left, Right };

template <class F>
DimensionVerdict injective_dimension(const FiniteDimAlgebra<F>& a, Side side, std::size_t cap);
template <class F>
DimensionVerdict global_dimension(const FiniteDimAlgebra<F>& a, std::size_t cap);
template <class F>
DimensionVerdict projective_dimension(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m, std::size_t cap);
template <class F>
bool is_module_projective(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m);
template <class F>
ResolutionTrace<F> free_resolution(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m, std::size_t cap,
                                   std::uint64_t seed = 0);
template <class F>
std::vector<std::size_t> ext_dims(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& n, const ModuleRep<F>& m,
                                  std::size_t cap, std::uint64_t seed = 0);

struct GorensteinVerdict {
  bool gorenstein = false;  // both sides finite within the cap
  DimensionVerdict left;
  DimensionVerdict right;
  DimensionVerdict global;
};

/// Self-injective dimension on both sides and global dimension. Throws ZaksViolation
/// if both sides are finite but differ.
template <class F>
GorensteinVerdict is_gorenstein_oracle(const FiniteDimAlgebra<F>& a, std::size_t cap);

}  // namespace eicat
