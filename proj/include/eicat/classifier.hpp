#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eicat/category.hpp"
#include "eicat/field.hpp"
#include "eicat/oracle.hpp"
#include "eicat/presentation.hpp"

namespace eicat {

struct StabilizerWitness {
  std::string morphism;
  std::size_t left = 1;
  std::size_t right = 1;
};

/// morphism = second_a∘first_a = second_b∘first_b with no automorphism relating the two.
struct FactorizationWitness {
  std::string morphism;
  std::string first_a, second_a;
  std::string first_b, second_b;
};

/// One row per t = 1..n-1.
struct MStarEntry {
  std::size_t t = 0;
  std::size_t dim = 0;             // dim M_t^*
  std::size_t phi_domain_dim = 0;  // dim of the projective cover's domain
  /// Set only when the category is projective (otherwise the dimension count is not a test).
  std::optional<bool> projective;
};

struct ClassificationReport {
  std::uint32_t characteristic = 0;
  bool is_ei = true;
  bool is_skeletal = true;
  /// Skeleton objects x_1..x_n (morphisms go from later to earlier entries).
  std::vector<std::string> ordering;
  std::vector<std::size_t> aut_orders;  // per ordering entry

  bool projective = true;
  std::vector<StabilizerWitness> projectivity_witnesses;
  bool free = true;
  std::optional<FactorizationWitness> freeness_counterexample;

  bool gorenstein = false;
  bool one_gorenstein = false;
  bool zero_gorenstein = false;
  bool hereditary = false;
  /// Upper bound on the self-injective dimension; absent unless every M_t^* is projective.
  std::optional<std::size_t> gorenstein_dim_bound;
  std::vector<MStarEntry> m_star;
};

/// Skeletalizes c, orders it (ties by `priority` over skeleton objects when given) and decides all flags.
/// Throws OrderError (NotEI) for non-EI input.
ClassificationReport classify(const FiniteCategory& c, const FieldSpec& field,
                              std::span<const ObjectId> priority = {});
ClassificationReport classify(const Presentation& p, const FieldSpec& field);

/// Iterated two-vertex refinement over leading blocks: d' = d_1, then d' = max(d', d_i) if they differ,
/// else d' + 1. Throws HypothesisViolated unless mstar_projective; std::invalid_argument on empty d.
std::size_t gorenstein_bound(std::span<const std::size_t> d, bool mstar_projective);

/// Flag-by-flag comparison with measured dimensions: gorenstein against both sides finite,
/// one_gorenstein against both sides <= 1, hereditary against gldim <= 1.
struct OracleAgreement {
  bool gorenstein = true;
  bool one_gorenstein = true;
  bool hereditary = true;
  bool all() const { return gorenstein && one_gorenstein && hereditary; }
};

OracleAgreement compare_with_oracle(const ClassificationReport& r, const GorensteinVerdict& v);

}  // namespace eicat
