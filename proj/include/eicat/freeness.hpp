#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eicat/presentation.hpp"

namespace eicat {

/// Unfactorizable morphisms: non-isomorphisms α such that every factorization
/// α = γ∘β has β or γ an isomorphism.
class UnfactorizableTable {
 public:
  explicit UnfactorizableTable(const Presentation& p);

  bool contains(MorphismId f) const { return flags_.at(f); }
  /// Hom⁰(x_from, x_to), in morphism order.
  const std::vector<MorphismId>& hom0(std::size_t from_pos, std::size_t to_pos) const {
    return hom0_.at(from_pos * n_ + to_pos);
  }

 private:
  std::size_t n_;
  std::vector<bool> flags_;
  std::vector<std::vector<MorphismId>> hom0_;
};

UnfactorizableTable unfactorizables(const Presentation& p);

class IsIsomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shortest chain α_1, ..., α_m of unfactorizables with α = α_m∘...∘α_1, the first
/// found in morphism-index scan order. Throws IsIsomorphism for an isomorphism.
std::vector<MorphismId> decompose(const Presentation& p, const UnfactorizableTable& u, MorphismId alpha);

/// α = second∘first with `first` unfactorizable.
struct TwoStep {
  MorphismId first;
  MorphismId second;
};

struct FreenessCounterexample {
  MorphismId morphism;
  TwoStep a;
  TwoStep b;
};

struct FreeFrom {
  bool free = true;
  std::optional<FreenessCounterexample> counterexample;
};

/// Whether any two factorizations α = α_2∘α_1 = β_2∘β_1 of a non-isomorphism out of x,
/// with α_1, β_1 unfactorizable, pass through the same object and differ by an automorphism there.
FreeFrom is_free_from(const Presentation& p, const UnfactorizableTable& u, ObjectId x);
FreeFrom is_free_from(const Presentation& p, ObjectId x);

struct FreenessReport {
  bool free = true;
  std::vector<bool> free_from;  // indexed by object id
  std::optional<FreenessCounterexample> counterexample;
};

FreenessReport is_free(const Presentation& p);

/// Brute-force unique factorization check over all maximal decompositions, independent of is_free.
bool ufp_direct(const Presentation& p);

/// Whether Hom(x_j, x_i) is the disjoint union over i <= l < j of Hom(x_l, x_i)∘Hom⁰(x_j, x_l).
/// Positions are 0-based; requires i < j.
bool disjoint_union_holds(const Presentation& p, const UnfactorizableTable& u, std::size_t i, std::size_t j);

}  // namespace eicat
