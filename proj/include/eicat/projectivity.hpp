#pragma once

#include <cstddef>
#include <vector>

#include "eicat/field.hpp"
#include "eicat/presentation.hpp"

namespace eicat {

struct StabilizerOrders {
  std::size_t left = 1;   // |{g in Aut(dst) : g∘α = α}|
  std::size_t right = 1;  // |{h in Aut(src) : α∘h = α}|
  friend bool operator==(const StabilizerOrders&, const StabilizerOrders&) = default;
};

/// Orders of the left and right stabilizers of a non-endomorphism.
StabilizerOrders morphism_stabilizers(const Presentation& p, MorphismId alpha);

struct ProjectivityWitness {
  MorphismId morphism;
  StabilizerOrders orders;
};

struct ProjectivityReport {
  bool projective = true;
  /// One morphism per violating Aut(dst) x Aut(src)-orbit.
  std::vector<ProjectivityWitness> witnesses;
};

/// Every Hom-biset linearizes to a projective module on both sides iff every
/// stabilizer order is invertible in the field.
ProjectivityReport is_projective_over(const Presentation& p, const FieldSpec& field);

}  // namespace eicat
