#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eicat/category.hpp"
#include "eicat/group.hpp"

namespace eicat {

class OrderError : public std::runtime_error {
 public:
  enum class Kind { NotEI, NotSkeletal, NotAdmissible };
  OrderError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A skeletal EI category with objects ordered x_1..x_n so that Hom(x_i, x_j) is
/// empty for i < j. Positions are 0-based: position p holds x_{p+1}.
class Presentation {
 public:
  const FiniteCategory& category() const { return category_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<ObjectId>& ordering() const { return order_; }
  ObjectId object(std::size_t pos) const { return order_.at(pos); }
  std::size_t position(ObjectId x) const { return position_.at(x); }

  /// Morphisms x_from -> x_to.
  const std::vector<MorphismId>& hom(std::size_t from_pos, std::size_t to_pos) const {
    return category_.hom(order_[from_pos], order_[to_pos]);
  }

  const GroupTable& aut(std::size_t pos) const { return aut_.at(pos); }
  /// Morphism realizing group element g of Aut(x_pos).
  MorphismId aut_element(std::size_t pos, std::size_t g) const { return aut_elements_.at(pos).at(g); }
  /// Group element index of an endomorphism.
  std::size_t aut_index(MorphismId f) const { return aut_index_.at(f); }

  /// Hom(x_j, x_i) with left Aut(x_i)- and right Aut(x_j)-actions by composition.
  BiSet hom_biset(std::size_t i, std::size_t j) const;

  friend Presentation presentation_with_order(const FiniteCategory& c, std::vector<ObjectId> ordering);
  friend Presentation admissible_order(const FiniteCategory& c, std::span<const ObjectId> priority);

 private:
  Presentation(FiniteCategory c, std::vector<ObjectId> order);

  FiniteCategory category_;
  std::vector<ObjectId> order_;
  std::vector<std::size_t> position_;
  std::vector<GroupTable> aut_;
  std::vector<std::vector<MorphismId>> aut_elements_;
  std::vector<std::size_t> aut_index_;
};

/// Topological order with morphisms flowing from higher to lower positions; ties go to
/// the earliest object in input order. Throws OrderError (NotEI / NotSkeletal).
Presentation admissible_order(const FiniteCategory& c);

/// As above, but ties go to the object listed first in `priority` (a permutation of objects).
Presentation admissible_order(const FiniteCategory& c, std::span<const ObjectId> priority);

/// Uses the given ordering; throws OrderError::NotAdmissible if some Hom(x_i, x_j), i < j, is nonempty.
Presentation presentation_with_order(const FiniteCategory& c, std::vector<ObjectId> ordering);

}  // namespace eicat
