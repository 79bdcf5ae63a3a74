#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eicat/field.hpp"

namespace eicat {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group given by its full Cayley table. Elements are indexed 0..order-1.
class GroupTable {
 public:
  /// `table[g][h]` is the index of g·h. Throws GroupError on any axiom failure.
  GroupTable(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table,
             std::size_t identity);

  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  static GroupTable klein_four();
  static GroupTable symmetric3();
  /// Direct product, elements named "(a,b)".
  static GroupTable product(const GroupTable& a, const GroupTable& b);

  std::size_t order() const { return elements_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g * order() + h]; }
  std::size_t inv(std::size_t g) const { return inverse_[g]; }
  const std::string& name(std::size_t g) const { return elements_.at(g); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Subgroup generated by the given elements, as a sorted index list.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t>& gens) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.elements_ == b.elements_ && a.table_ == b.table_ && a.identity_ == b.identity_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::size_t> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

/// Left action of a group on a finite set: act(g, x) = g.x
class GroupAction {
 public:
  /// `act[g][x]` is the index of g.x. Throws GroupError unless the action axioms hold.
  GroupAction(GroupTable group, std::vector<std::string> set, std::vector<std::vector<std::size_t>> act);

  const GroupTable& group() const { return group_; }
  std::size_t size() const { return set_.size(); }
  const std::vector<std::string>& set() const { return set_; }
  std::size_t act(std::size_t g, std::size_t x) const { return act_[g * size() + x]; }
  std::optional<std::size_t> find(std::string_view name) const;

  std::vector<std::size_t> orbit(std::size_t x) const;
  /// Orbits listed by their least element, in increasing order of that element.
  std::vector<std::vector<std::size_t>> orbits() const;

 private:
  GroupTable group_;
  std::vector<std::string> set_;
  std::vector<std::size_t> act_;
};

/// |{g : g.x = x}|. Throws GroupError for an unknown element.
std::size_t stabilizer_order(const GroupAction& a, std::size_t x);
std::size_t stabilizer_order(const GroupAction& a, std::string_view x);

struct PermutationProjectivity {
  bool projective = true;
  /// Least element of each orbit whose stabilizer order is not invertible.
  std::vector<std::size_t> offending_orbits;
};

/// kX is projective over kG iff every stabilizer order is invertible in k.
PermutationProjectivity permutation_module_projective(const GroupAction& a, const FieldSpec& field);

/// A set with commuting left G- and right H-actions.
class BiSet {
 public:
  /// `left[g][s]` = g.s and `right[s][h]` = s.h
  BiSet(GroupTable left_group, GroupTable right_group, std::vector<std::string> set,
        std::vector<std::vector<std::size_t>> left, std::vector<std::vector<std::size_t>> right);

  const GroupTable& left_group() const { return left_group_; }
  const GroupTable& right_group() const { return right_group_; }
  std::size_t size() const { return set_.size(); }
  const std::vector<std::string>& set() const { return set_; }
  std::size_t left(std::size_t g, std::size_t s) const { return left_[g * size() + s]; }
  std::size_t right(std::size_t s, std::size_t h) const { return right_[s * right_group_.order() + h]; }

  /// The left action as a GroupAction, and the right action as a left action of H via h.s = s.h^{-1}.
  GroupAction left_action() const;
  GroupAction right_action() const;

 private:
  GroupTable left_group_;
  GroupTable right_group_;
  std::vector<std::string> set_;
  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
};

}  // namespace eicat
