#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eicat {

using ObjectId = std::size_t;
using MorphismId = std::size_t;
inline constexpr MorphismId kNoMorphism = static_cast<MorphismId>(-1);

struct RawMorphism {
  std::string id;
  std::string src;
  std::string dst;
  bool identity = false;
};

/// Unvalidated category description, as read from JSON. Composition triples
/// (f, g, h) mean f∘g = h; triples involving identities may be omitted.
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;
  std::vector<std::array<std::string, 3>> composition;
};

enum class ViolationKind {
  MissingIdentity,
  DuplicateIdentity,
  DuplicateName,
  UnknownName,
  BadEndpoints,
  IncompleteComposition,
  ConflictingComposition,
  IdentityLaw,
  NonAssociative,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

/// Thrown by validate(); carries every violation that was found.
class CategoryError : public std::runtime_error {
 public:
  explicit CategoryError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A validated finite category. Immutable; composition is a dense table.
class FiniteCategory {
 public:
  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(ObjectId x) const { return objects_.at(x); }
  const std::string& morphism_name(MorphismId f) const { return morphisms_.at(f).name; }
  const std::vector<std::string>& object_names() const { return objects_; }

  ObjectId src(MorphismId f) const { return morphisms_[f].src; }
  ObjectId dst(MorphismId f) const { return morphisms_[f].dst; }
  MorphismId identity(ObjectId x) const { return identities_[x]; }
  bool is_identity(MorphismId f) const { return identities_[morphisms_[f].src] == f; }
  bool is_endomorphism(MorphismId f) const { return src(f) == dst(f); }

  /// f∘g; kNoMorphism when src(f) != dst(g).
  MorphismId compose(MorphismId f, MorphismId g) const { return table_[f * morphisms_.size() + g]; }

  /// Morphisms from -> to, in morphism order.
  const std::vector<MorphismId>& hom(ObjectId from, ObjectId to) const {
    return homs_[from * objects_.size() + to];
  }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<MorphismId> find_morphism(std::string_view name) const;

  /// Description with composition restricted to pairs of non-identities.
  RawCategory to_raw() const;

  friend FiniteCategory validate(const RawCategory& raw);
  friend FiniteCategory full_subcategory(const FiniteCategory& c, std::span<const ObjectId> objects);

 private:
  struct Morphism {
    std::string name;
    ObjectId src;
    ObjectId dst;
  };

  void index_homs();

  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<MorphismId> identities_;
  std::vector<MorphismId> table_;
  std::vector<std::vector<MorphismId>> homs_;
};

/// Checks identities, endpoints, totality, identity laws and associativity.
/// Throws CategoryError listing all violations.
FiniteCategory validate(const RawCategory& raw);

/// Full subcategory on the given objects (kept in the given order). Morphisms keep
/// their relative order.
FiniteCategory full_subcategory(const FiniteCategory& c, std::span<const ObjectId> objects);

/// Two-sided inverse of f, if any.
std::optional<MorphismId> inverse(const FiniteCategory& c, MorphismId f);

struct EICheck {
  bool ei = true;
  std::optional<MorphismId> witness;  // a non-invertible endomorphism
};

EICheck is_ei(const FiniteCategory& c);

bool is_skeletal(const FiniteCategory& c);

struct Skeleton {
  FiniteCategory category;
  /// original object -> object of the skeleton (its isomorphism class).
  std::vector<ObjectId> object_map;
  /// skeleton object -> original representative.
  std::vector<ObjectId> representatives;
};

/// One object per isomorphism class, the earliest in input order.
Skeleton skeletalize(const FiniteCategory& c);

}  // namespace eicat
