#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eicat/category.hpp"
#include "eicat/group.hpp"

namespace eicat {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite partial order; relation pairs are closed reflexively and transitively on construction.
class Poset {
 public:
  /// Throws PosetError on unknown names or if the closure is not antisymmetric.
  Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& relations);

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);
  /// {x < y1, y2 < w}
  static Poset diamond();

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y]; }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Strict relations x < y (covering or not), in lexicographic index order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

 private:
  Poset(std::vector<std::string> elements, std::vector<bool> leq);

  std::vector<std::string> elements_;
  std::vector<bool> leq_;
};

/// Hom(x, y) = {x->y} iff x <= y. Identities are named "id_x".
FiniteCategory poset_category(const Poset& p);

/// Every closed interval [x, y] is totally ordered.
bool poset_is_free(const Poset& p);

class NotOrderPreserving : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Objects are the poset elements; morphisms x -> y are the g with g.x <= y, named "g:x->y".
/// The action's set must list the poset elements in the same order.
FiniteCategory transporter_category(const GroupAction& action, const Poset& p);

/// One object "*" whose morphisms are the group elements.
FiniteCategory group_category(const GroupTable& g, const std::string& object = "*");

/// Objects and morphisms are pairs "(a,b)", composed componentwise.
FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b);

class AssociativityFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Direct description of an EI category by automorphism groups, Hom-bisets and composition.
struct BisetSpec {
  struct Hom {
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> left;   // left[g][s] = g∘s, g in Aut(to)
    std::vector<std::vector<std::size_t>> right;  // right[s][h] = s∘h, h in Aut(from)
  };
  struct Composition {
    std::size_t outer = 0;  // index into homs, y -> z
    std::size_t inner = 0;  // index into homs, x -> y
    std::vector<std::vector<std::size_t>> table;  // table[t][s] = t∘s as an element of Hom(x, z)
  };

  std::vector<std::string> objects;
  std::vector<GroupTable> groups;
  std::vector<Hom> homs;  // at most one per ordered pair of distinct objects
  std::vector<Composition> compositions;
};

/// Throws AssociativityFailure if the data does not define a category (other defects raise CategoryError
/// or GroupError). Automorphisms are named "<object>:<element>".
FiniteCategory biset_category(const BisetSpec& spec);

/// Orbit-type EI category of G: objects G/H for the given subgroups, morphisms the G-maps.
/// Morphism G/H -> G/K is named "H->K:gK" for the coset representative g with g^-1 H g <= K.
FiniteCategory orbit_category(const GroupTable& g, const std::vector<std::vector<std::size_t>>& subgroups,
                              const std::vector<std::string>& names);

namespace examples {

/// x < y < z
FiniteCategory chain_a3();
/// {x < y1, y2 < w}
FiniteCategory diamond();
/// One object with automorphism group Z/2.
FiniteCategory z2();
/// x2 with Aut = Z/2, x1 trivial, Hom(x2, x1) = {a, a∘g}.
FiniteCategory regular_orbit();
/// x2 with Aut = Z/2, x1 trivial, Hom(x2, x1) = {a} with a∘g = a.
FiniteCategory stabilized_alpha();
/// Z/2 swapping y1 and y2 in the diamond.
GroupAction swap_action();
FiniteCategory swapped_diamond();

}  // namespace examples

struct CorpusLimits {
  std::size_t max_objects = 4;
  std::size_t max_group_order = 6;
  std::size_t max_hom = 8;
  std::size_t max_morphisms = 64;
};

struct CorpusEntry {
  std::string name;
  std::string family;  // named, poset, transporter, group, biset, orbit, product
  FiniteCategory category;
  /// For transporter entries: the underlying poset (poset families keep it too).
  std::optional<Poset> poset;
};

/// Deterministic stream: the named examples and the swapped diamond first, then pseudo-random draws from each family
/// in turn, discarding draws outside the limits.
std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count, const CorpusLimits& limits = {});

/// Groups available by name: trivial, Z2..Z6, V4, S3.
GroupTable named_group(const std::string& name);
std::vector<std::string> named_group_names();

}  // namespace eicat
