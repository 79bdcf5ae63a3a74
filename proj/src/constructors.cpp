#include "eicat/constructors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace eicat {

// ---- posets ----

Poset::Poset(std::vector<std::string> elements, std::vector<bool> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {}

Poset::Poset(std::vector<std::string> elements, const std::vector<std::pair<std::string, std::string>>& relations)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  std::set<std::string> seen(elements_.begin(), elements_.end());
  if (seen.size() != n) throw PosetError("poset: duplicate element name");
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  for (const auto& [a, b] : relations) {
    auto x = find(a), y = find(b);
    if (!x || !y) throw PosetError("poset: unknown element in relation (" + a + ", " + b + ")");
    leq_[*x * n + *y] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i * n + j] && leq_[j * n + i])
        throw PosetError("poset: not antisymmetric, " + elements_[i] + " and " + elements_[j] + " are equivalent");
}

Poset Poset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    if (i > 0) rel.emplace_back(names[i - 1], names[i]);
  }
  return Poset(std::move(names), rel);
}

Poset Poset::antichain(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  return Poset(std::move(names), std::vector<std::pair<std::string, std::string>>{});
}

Poset Poset::diamond() {
  return Poset({"x", "y1", "y2", "w"}, {{"x", "y1"}, {"x", "y2"}, {"y1", "w"}, {"y2", "w"}});
}

std::optional<std::size_t> Poset::find(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

FiniteCategory poset_category(const Poset& p) {
  RawCategory raw;
  raw.objects = p.elements();
  auto name = [&](std::size_t x, std::size_t y) {
    return x == y ? "id_" + p.elements()[x] : p.elements()[x] + "->" + p.elements()[y];
  };
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) raw.morphisms.push_back({name(x, y), p.elements()[x], p.elements()[y], x == y});
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      for (std::size_t z = 0; z < p.size(); ++z)
        if (x != y && y != z && p.leq(x, y) && p.leq(y, z)) raw.composition.push_back({name(y, z), name(x, y), name(x, z)});
  return validate(raw);
}

bool poset_is_free(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (!p.leq(x, y)) continue;
      std::vector<std::size_t> interval;
      for (std::size_t z = 0; z < p.size(); ++z)
        if (p.leq(x, z) && p.leq(z, y)) interval.push_back(z);
      for (auto a : interval)
        for (auto b : interval)
          if (!p.leq(a, b) && !p.leq(b, a)) return false;
    }
  return true;
}

// ---- groups and bisets ----

FiniteCategory transporter_category(const GroupAction& action, const Poset& p) {
  if (action.set() != p.elements())
    throw std::invalid_argument("transporter_category: the action must be on the poset's elements, in order");
  const GroupTable& g = action.group();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (p.leq(x, y) && !p.leq(action.act(a, x), action.act(a, y)))
          throw NotOrderPreserving("NotOrderPreserving: '" + g.name(a) + "' does not preserve " + p.elements()[x] +
                                   " <= " + p.elements()[y]);
  RawCategory raw;
  raw.objects = p.elements();
  auto name = [&](std::size_t a, std::size_t x, std::size_t y) {
    return g.name(a) + ":" + p.elements()[x] + "->" + p.elements()[y];
  };
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      for (std::size_t a = 0; a < g.order(); ++a)
        if (p.leq(action.act(a, x), y))
          raw.morphisms.push_back({name(a, x, y), p.elements()[x], p.elements()[y], x == y && a == g.identity()});
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      for (std::size_t a = 0; a < g.order(); ++a) {
        if (!p.leq(action.act(a, x), y) || (x == y && a == g.identity())) continue;
        for (std::size_t z = 0; z < p.size(); ++z)
          for (std::size_t b = 0; b < g.order(); ++b) {
            if (!p.leq(action.act(b, y), z) || (y == z && b == g.identity())) continue;
            raw.composition.push_back({name(b, y, z), name(a, x, y), name(g.mul(b, a), x, z)});
          }
      }
  return validate(raw);
}

FiniteCategory group_category(const GroupTable& g, const std::string& object) {
  RawCategory raw;
  raw.objects = {object};
  for (std::size_t a = 0; a < g.order(); ++a) raw.morphisms.push_back({g.name(a), object, object, a == g.identity()});
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (a != g.identity() && b != g.identity()) raw.composition.push_back({g.name(a), g.name(b), g.name(g.mul(a, b))});
  return validate(raw);
}

FiniteCategory biset_category(const BisetSpec& spec) {
  const std::size_t n = spec.objects.size();
  if (spec.groups.size() != n) throw std::invalid_argument("biset_category: one group per object is required");
  RawCategory raw;
  raw.objects = spec.objects;
  auto aut_name = [&](std::size_t x, std::size_t g) { return spec.objects[x] + ":" + spec.groups[x].name(g); };
  for (std::size_t x = 0; x < n; ++x) {
    const auto& g = spec.groups[x];
    for (std::size_t a = 0; a < g.order(); ++a)
      raw.morphisms.push_back({aut_name(x, a), spec.objects[x], spec.objects[x], a == g.identity()});
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        if (a != g.identity() && b != g.identity())
          raw.composition.push_back({aut_name(x, a), aut_name(x, b), aut_name(x, g.mul(a, b))});
  }
  for (const auto& h : spec.homs) {
    if (h.from >= n || h.to >= n || h.from == h.to)
      throw std::invalid_argument("biset_category: Hom endpoints must be distinct known objects");
    const auto& gl = spec.groups[h.to];
    const auto& gr = spec.groups[h.from];
    BiSet check(gl, gr, h.names, h.left, h.right);  // validates both actions and their commutation
    for (const auto& s : h.names) raw.morphisms.push_back({s, spec.objects[h.from], spec.objects[h.to], false});
    for (std::size_t s = 0; s < h.names.size(); ++s) {
      for (std::size_t a = 0; a < gl.order(); ++a)
        if (a != gl.identity()) raw.composition.push_back({aut_name(h.to, a), h.names[s], h.names[h.left[a][s]]});
      for (std::size_t b = 0; b < gr.order(); ++b)
        if (b != gr.identity()) raw.composition.push_back({h.names[s], aut_name(h.from, b), h.names[h.right[s][b]]});
    }
  }
  for (const auto& c : spec.compositions) {
    const auto& outer = spec.homs.at(c.outer);
    const auto& inner = spec.homs.at(c.inner);
    if (outer.from != inner.to) throw std::invalid_argument("biset_category: composition of non-composable Homs");
    const BisetSpec::Hom* result = nullptr;
    for (const auto& h : spec.homs)
      if (h.from == inner.from && h.to == outer.to) result = &h;
    if (!result) throw std::invalid_argument("biset_category: composite Hom is missing");
    for (std::size_t t = 0; t < outer.names.size(); ++t)
      for (std::size_t s = 0; s < inner.names.size(); ++s)
        raw.composition.push_back({outer.names[t], inner.names[s], result->names.at(c.table.at(t).at(s))});
  }
  try {
    return validate(raw);
  } catch (const CategoryError& e) {
    for (const auto& v : e.violations())
      if (v.kind == ViolationKind::NonAssociative) throw AssociativityFailure(std::string("AssociativityFailure: ") + e.what());
    throw;
  }
}

FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b) {
  RawCategory raw;
  auto obj = [&](ObjectId x, ObjectId y) { return "(" + a.object_name(x) + "," + b.object_name(y) + ")"; };
  auto mor = [&](MorphismId f, MorphismId g) { return "(" + a.morphism_name(f) + "," + b.morphism_name(g) + ")"; };
  for (ObjectId x = 0; x < a.object_count(); ++x)
    for (ObjectId y = 0; y < b.object_count(); ++y) raw.objects.push_back(obj(x, y));
  for (MorphismId f = 0; f < a.morphism_count(); ++f)
    for (MorphismId g = 0; g < b.morphism_count(); ++g)
      raw.morphisms.push_back({mor(f, g), obj(a.src(f), b.src(g)), obj(a.dst(f), b.dst(g)),
                               a.is_identity(f) && b.is_identity(g)});
  for (MorphismId f1 = 0; f1 < a.morphism_count(); ++f1)
    for (MorphismId f2 = 0; f2 < a.morphism_count(); ++f2) {
      const MorphismId f = a.compose(f1, f2);
      if (f == kNoMorphism) continue;
      for (MorphismId g1 = 0; g1 < b.morphism_count(); ++g1)
        for (MorphismId g2 = 0; g2 < b.morphism_count(); ++g2) {
          const MorphismId g = b.compose(g1, g2);
          if (g != kNoMorphism) raw.composition.push_back({mor(f1, g1), mor(f2, g2), mor(f, g)});
        }
    }
  return validate(raw);
}

FiniteCategory orbit_category(const GroupTable& g, const std::vector<std::vector<std::size_t>>& subgroups,
                              const std::vector<std::string>& names) {
  if (subgroups.size() != names.size()) throw std::invalid_argument("orbit_category: one name per subgroup");
  const std::size_t order = g.order();
  std::vector<std::vector<bool>> member(subgroups.size(), std::vector<bool>(order, false));
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (auto h : subgroups[i]) member[i].at(h) = true;
    if (g.generated_subgroup(subgroups[i]).size() != subgroups[i].size())
      throw std::invalid_argument("orbit_category: '" + names[i] + "' is not a subgroup");
  }
  // Canonical coset representative: least element index of aK.
  auto rep = [&](std::size_t a, std::size_t k) {
    std::size_t best = order;
    for (auto x : subgroups[k]) best = std::min(best, g.mul(a, x));
    return best;
  };
  // gK is a G-map G/H -> G/K iff g^-1 H g <= K.
  auto admissible = [&](std::size_t a, std::size_t h, std::size_t k) {
    for (auto x : subgroups[h])
      if (!member[k][g.mul(g.inv(a), g.mul(x, a))]) return false;
    return true;
  };
  std::vector<std::vector<std::vector<std::size_t>>> hom(subgroups.size(), std::vector<std::vector<std::size_t>>(subgroups.size()));
  for (std::size_t h = 0; h < subgroups.size(); ++h)
    for (std::size_t k = 0; k < subgroups.size(); ++k)
      for (std::size_t a = 0; a < order; ++a)
        if (rep(a, k) == a && admissible(a, h, k)) hom[h][k].push_back(a);
  auto name = [&](std::size_t h, std::size_t k, std::size_t a) { return names[h] + "->" + names[k] + ":" + g.name(a); };
  RawCategory raw;
  raw.objects = names;
  for (std::size_t h = 0; h < subgroups.size(); ++h)
    for (std::size_t k = 0; k < subgroups.size(); ++k)
      for (auto a : hom[h][k])
        raw.morphisms.push_back({name(h, k, a), names[h], names[k], h == k && a == rep(g.identity(), k)});
  for (std::size_t h = 0; h < subgroups.size(); ++h)
    for (std::size_t k = 0; k < subgroups.size(); ++k)
      for (auto a : hom[h][k])
        for (std::size_t l = 0; l < subgroups.size(); ++l)
          for (auto b : hom[k][l])
            raw.composition.push_back({name(k, l, b), name(h, k, a), name(h, l, rep(g.mul(a, b), l))});
  return validate(raw);
}

// ---- named examples ----

namespace examples {

FiniteCategory chain_a3() { return poset_category(Poset({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}})); }

FiniteCategory diamond() { return poset_category(Poset::diamond()); }

FiniteCategory z2() { return group_category(GroupTable::cyclic(2)); }

namespace {

BisetSpec two_object(std::vector<std::string> names, std::vector<std::vector<std::size_t>> right) {
  BisetSpec spec;
  spec.objects = {"x1", "x2"};
  spec.groups = {GroupTable::trivial(), GroupTable::cyclic(2)};
  BisetSpec::Hom h;
  h.from = 1;
  h.to = 0;
  h.left = {std::vector<std::size_t>(names.size())};
  for (std::size_t s = 0; s < names.size(); ++s) h.left[0][s] = s;
  h.names = std::move(names);
  h.right = std::move(right);
  spec.homs.push_back(std::move(h));
  return spec;
}

}  // namespace

FiniteCategory regular_orbit() { return biset_category(two_object({"a", "ag"}, {{0, 1}, {1, 0}})); }

FiniteCategory stabilized_alpha() { return biset_category(two_object({"alpha"}, {{0, 0}})); }

GroupAction swap_action() {
  return GroupAction(GroupTable::cyclic(2), Poset::diamond().elements(), {{0, 1, 2, 3}, {0, 2, 1, 3}});
}

FiniteCategory swapped_diamond() { return transporter_category(swap_action(), Poset::diamond()); }

}  // namespace examples

// ---- groups by name ----

GroupTable named_group(const std::string& name) {
  if (name == "trivial") return GroupTable::trivial();
  if (name == "V4") return GroupTable::klein_four();
  if (name == "S3") return GroupTable::symmetric3();
  if (name.size() == 2 && name[0] == 'Z' && name[1] >= '2' && name[1] <= '6')
    return GroupTable::cyclic(static_cast<std::size_t>(name[1] - '0'));
  throw std::invalid_argument("unknown group '" + name + "'");
}

std::vector<std::string> named_group_names() { return {"trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "V4", "S3"}; }

// ---- corpus ----

namespace {

bool within_limits(const FiniteCategory& c, const CorpusLimits& limits) {
  if (c.object_count() > limits.max_objects || c.morphism_count() > limits.max_morphisms) return false;
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = 0; y < c.object_count(); ++y) {
      const std::size_t size = c.hom(x, y).size();
      if (x == y ? size > limits.max_group_order : size > limits.max_hom) return false;
    }
  return true;
}

class Drawer {
 public:
  explicit Drawer(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p; }

  GroupTable group(const std::vector<std::string>& names) { return named_group(names[below(names.size())]); }

  std::vector<std::size_t> subgroup(const GroupTable& g) {
    std::vector<std::size_t> gens;
    const std::size_t count = below(3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(below(g.order()));
    return g.generated_subgroup(gens);
  }

  Poset poset() {
    const std::size_t n = 2 + below(3);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(0.6)) {
          if (coin(0.5)) rel.emplace_back(names[i], names[j]);
          else rel.emplace_back(names[j], names[i]);
        }
    return Poset(std::move(names), rel);
  }

  // A G-set that is a union of orbits G/H, with a G-invariant partial order on it.
  std::optional<std::pair<GroupAction, Poset>> g_poset(const CorpusLimits& limits) {
    GroupTable g = group({"Z2", "Z3", "Z4", "V4", "S3", "Z2"});
    std::vector<std::vector<std::size_t>> cosets;  // each point as a coset of some subgroup
    std::vector<std::string> names;
    std::vector<std::size_t> orbit_of;
    const std::size_t orbits = 2 + below(2);
    for (std::size_t o = 0; o < orbits; ++o) {
      auto h = subgroup(g);
      std::set<std::vector<std::size_t>> seen;
      for (std::size_t a = 0; a < g.order(); ++a) {
        std::vector<std::size_t> coset;
        for (auto x : h) coset.push_back(g.mul(a, x));
        std::sort(coset.begin(), coset.end());
        if (seen.insert(coset).second) {
          cosets.push_back(coset);
          orbit_of.push_back(o);
          names.push_back("o" + std::to_string(o) + "." + std::to_string(seen.size() - 1));
        }
      }
    }
    if (cosets.size() > limits.max_objects) return std::nullopt;
    std::vector<std::vector<std::size_t>> act(g.order(), std::vector<std::size_t>(cosets.size()));
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t p = 0; p < cosets.size(); ++p) {
        std::vector<std::size_t> image;
        for (auto x : cosets[p]) image.push_back(g.mul(a, x));
        std::sort(image.begin(), image.end());
        std::size_t q = 0;
        while (orbit_of[q] != orbit_of[p] || cosets[q] != image) ++q;
        act[a][p] = q;
      }
    GroupAction action(g, names, act);
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t x = 0; x < cosets.size(); ++x)
      for (std::size_t y = 0; y < cosets.size(); ++y)
        if (x != y && coin(0.4))
          for (std::size_t a = 0; a < g.order(); ++a) rel.emplace_back(names[action.act(a, x)], names[action.act(a, y)]);
    try {
      Poset p(names, rel);
      return std::make_pair(std::move(action), std::move(p));
    } catch (const PosetError&) {
      return std::nullopt;
    }
  }

  // Hom(x2, x1) as a union of orbits (G1 x G2)/K with g.(a,b)K = (ga,b)K and (a,b)K.h = (a,h^-1 b)K.
  BisetSpec biset(const CorpusLimits& limits) {
    BisetSpec spec;
    spec.objects = {"x1", "x2"};
    spec.groups = {group({"trivial", "Z2", "Z3", "Z2", "V4"}), group({"trivial", "Z2", "Z3", "Z2", "S3"})};
    const GroupTable& g1 = spec.groups[0];
    const GroupTable& g2 = spec.groups[1];
    const GroupTable prod = GroupTable::product(g1, g2);
    auto pair_index = [&](std::size_t a, std::size_t b) { return a * g2.order() + b; };
    BisetSpec::Hom h;
    h.from = 1;
    h.to = 0;
    std::vector<std::vector<std::size_t>> points;  // cosets, as sorted element lists of prod
    std::vector<std::size_t> orbit_of;
    const std::size_t orbits = 1 + below(2);
    for (std::size_t o = 0; o < orbits; ++o) {
      auto k = subgroup(prod);
      if (prod.order() / k.size() + points.size() > limits.max_hom) continue;
      std::set<std::vector<std::size_t>> seen;
      for (std::size_t x = 0; x < prod.order(); ++x) {
        std::vector<std::size_t> coset;
        for (auto y : k) coset.push_back(prod.mul(x, y));
        std::sort(coset.begin(), coset.end());
        if (seen.insert(coset).second) {
          points.push_back(coset);
          orbit_of.push_back(o);
        }
      }
    }
    auto locate = [&](std::size_t orbit, std::vector<std::size_t> coset) {
      std::sort(coset.begin(), coset.end());
      for (std::size_t s = 0; s < points.size(); ++s)
        if (orbit_of[s] == orbit && points[s] == coset) return s;
      throw std::logic_error("biset: coset not found");
    };
    for (std::size_t s = 0; s < points.size(); ++s) h.names.push_back("a" + std::to_string(s));
    h.left.assign(g1.order(), std::vector<std::size_t>(points.size()));
    h.right.assign(points.size(), std::vector<std::size_t>(g2.order()));
    for (std::size_t s = 0; s < points.size(); ++s) {
      for (std::size_t a = 0; a < g1.order(); ++a) {
        std::vector<std::size_t> image;
        for (auto x : points[s]) image.push_back(prod.mul(pair_index(a, g2.identity()), x));
        h.left[a][s] = locate(orbit_of[s], image);
      }
      for (std::size_t b = 0; b < g2.order(); ++b) {
        std::vector<std::size_t> image;
        for (auto x : points[s]) image.push_back(prod.mul(pair_index(g1.identity(), g2.inv(b)), x));
        h.right[s][b] = locate(orbit_of[s], image);
      }
    }
    if (!points.empty()) spec.homs.push_back(std::move(h));
    return spec;
  }

  FiniteCategory orbit(const CorpusLimits& limits) {
    GroupTable g = group({"Z2", "Z3", "Z4", "V4", "S3", "Z6", "Z2"});
    // one subgroup per conjugacy class; every subgroup here is generated by two elements
    std::vector<std::vector<std::size_t>> classes;
    auto conjugate_known = [&](const std::vector<std::size_t>& h) {
      for (const auto& k : classes)
        for (std::size_t a = 0; a < g.order(); ++a) {
          std::vector<std::size_t> conj;
          for (auto x : h) conj.push_back(g.mul(g.inv(a), g.mul(x, a)));
          std::sort(conj.begin(), conj.end());
          if (conj == k) return true;
        }
      return false;
    };
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = a; b < g.order(); ++b) {
        auto h = g.generated_subgroup({a, b});
        if (!conjugate_known(h)) classes.push_back(std::move(h));
      }
    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::string> names;
    for (const auto& h : classes)
      if (subs.size() < limits.max_objects && coin(0.6)) {
        names.push_back("G/H" + std::to_string(subs.size()));
        subs.push_back(h);
      }
    if (subs.empty()) {
      subs.push_back(classes[below(classes.size())]);
      names.push_back("G/H0");
    }
    return orbit_category(g, subs, names);
  }

  FiniteCategory product_factor() {
    switch (below(7)) {
      case 0: return poset_category(Poset::chain(2));
      case 1: return poset_category(Poset::antichain(2));
      case 2: return poset_category(Poset::diamond());
      case 3: return examples::regular_orbit();
      case 4: return examples::stabilized_alpha();
      default: return group_category(group({"Z2", "Z3", "V4", "S3", "Z2"}));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<CorpusEntry> corpus(std::uint64_t seed, std::size_t count, const CorpusLimits& limits) {
  std::vector<CorpusEntry> out;
  const std::vector<std::pair<std::string, FiniteCategory (*)()>> named = {
      {"chain_a3", examples::chain_a3},           {"diamond", examples::diamond},
      {"z2", examples::z2},                       {"regular_orbit", examples::regular_orbit},
      {"stabilized_alpha", examples::stabilized_alpha}};
  for (const auto& [name, make] : named) {
    if (out.size() >= count) return out;
    CorpusEntry e{name, "named", make(), std::nullopt};
    if (name == "chain_a3") e.poset = Poset({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
    if (name == "diamond") e.poset = Poset::diamond();
    out.push_back(std::move(e));
  }
  if (out.size() < count) out.push_back({"swapped_diamond", "transporter", examples::swapped_diamond(), Poset::diamond()});
  Drawer draw(seed);
  const std::vector<std::string> families = {"poset", "transporter", "group", "biset", "orbit", "product"};
  std::size_t turn = 0;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100000) throw std::runtime_error("corpus: limits too tight to fill the stream");
    const std::string& family = families[turn % families.size()];
    std::optional<CorpusEntry> entry;
    try {
      if (family == "poset") {
        Poset p = draw.poset();
        entry = CorpusEntry{"", family, poset_category(p), p};
      } else if (family == "transporter") {
        if (auto gp = draw.g_poset(limits)) entry = CorpusEntry{"", family, transporter_category(gp->first, gp->second), gp->second};
      } else if (family == "group") {
        entry = CorpusEntry{"", family, group_category(draw.group(named_group_names())), std::nullopt};
      } else if (family == "biset") {
        entry = CorpusEntry{"", family, biset_category(draw.biset(limits)), std::nullopt};
      } else if (family == "orbit") {
        entry = CorpusEntry{"", family, draw.orbit(limits), std::nullopt};
      } else {
        FiniteCategory a = draw.product_factor();
        FiniteCategory b = draw.product_factor();
        if (a.object_count() * b.object_count() <= limits.max_objects &&
            a.morphism_count() * b.morphism_count() <= limits.max_morphisms)
          entry = CorpusEntry{"", family, product_category(a, b), std::nullopt};
      }
    } catch (const PosetError&) {
      entry.reset();
    }
    if (!entry || !within_limits(entry->category, limits)) continue;
    ++turn;
    entry->name = family + "_" + std::to_string(out.size());
    out.push_back(std::move(*entry));
  }
  return out;
}

}  // namespace eicat
