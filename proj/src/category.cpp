#include "eicat/category.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace eicat {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MissingIdentity: return "MissingIdentity";
    case ViolationKind::DuplicateIdentity: return "DuplicateIdentity";
    case ViolationKind::DuplicateName: return "DuplicateName";
    case ViolationKind::UnknownName: return "UnknownName";
    case ViolationKind::BadEndpoints: return "BadEndpoints";
    case ViolationKind::IncompleteComposition: return "IncompleteComposition";
    case ViolationKind::ConflictingComposition: return "ConflictingComposition";
    case ViolationKind::IdentityLaw: return "IdentityLaw";
    case ViolationKind::NonAssociative: return "NonAssociative";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = "invalid category:";
  for (const auto& v : violations) {
    out += "\n  ";
    out += to_string(v.kind);
    out += ": ";
    out += v.detail;
  }
  return out;
}

}  // namespace

CategoryError::CategoryError(std::vector<Violation> violations)
    : std::runtime_error(summarize(violations)), violations_(std::move(violations)) {}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<ObjectId>(it - objects_.begin());
}

std::optional<MorphismId> FiniteCategory::find_morphism(std::string_view name) const {
  for (MorphismId f = 0; f < morphisms_.size(); ++f)
    if (morphisms_[f].name == name) return f;
  return std::nullopt;
}

void FiniteCategory::index_homs() {
  homs_.assign(objects_.size() * objects_.size(), {});
  for (MorphismId f = 0; f < morphisms_.size(); ++f)
    homs_[morphisms_[f].src * objects_.size() + morphisms_[f].dst].push_back(f);
}

RawCategory FiniteCategory::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (MorphismId f = 0; f < morphisms_.size(); ++f) {
    raw.morphisms.push_back({morphisms_[f].name, objects_[morphisms_[f].src],
                             objects_[morphisms_[f].dst], is_identity(f)});
  }
  for (MorphismId f = 0; f < morphisms_.size(); ++f) {
    if (is_identity(f)) continue;
    for (MorphismId g = 0; g < morphisms_.size(); ++g) {
      if (is_identity(g)) continue;
      MorphismId h = compose(f, g);
      if (h != kNoMorphism) raw.composition.push_back({morphisms_[f].name, morphisms_[g].name, morphisms_[h].name});
    }
  }
  return raw;
}

FiniteCategory validate(const RawCategory& raw) {
  std::vector<Violation> bad;
  FiniteCategory c;

  std::unordered_map<std::string, ObjectId> object_index;
  for (const auto& name : raw.objects) {
    if (!object_index.emplace(name, c.objects_.size()).second) {
      bad.push_back({ViolationKind::DuplicateName, "object '" + name + "' listed twice"});
      continue;
    }
    c.objects_.push_back(name);
  }

  std::unordered_map<std::string, MorphismId> morphism_index;
  c.identities_.assign(c.objects_.size(), kNoMorphism);
  for (const auto& m : raw.morphisms) {
    auto s = object_index.find(m.src);
    auto d = object_index.find(m.dst);
    if (s == object_index.end() || d == object_index.end()) {
      bad.push_back({ViolationKind::UnknownName,
                     "morphism '" + m.id + "' refers to unknown object '" +
                         (s == object_index.end() ? m.src : m.dst) + "'"});
      continue;
    }
    if (morphism_index.count(m.id)) {
      bad.push_back({ViolationKind::DuplicateName, "morphism '" + m.id + "' listed twice"});
      continue;
    }
    MorphismId id = c.morphisms_.size();
    morphism_index.emplace(m.id, id);
    c.morphisms_.push_back({m.id, s->second, d->second});
    if (m.identity) {
      if (s->second != d->second) {
        bad.push_back({ViolationKind::BadEndpoints, "identity '" + m.id + "' is not an endomorphism"});
      } else if (c.identities_[s->second] != kNoMorphism) {
        bad.push_back({ViolationKind::DuplicateIdentity, "object '" + m.src + "' has identities '" +
                                                             c.morphisms_[c.identities_[s->second]].name +
                                                             "' and '" + m.id + "'"});
      } else {
        c.identities_[s->second] = id;
      }
    }
  }
  for (ObjectId x = 0; x < c.objects_.size(); ++x) {
    if (c.identities_[x] == kNoMorphism)
      bad.push_back({ViolationKind::MissingIdentity, "object '" + c.objects_[x] + "' has no identity"});
  }
  if (!bad.empty()) throw CategoryError(std::move(bad));

  const std::size_t n = c.morphisms_.size();
  c.table_.assign(n * n, kNoMorphism);
  auto name = [&](MorphismId f) { return "'" + c.morphisms_[f].name + "'"; };

  for (const auto& [fs, gs, hs] : raw.composition) {
    auto f = morphism_index.find(fs);
    auto g = morphism_index.find(gs);
    auto h = morphism_index.find(hs);
    if (f == morphism_index.end() || g == morphism_index.end() || h == morphism_index.end()) {
      bad.push_back({ViolationKind::UnknownName, "composition " + fs + " o " + gs + " = " + hs +
                                                     " names an unknown morphism"});
      continue;
    }
    const auto& mf = c.morphisms_[f->second];
    const auto& mg = c.morphisms_[g->second];
    const auto& mh = c.morphisms_[h->second];
    if (mf.src != mg.dst) {
      bad.push_back({ViolationKind::BadEndpoints,
                     name(f->second) + " o " + name(g->second) + ": src(f) != dst(g)"});
      continue;
    }
    if (mh.src != mg.src || mh.dst != mf.dst) {
      bad.push_back({ViolationKind::BadEndpoints, name(f->second) + " o " + name(g->second) + " = " +
                                                      name(h->second) + " has mismatched endpoints"});
      continue;
    }
    auto& slot = c.table_[f->second * n + g->second];
    if (slot != kNoMorphism && slot != h->second) {
      bad.push_back({ViolationKind::ConflictingComposition,
                     name(f->second) + " o " + name(g->second) + " given as both " + name(slot) + " and " +
                         name(h->second)});
      continue;
    }
    slot = h->second;
  }

  // Identity compositions are inferred; explicit ones must agree.
  for (MorphismId f = 0; f < n; ++f) {
    const auto& mf = c.morphisms_[f];
    for (auto [slot, expect] : {std::pair{c.identities_[mf.dst] * n + f, f}, std::pair{f * n + c.identities_[mf.src], f}}) {
      if (c.table_[slot] != kNoMorphism && c.table_[slot] != expect) {
        bad.push_back({ViolationKind::IdentityLaw, "identity law fails for " + name(f)});
      }
      c.table_[slot] = expect;
    }
  }

  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g = 0; g < n; ++g) {
      if (c.morphisms_[f].src != c.morphisms_[g].dst) continue;
      if (c.table_[f * n + g] == kNoMorphism)
        bad.push_back({ViolationKind::IncompleteComposition, name(f) + " o " + name(g) + " is not defined"});
    }
  }
  if (!bad.empty()) throw CategoryError(std::move(bad));

  for (MorphismId f = 0; f < n; ++f) {
    for (MorphismId g = 0; g < n; ++g) {
      MorphismId fg = c.table_[f * n + g];
      if (fg == kNoMorphism) continue;
      for (MorphismId h = 0; h < n; ++h) {
        MorphismId gh = c.table_[g * n + h];
        if (gh == kNoMorphism) continue;
        if (c.table_[fg * n + h] != c.table_[f * n + gh]) {
          bad.push_back({ViolationKind::NonAssociative,
                         "(" + name(f) + ", " + name(g) + ", " + name(h) + ")"});
        }
      }
    }
  }
  if (!bad.empty()) throw CategoryError(std::move(bad));

  c.index_homs();
  return c;
}

FiniteCategory full_subcategory(const FiniteCategory& c, std::span<const ObjectId> objects) {
  FiniteCategory sub;
  std::vector<ObjectId> new_object(c.object_count(), kNoMorphism);
  for (ObjectId x : objects) {
    if (x >= c.object_count() || new_object[x] != kNoMorphism)
      throw std::invalid_argument("full_subcategory: bad object list");
    new_object[x] = sub.objects_.size();
    sub.objects_.push_back(c.objects_[x]);
  }
  std::vector<MorphismId> new_morphism(c.morphism_count(), kNoMorphism);
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    ObjectId s = new_object[c.src(f)], d = new_object[c.dst(f)];
    if (s == kNoMorphism || d == kNoMorphism) continue;
    new_morphism[f] = sub.morphisms_.size();
    sub.morphisms_.push_back({c.morphisms_[f].name, s, d});
  }
  sub.identities_.resize(objects.size());
  for (ObjectId x : objects) sub.identities_[new_object[x]] = new_morphism[c.identity(x)];
  const std::size_t n = sub.morphisms_.size();
  sub.table_.assign(n * n, kNoMorphism);
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (new_morphism[f] == kNoMorphism) continue;
    for (MorphismId g = 0; g < c.morphism_count(); ++g) {
      if (new_morphism[g] == kNoMorphism) continue;
      MorphismId h = c.compose(f, g);
      if (h != kNoMorphism) sub.table_[new_morphism[f] * n + new_morphism[g]] = new_morphism[h];
    }
  }
  sub.index_homs();
  return sub;
}

std::optional<MorphismId> inverse(const FiniteCategory& c, MorphismId f) {
  for (MorphismId g : c.hom(c.dst(f), c.src(f))) {
    if (c.compose(f, g) == c.identity(c.dst(f)) && c.compose(g, f) == c.identity(c.src(f))) return g;
  }
  return std::nullopt;
}

EICheck is_ei(const FiniteCategory& c) {
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    for (MorphismId f : c.hom(x, x)) {
      if (!inverse(c, f)) return {false, f};
    }
  }
  return {};
}

namespace {

bool isomorphic(const FiniteCategory& c, ObjectId x, ObjectId y) {
  for (MorphismId f : c.hom(x, y))
    if (inverse(c, f)) return true;
  return false;
}

}  // namespace

bool is_skeletal(const FiniteCategory& c) {
  for (ObjectId x = 0; x < c.object_count(); ++x)
    for (ObjectId y = x + 1; y < c.object_count(); ++y)
      if (isomorphic(c, x, y)) return false;
  return true;
}

Skeleton skeletalize(const FiniteCategory& c) {
  std::vector<ObjectId> reps;
  std::vector<ObjectId> object_map(c.object_count());
  for (ObjectId x = 0; x < c.object_count(); ++x) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](ObjectId r) { return isomorphic(c, r, x); });
    if (it == reps.end()) {
      object_map[x] = reps.size();
      reps.push_back(x);
    } else {
      object_map[x] = static_cast<ObjectId>(it - reps.begin());
    }
  }
  return {full_subcategory(c, reps), std::move(object_map), std::move(reps)};
}

}  // namespace eicat
