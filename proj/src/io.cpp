#include "eicat/io.hpp"

#include <fstream>
#include <map>
#include <set>

namespace eicat {

namespace {

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(what + ": unknown key '" + key + "'");
  }
}

const Json& need(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing key '" + key + "'");
  return *it;
}

std::string str(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str(x, what));
  return out;
}

std::size_t count(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(what + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

// Index lookup by name within a list of names.
class Names {
 public:
  Names(const std::vector<std::string>& names, std::string what) : what_(std::move(what)) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!index_.emplace(names[i], i).second) throw ParseError(what_ + ": duplicate name '" + names[i] + "'");
  }
  std::size_t operator()(const Json& j) const {
    const std::string s = str(j, what_);
    auto it = index_.find(s);
    if (it == index_.end()) throw ParseError(what_ + ": unknown name '" + s + "'");
    return it->second;
  }

 private:
  std::string what_;
  std::map<std::string, std::size_t> index_;
};

// Triples [a, b, c] filling table[a][b] = c, every cell exactly once.
std::vector<std::vector<std::size_t>> triple_table(const Json& j, const Names& rows, std::size_t nrows,
                                                   const Names& cols, std::size_t ncols, const Names& vals,
                                                   const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array of triples");
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> t(nrows, std::vector<std::size_t>(ncols, unset));
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) throw ParseError(what + ": entries must be triples");
    auto& cell = t[rows(e[0])][cols(e[1])];
    if (cell != unset) throw ParseError(what + ": duplicate entry");
    cell = vals(e[2]);
  }
  for (const auto& row : t)
    for (auto x : row)
      if (x == unset) throw ParseError(what + ": table is incomplete");
  return t;
}

template <class F>
Json scalar_to_json(const F& f, const typename F::Element& x) {
  if constexpr (std::is_same_v<F, RationalField>) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
    return Json(f.to_string(x));
  } else {
    return Json(static_cast<std::uint64_t>(x));
  }
}

template <class F>
typename F::Element scalar_from_json(const F& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return f.parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad scalar: ") + e.what());
    }
  }
  throw ParseError("scalar must be an integer or an \"a/b\" string");
}

Json dimension_json(const DimensionVerdict& v) {
  return v.value ? Json(*v.value) : Json(v.to_string());
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

RawCategory category_from_json(const Json& j) {
  const std::string what = "category";
  only_keys(j, {"objects", "morphisms", "composition"}, what);
  RawCategory raw;
  raw.objects = strings(need(j, "objects", what), "objects");
  const Json& ms = need(j, "morphisms", what);
  if (!ms.is_array()) throw ParseError("morphisms: expected an array");
  for (const auto& m : ms) {
    only_keys(m, {"id", "src", "dst", "identity"}, "morphism");
    RawMorphism r{str(need(m, "id", "morphism"), "morphism id"), str(need(m, "src", "morphism"), "morphism src"),
                  str(need(m, "dst", "morphism"), "morphism dst"), false};
    if (auto it = m.find("identity"); it != m.end()) {
      if (!it->is_boolean()) throw ParseError("morphism identity flag must be a boolean");
      r.identity = it->get<bool>();
    }
    raw.morphisms.push_back(std::move(r));
  }
  if (auto it = j.find("composition"); it != j.end()) {
    if (!it->is_array()) throw ParseError("composition: expected an array of triples");
    for (const auto& t : *it) {
      if (!t.is_array() || t.size() != 3) throw ParseError("composition: entries must be triples [f, g, h]");
      raw.composition.push_back({str(t[0], "composition"), str(t[1], "composition"), str(t[2], "composition")});
    }
  }
  return raw;
}

Json category_to_json(const FiniteCategory& c) {
  Json j;
  j["objects"] = c.object_names();
  Json ms = Json::array();
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    Json m{{"id", c.morphism_name(f)}, {"src", c.object_name(c.src(f))}, {"dst", c.object_name(c.dst(f))}};
    if (c.is_identity(f)) m["identity"] = true;
    ms.push_back(std::move(m));
  }
  j["morphisms"] = std::move(ms);
  Json comp = Json::array();
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (MorphismId g = 0; g < c.morphism_count(); ++g) {
      if (c.is_identity(f) || c.is_identity(g)) continue;
      const MorphismId h = c.compose(f, g);
      if (h != kNoMorphism) comp.push_back({c.morphism_name(f), c.morphism_name(g), c.morphism_name(h)});
    }
  j["composition"] = std::move(comp);
  return j;
}

GroupTable group_from_json(const Json& j) {
  const std::string what = "group";
  only_keys(j, {"elements", "identity", "table"}, what);
  auto elements = strings(need(j, "elements", what), "group elements");
  const Names names(elements, "group element");
  const std::size_t e = names(need(j, "identity", what));
  auto table = triple_table(need(j, "table", what), names, elements.size(), names, elements.size(), names,
                            "group table");
  try {
    return GroupTable(std::move(elements), std::move(table), e);
  } catch (const GroupError& err) {
    throw ParseError(std::string("group: ") + err.what());
  }
}

Json group_to_json(const GroupTable& g) {
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) table.push_back({g.name(a), g.name(b), g.name(g.mul(a, b))});
  return Json{{"elements", g.elements()}, {"identity", g.name(g.identity())}, {"table", std::move(table)}};
}

GroupAction action_from_json(const Json& j, const std::optional<GroupTable>& group) {
  const std::string what = "action";
  only_keys(j, {"group", "set", "act"}, what);
  std::optional<GroupTable> g;
  if (auto it = j.find("group"); it != j.end()) g = group_from_json(*it);
  if (g && group && !(*g == *group)) throw ParseError("action: embedded group differs from the given group");
  if (!g) g = group;
  if (!g) throw ParseError("action: no group given");
  auto set = strings(need(j, "set", what), "action set");
  const Names points(set, "action point");
  const Names elems(g->elements(), "group element");
  auto act = triple_table(need(j, "act", what), elems, g->order(), points, set.size(), points, "action table");
  try {
    return GroupAction(std::move(*g), std::move(set), std::move(act));
  } catch (const GroupError& err) {
    throw ParseError(std::string("action: ") + err.what());
  }
}

Json action_to_json(const GroupAction& a) {
  Json act = Json::array();
  for (std::size_t g = 0; g < a.group().order(); ++g)
    for (std::size_t x = 0; x < a.size(); ++x) act.push_back({a.group().name(g), a.set()[x], a.set()[a.act(g, x)]});
  return Json{{"group", group_to_json(a.group())}, {"set", a.set()}, {"act", std::move(act)}};
}

Poset poset_from_json(const Json& j) {
  const std::string what = "poset";
  only_keys(j, {"elements", "relations"}, what);
  auto elements = strings(need(j, "elements", what), "poset elements");
  std::vector<std::pair<std::string, std::string>> rel;
  if (auto it = j.find("relations"); it != j.end()) {
    if (!it->is_array()) throw ParseError("poset relations: expected an array of pairs");
    for (const auto& r : *it) {
      if (!r.is_array() || r.size() != 2) throw ParseError("poset relations: entries must be pairs [x, y]");
      rel.emplace_back(str(r[0], "poset relation"), str(r[1], "poset relation"));
    }
  }
  try {
    return Poset(std::move(elements), rel);
  } catch (const PosetError& e) {
    throw ParseError(std::string("poset: ") + e.what());
  }
}

Json poset_to_json(const Poset& p) {
  Json rel = Json::array();
  for (auto [x, y] : p.strict_pairs()) rel.push_back({p.elements()[x], p.elements()[y]});
  return Json{{"elements", p.elements()}, {"relations", std::move(rel)}};
}

BisetSpec biset_from_json(const Json& j) {
  const std::string what = "biset category";
  only_keys(j, {"objects", "groups", "homs", "compositions"}, what);
  BisetSpec spec;
  spec.objects = strings(need(j, "objects", what), "objects");
  const Names objects(spec.objects, "object");
  const Json& groups = need(j, "groups", what);
  if (!groups.is_array() || groups.size() != spec.objects.size())
    throw ParseError("groups: one group per object is required");
  for (const auto& g : groups) spec.groups.push_back(group_from_json(g));

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hom_index;
  std::vector<Names> hom_names;
  if (auto it = j.find("homs"); it != j.end()) {
    if (!it->is_array()) throw ParseError("homs: expected an array");
    for (const auto& h : *it) {
      only_keys(h, {"from", "to", "elements", "left", "right"}, "hom");
      BisetSpec::Hom hom;
      hom.from = objects(need(h, "from", "hom"));
      hom.to = objects(need(h, "to", "hom"));
      hom.names = strings(need(h, "elements", "hom"), "hom elements");
      hom_names.emplace_back(hom.names, "hom element");
      const auto& gt = spec.groups[hom.to];
      const auto& gs = spec.groups[hom.from];
      const Names lg(gt.elements(), "group element"), rg(gs.elements(), "group element");
      hom.left = triple_table(need(h, "left", "hom"), lg, gt.order(), hom_names.back(), hom.names.size(),
                              hom_names.back(), "hom left action");
      hom.right = triple_table(need(h, "right", "hom"), hom_names.back(), hom.names.size(), rg, gs.order(),
                               hom_names.back(), "hom right action");
      if (!hom_index.emplace(std::make_pair(hom.from, hom.to), spec.homs.size()).second)
        throw ParseError("homs: two entries for the same pair of objects");
      spec.homs.push_back(std::move(hom));
    }
  }
  if (auto it = j.find("compositions"); it != j.end()) {
    if (!it->is_array()) throw ParseError("compositions: expected an array");
    auto pair_index = [&](const Json& p) {
      if (!p.is_array() || p.size() != 2) throw ParseError("compositions: expected an object pair");
      auto k = hom_index.find({objects(p[0]), objects(p[1])});
      if (k == hom_index.end()) throw ParseError("compositions: no hom for the given pair");
      return k->second;
    };
    for (const auto& c : *it) {
      only_keys(c, {"outer", "inner", "table"}, "composition");
      BisetSpec::Composition comp;
      comp.outer = pair_index(need(c, "outer", "composition"));
      comp.inner = pair_index(need(c, "inner", "composition"));
      const auto& outer = spec.homs[comp.outer];
      const auto& inner = spec.homs[comp.inner];
      auto target = hom_index.find({inner.from, outer.to});
      if (outer.from != inner.to || target == hom_index.end())
        throw ParseError("compositions: homs are not composable into a listed hom");
      comp.table = triple_table(need(c, "table", "composition"), hom_names[comp.outer], outer.names.size(),
                                hom_names[comp.inner], inner.names.size(), hom_names[target->second],
                                "composition table");
      spec.compositions.push_back(std::move(comp));
    }
  }
  return spec;
}

template <class F>
Json algebra_to_json(const FiniteDimAlgebra<F>& a) {
  const F& f = a.field();
  auto vec = [&](const std::vector<typename F::Element>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(f, x));
    return out;
  };
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const auto& terms = a.product(i, k);
      if (terms.empty()) continue;
      Json t = Json::array();
      for (const auto& [b, c] : terms) t.push_back({b, scalar_to_json(f, c)});
      table.push_back({i, k, std::move(t)});
    }
  Json idem = Json::array();
  for (const auto& e : a.idempotents()) idem.push_back(vec(e));
  return Json{{"characteristic", f.characteristic()},
              {"basis", a.labels()},
              {"unit", vec(a.unit())},
              {"idempotents", std::move(idem)},
              {"table", std::move(table)}};
}

template <class F>
FiniteDimAlgebra<F> algebra_from_json(const Json& j, const F& field) {
  const std::string what = "algebra";
  only_keys(j, {"characteristic", "basis", "unit", "idempotents", "table", "m_star"}, what);
  auto labels = strings(need(j, "basis", what), "basis");
  const std::size_t n = labels.size();
  auto vec = [&](const Json& v, const std::string& name) {
    if (!v.is_array() || v.size() != n) throw ParseError(name + ": expected " + std::to_string(n) + " scalars");
    std::vector<typename F::Element> out;
    for (const auto& x : v) out.push_back(scalar_from_json(field, x));
    return out;
  };
  auto unit = vec(need(j, "unit", what), "unit");
  std::vector<std::vector<typename F::Element>> idem;
  if (auto it = j.find("idempotents"); it != j.end()) {
    if (!it->is_array()) throw ParseError("idempotents: expected an array");
    for (const auto& e : *it) idem.push_back(vec(e, "idempotent"));
  }
  std::vector<std::vector<typename FiniteDimAlgebra<F>::Term>> products(n * n);
  const Json& table = need(j, "table", what);
  if (!table.is_array()) throw ParseError("table: expected an array");
  for (const auto& e : table) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_array()) throw ParseError("table: entries are [i, j, [[k, c], ...]]");
    const std::size_t a = count(e[0], "table"), b = count(e[1], "table");
    if (a >= n || b >= n) throw ParseError("table: basis index out of range");
    for (const auto& t : e[2]) {
      if (!t.is_array() || t.size() != 2) throw ParseError("table: terms are [k, c]");
      const std::size_t k = count(t[0], "table");
      if (k >= n) throw ParseError("table: basis index out of range");
      products[a * n + b].emplace_back(k, scalar_from_json(field, t[1]));
    }
  }
  try {
    return FiniteDimAlgebra<F>(field, std::move(labels), std::move(products), std::move(unit), std::move(idem));
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  }
}

Json report_to_json(const ClassificationReport& r, bool explain) {
  Json j{{"characteristic", r.characteristic},
         {"is_ei", r.is_ei},
         {"is_skeletal", r.is_skeletal},
         {"ordering", r.ordering},
         {"projective", r.projective},
         {"witness", r.projectivity_witnesses.empty() ? Json(nullptr) : Json(r.projectivity_witnesses[0].morphism)},
         {"free", r.free},
         {"gorenstein", r.gorenstein},
         {"one_gorenstein", r.one_gorenstein},
         {"zero_gorenstein", r.zero_gorenstein},
         {"hereditary", r.hereditary},
         {"gorenstein_dim_bound", r.gorenstein_dim_bound ? Json(*r.gorenstein_dim_bound) : Json("n/a")}};
  if (!explain) return j;
  j["aut_orders"] = r.aut_orders;
  Json w = Json::array();
  for (const auto& x : r.projectivity_witnesses) w.push_back({{"morphism", x.morphism}, {"left", x.left}, {"right", x.right}});
  j["projectivity_witnesses"] = std::move(w);
  if (r.freeness_counterexample) {
    const auto& c = *r.freeness_counterexample;
    j["freeness_counterexample"] = {{"morphism", c.morphism},
                                    {"a", {{"first", c.first_a}, {"second", c.second_a}}},
                                    {"b", {{"first", c.first_b}, {"second", c.second_b}}}};
  } else {
    j["freeness_counterexample"] = nullptr;
  }
  Json ledger = Json::array();
  for (const auto& e : r.m_star)
    ledger.push_back({{"t", e.t},
                      {"dim", e.dim},
                      {"phi_domain_dim", e.phi_domain_dim},
                      {"projective", e.projective ? Json(*e.projective) : Json(nullptr)}});
  j["m_star"] = std::move(ledger);
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  const std::string what = "report";
  only_keys(j,
            {"characteristic", "is_ei", "is_skeletal", "ordering", "projective", "witness", "free", "gorenstein",
             "one_gorenstein", "zero_gorenstein", "hereditary", "gorenstein_dim_bound", "aut_orders",
             "projectivity_witnesses", "freeness_counterexample", "m_star"},
            what);
  auto flag = [&](const char* key) {
    const Json& v = need(j, key, what);
    if (!v.is_boolean()) throw ParseError(std::string("report: '") + key + "' must be a boolean");
    return v.get<bool>();
  };
  ClassificationReport r;
  r.characteristic = static_cast<std::uint32_t>(count(need(j, "characteristic", what), "characteristic"));
  r.is_ei = flag("is_ei");
  r.is_skeletal = flag("is_skeletal");
  r.ordering = strings(need(j, "ordering", what), "ordering");
  r.projective = flag("projective");
  r.free = flag("free");
  r.gorenstein = flag("gorenstein");
  r.one_gorenstein = flag("one_gorenstein");
  r.zero_gorenstein = flag("zero_gorenstein");
  r.hereditary = flag("hereditary");
  const Json& w = need(j, "witness", what);
  if (!w.is_null() && !w.is_string()) throw ParseError("report: 'witness' must be a string or null");
  const Json& b = need(j, "gorenstein_dim_bound", what);
  if (b.is_string()) {
    if (b.get<std::string>() != "n/a") throw ParseError("report: bound must be an integer or \"n/a\"");
  } else {
    r.gorenstein_dim_bound = count(b, "gorenstein_dim_bound");
  }
  if (auto it = j.find("aut_orders"); it != j.end())
    for (const auto& x : *it) r.aut_orders.push_back(count(x, "aut_orders"));
  if (auto it = j.find("projectivity_witnesses"); it != j.end()) {
    if (!it->is_array()) throw ParseError("report: witnesses must be an array");
    for (const auto& x : *it)
      r.projectivity_witnesses.push_back({str(need(x, "morphism", what), "witness"), count(need(x, "left", what), "left"),
                                          count(need(x, "right", what), "right")});
  } else if (w.is_string()) {
    r.projectivity_witnesses.push_back({w.get<std::string>(), 0, 0});
  }
  if (auto it = j.find("freeness_counterexample"); it != j.end() && !it->is_null()) {
    const Json& c = *it;
    const Json& a = need(c, "a", what);
    const Json& bb = need(c, "b", what);
    r.freeness_counterexample = FactorizationWitness{
        str(need(c, "morphism", what), "counterexample"), str(need(a, "first", what), "counterexample"),
        str(need(a, "second", what), "counterexample"), str(need(bb, "first", what), "counterexample"),
        str(need(bb, "second", what), "counterexample")};
  }
  if (auto it = j.find("m_star"); it != j.end()) {
    if (!it->is_array()) throw ParseError("report: m_star must be an array");
    for (const auto& e : *it) {
      MStarEntry m{count(need(e, "t", what), "t"), count(need(e, "dim", what), "dim"),
                   count(need(e, "phi_domain_dim", what), "phi_domain_dim"), std::nullopt};
      const Json& p = need(e, "projective", what);
      if (p.is_boolean()) m.projective = p.get<bool>();
      else if (!p.is_null()) throw ParseError("report: m_star projective must be a boolean or null");
      r.m_star.push_back(m);
    }
  }
  return r;
}

Json verdict_to_json(const GorensteinVerdict& v, std::size_t cap, std::optional<bool> agrees) {
  Json j{{"left", dimension_json(v.left)},
         {"right", dimension_json(v.right)},
         {"gldim", dimension_json(v.global)},
         {"cap", cap},
         {"gorenstein", v.gorenstein}};
  if (agrees) j["agrees"] = *agrees;
  return j;
}

template Json algebra_to_json(const FiniteDimAlgebra<PrimeField>&);
template Json algebra_to_json(const FiniteDimAlgebra<RationalField>&);
template FiniteDimAlgebra<PrimeField> algebra_from_json(const Json&, const PrimeField&);
template FiniteDimAlgebra<RationalField> algebra_from_json(const Json&, const RationalField&);

}  // namespace eicat
