#include <doctest.h>

#include <set>

#include "eicat/classifier.hpp"
#include "eicat/freeness.hpp"
#include "eicat/projectivity.hpp"
#include "helpers.hpp"

using namespace eicat;
using namespace testing;

TEST_CASE("posets") {
  const Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));  // transitive closure
  CHECK(p.strict_pairs().size() == 3);
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PosetError);
  using Rel = std::vector<std::pair<std::string, std::string>>;
  CHECK_THROWS_AS(Poset({"a"}, Rel{{"a", "z"}}), PosetError);
}

TEST_CASE("poset_category examples") {
  CHECK(poset_category(Poset::antichain(2)).morphism_count() == 2);
  CHECK(poset_category(Poset::chain(3)).morphism_count() == 6);
  CHECK(poset_category(Poset::diamond()).morphism_count() == 9);
}

TEST_CASE("poset_is_free examples") {
  CHECK(poset_is_free(Poset::chain(4)));
  CHECK_FALSE(poset_is_free(Poset::diamond()));
  CHECK(poset_is_free(Poset::antichain(3)));
}

TEST_CASE("transporter_category") {
  const auto p = Poset::diamond();
  const auto trivial = transporter_category(GroupAction(GroupTable::trivial(), p.elements(), {{0, 1, 2, 3}}), p);
  const auto pc = poset_category(p);
  CHECK(trivial.object_names() == pc.object_names());
  CHECK(trivial.morphism_count() == pc.morphism_count());
  for (ObjectId x = 0; x < 4; ++x)
    for (ObjectId y = 0; y < 4; ++y) CHECK(trivial.hom(x, y).size() == pc.hom(x, y).size());

  const auto sd = examples::swapped_diamond();
  CHECK(is_ei(sd).ei);
  const auto skel = skeletalize(sd);
  CHECK(skel.category.object_count() == 3);  // y1 ≅ y2
  const auto pres = admissible_order(skel.category);
  CHECK(pres.aut(1).order() == 1);
  for (int ch : {0, 2, 3}) CHECK(is_projective_over(pres, FieldSpec(ch)).projective);

  // swapping a chain's ends is not order preserving
  CHECK_THROWS_AS(transporter_category(GroupAction(GroupTable::cyclic(2), Poset::chain(2).elements(), {{0, 1}, {1, 0}}), Poset::chain(2)),
                  NotOrderPreserving);
}

TEST_CASE("group_category examples") {
  const auto t = group_category(GroupTable::trivial());
  CHECK(t.object_count() == 1);
  CHECK(t.morphism_count() == 1);
  CHECK(group_category(GroupTable::cyclic(2)).morphism_count() == 2);
}

TEST_CASE("biset_category examples") {
  CHECK(examples::regular_orbit().morphism_count() == 5);
  CHECK(examples::stabilized_alpha().morphism_count() == 4);

  BisetSpec empty;
  empty.objects = {"a", "b"};
  empty.groups = {GroupTable::cyclic(2), GroupTable::cyclic(3)};
  const auto u = biset_category(empty);
  CHECK(u.morphism_count() == 5);
  CHECK(u.hom(0, 1).empty());
  CHECK(u.hom(1, 0).empty());

  // three objects z <- y <- x with a composite that breaks associativity:
  // Aut(y) = Z/2 and Hom(x, y) = {s} fixed by g, Hom(y, z) = {t0, t1} with t0∘g = t1,
  // but t0∘s = u0 and t1∘s = u1 differ although g∘s = s.
  BisetSpec bad;
  bad.objects = {"x", "y", "z"};
  bad.groups = {GroupTable::trivial(), GroupTable::cyclic(2), GroupTable::trivial()};
  bad.homs.push_back({0, 1, {"s"}, {{0}, {0}}, {{0}}});
  bad.homs.push_back({1, 2, {"t0", "t1"}, {{0, 1}}, {{0, 1}, {1, 0}}});
  bad.homs.push_back({0, 2, {"u0", "u1"}, {{0, 1}}, {{0}, {1}}});
  bad.compositions.push_back({1, 0, {{0}, {1}}});
  CHECK_THROWS_AS(biset_category(bad), AssociativityFailure);
}

TEST_CASE("orbit_category") {
  const auto z2 = GroupTable::cyclic(2);
  const auto c = orbit_category(z2, {{0}, {0, 1}}, {"1", "G"});
  CHECK(is_ei(c).ei);
  // Hom(G/1, G/1) = Z/2, Hom(G/1, G/G) = 1 map, Hom(G/G, G/G) = 1
  CHECK(c.morphism_count() == 4);
}

TEST_CASE("product_category") {
  const auto p = product_category(examples::chain_a3(), examples::z2());
  CHECK(p.object_count() == 3);
  CHECK(p.morphism_count() == 12);
  CHECK(is_ei(p).ei);
}

TEST_CASE("corpus: deterministic, valid, varied") {
  const auto a = corpus(7, 30);
  const auto b = corpus(7, 30);
  REQUIRE(a.size() == 30);
  REQUIRE(b.size() == 30);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].category.to_raw().composition == b[i].category.to_raw().composition);
  }
  CHECK(a[0].name == "chain_a3");

  const CorpusLimits limits;
  bool free = false, non_free = false, projective = false, non_projective = false;
  std::set<std::string> families;
  for (const auto& e : corpus(99, 100)) {
    families.insert(e.family);
    CHECK_NOTHROW(validate(e.category.to_raw()));
    CHECK(is_ei(e.category).ei);
    CHECK(e.category.object_count() <= limits.max_objects);
    const auto p = present(e.category);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.aut(i).order() <= limits.max_group_order);
    const bool f = is_free(p).free;
    (f ? free : non_free) = true;
    const bool pr = is_projective_over(p, FieldSpec(2)).projective;
    (pr ? projective : non_projective) = true;
    if (e.family == "poset") {
      REQUIRE(e.poset);
      CHECK(poset_is_free(*e.poset) == f);
    }
    if (e.family == "transporter") {
      REQUIRE(e.poset);
      CHECK(poset_is_free(*e.poset) == f);
    }
  }
  CHECK(free);
  CHECK(non_free);
  CHECK(projective);
  CHECK(non_projective);
  CHECK(families.size() >= 5);
}

TEST_CASE("named groups") {
  CHECK(named_group("S3").order() == 6);
  CHECK(named_group("Z5").order() == 5);
  CHECK_THROWS(named_group("Z9"));
}
