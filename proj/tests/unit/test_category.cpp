#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"

using namespace eicat;
using namespace testing;

namespace {

bool has_kind(const CategoryError& e, ViolationKind k) {
  return std::any_of(e.violations().begin(), e.violations().end(), [&](const Violation& v) { return v.kind == k; });
}

ViolationKind first_error(const RawCategory& raw, ViolationKind expected) {
  try {
    validate(raw);
  } catch (const CategoryError& e) {
    return has_kind(e, expected) ? expected : e.violations().front().kind;
  }
  FAIL("validate accepted an invalid category");
  return expected;
}

}  // namespace

TEST_CASE("validate: one object with its identity") {
  RawCategory raw{{"*"}, {{"id", "*", "*", true}}, {}};
  const auto c = validate(raw);
  CHECK(c.object_count() == 1);
  CHECK(c.morphism_count() == 1);
  CHECK(c.is_identity(0));
}

TEST_CASE("validate: errors") {
  RawCategory bad_endpoints{{"x", "y"},
                            {{"id_x", "x", "x", true}, {"id_y", "y", "y", true}, {"f", "x", "y", false}},
                            {{"f", "f", "f"}}};
  CHECK(first_error(bad_endpoints, ViolationKind::BadEndpoints) == ViolationKind::BadEndpoints);

  RawCategory missing{{"x", "y"}, {{"id_x", "x", "x", true}, {"f", "x", "y", false}}, {}};
  CHECK(first_error(missing, ViolationKind::MissingIdentity) == ViolationKind::MissingIdentity);

  // g∘g undefined
  RawCategory incomplete{{"*"}, {{"id", "*", "*", true}, {"g", "*", "*", false}}, {}};
  CHECK(first_error(incomplete, ViolationKind::IncompleteComposition) == ViolationKind::IncompleteComposition);

  // a∘a = b, a∘b = id, b∘a = a breaks associativity: (a∘a)∘a = b∘a = a but a∘(a∘a) = a∘b = id
  RawCategory nonassoc{{"*"},
                       {{"id", "*", "*", true}, {"a", "*", "*", false}, {"b", "*", "*", false}},
                       {{"a", "a", "b"}, {"a", "b", "id"}, {"b", "a", "a"}, {"b", "b", "b"}}};
  CHECK(first_error(nonassoc, ViolationKind::NonAssociative) == ViolationKind::NonAssociative);
}

TEST_CASE("validate: chain poset category, checked against all composable triples") {
  const auto c = examples::chain_a3();
  CHECK(c.morphism_count() == 6);
  for (MorphismId f = 0; f < c.morphism_count(); ++f)
    for (MorphismId g = 0; g < c.morphism_count(); ++g)
      for (MorphismId h = 0; h < c.morphism_count(); ++h) {
        if (c.src(f) != c.dst(g) || c.src(g) != c.dst(h)) continue;
        CHECK(c.compose(c.compose(f, g), h) == c.compose(f, c.compose(g, h)));
      }
}

TEST_CASE("is_ei") {
  CHECK(is_ei(examples::z2()).ei);
  CHECK(is_ei(examples::diamond()).ei);
  RawCategory idem{{"*"}, {{"id", "*", "*", true}, {"e", "*", "*", false}}, {{"e", "e", "e"}}};
  const auto c = validate(idem);
  const auto r = is_ei(c);
  CHECK_FALSE(r.ei);
  REQUIRE(r.witness);
  CHECK(c.morphism_name(*r.witness) == "e");
  CHECK_THROWS_AS(admissible_order(c), OrderError);
}

TEST_CASE("skeletalize") {
  const auto chain = examples::chain_a3();
  const auto s = skeletalize(chain);
  CHECK(is_skeletal(chain));
  CHECK(s.category.object_names() == chain.object_names());
  CHECK(s.category.morphism_count() == chain.morphism_count());

  const auto two = indiscrete2();
  CHECK_FALSE(is_skeletal(two));
  const auto t = skeletalize(two);
  CHECK(t.category.object_count() == 1);
  CHECK(t.category.object_name(0) == "u");
  CHECK(t.object_map == std::vector<ObjectId>{0, 0});

  // idempotent up to renaming
  const auto again = skeletalize(t.category);
  CHECK(again.category.object_count() == t.category.object_count());
  CHECK(again.category.morphism_count() == t.category.morphism_count());
}

TEST_CASE("skeletalize keeps the earliest representative") {
  // x <= y ≅ y' <= z
  const auto c = thin_category({"x", "y", "y'", "z"}, {{true, true, true, true},
                                                       {false, true, true, true},
                                                       {false, true, true, true},
                                                       {false, false, false, true}});
  const auto s = skeletalize(c);
  CHECK(s.category.object_names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.object_map == std::vector<ObjectId>{0, 1, 1, 2});
  CHECK(s.category.morphism_count() == 6);
}

TEST_CASE("admissible order examples") {
  CHECK(ordering_names(admissible_order(examples::chain_a3())) == std::vector<std::string>{"z", "y", "x"});
  CHECK(admissible_order(examples::z2()).size() == 1);
  CHECK(ordering_names(admissible_order(examples::diamond())) == std::vector<std::string>{"w", "y1", "y2", "x"});
  CHECK_THROWS_AS(admissible_order(indiscrete2()), OrderError);
}

TEST_CASE("presentation_with_order rejects non-admissible orders") {
  const auto c = examples::chain_a3();
  CHECK_THROWS_AS(presentation_with_order(c, {0, 1, 2}), OrderError);
  CHECK_NOTHROW(presentation_with_order(c, {2, 1, 0}));
}

TEST_CASE("corpus presentations: Hom(x_i, x_j) empty for i < j, Hom-sets closed under Aut actions") {
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    const auto p = present(e.category);
    const auto& c = p.category();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        CHECK(p.hom(i, j).empty());
        const auto& h = p.hom(j, i);
        for (MorphismId a : h) {
          for (std::size_t g = 0; g < p.aut(i).order(); ++g)
            CHECK(std::find(h.begin(), h.end(), c.compose(p.aut_element(i, g), a)) != h.end());
          for (std::size_t g = 0; g < p.aut(j).order(); ++g)
            CHECK(std::find(h.begin(), h.end(), c.compose(a, p.aut_element(j, g))) != h.end());
        }
      }
    // every endomorphism is an automorphism
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.hom(i, i).size() == p.aut(i).order());
  }
}

TEST_CASE("full_subcategory and inverse") {
  const auto c = examples::diamond();
  const std::vector<ObjectId> keep{0, 3};
  const auto s = full_subcategory(c, keep);
  CHECK(s.object_count() == 2);
  CHECK(s.morphism_count() == 3);
  const auto z = examples::z2();
  for (MorphismId f = 0; f < z.morphism_count(); ++f) {
    const auto inv = inverse(z, f);
    REQUIRE(inv);
    CHECK(z.is_identity(z.compose(f, *inv)));
  }
  CHECK_FALSE(inverse(c, morphism(c, "x->w")));
}
