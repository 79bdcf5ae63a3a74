#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "eicat/classifier.hpp"
#include "eicat/triangular.hpp"
#include "helpers.hpp"

using namespace eicat;
using namespace testing;

namespace {

struct Flags {
  bool projective, free, gorenstein, one_gorenstein, zero_gorenstein, hereditary;
  std::optional<std::size_t> bound;
  friend bool operator==(const Flags&, const Flags&) = default;
};

Flags flags(const ClassificationReport& r) {
  return {r.projective, r.free, r.gorenstein, r.one_gorenstein, r.zero_gorenstein, r.hereditary, r.gorenstein_dim_bound};
}

GorensteinVerdict oracle(const FiniteCategory& c, int ch) {
  return with_field(FieldSpec(ch), [&](const auto& f) { return is_gorenstein_oracle(algebra_from_category(c, f), 8); });
}

}  // namespace

TEST_CASE("classify examples") {
  const auto z = classify(examples::z2(), FieldSpec(2));
  CHECK(z.gorenstein);
  CHECK(z.one_gorenstein);
  CHECK(z.zero_gorenstein);
  CHECK_FALSE(z.hereditary);

  for (int ch : {0, 2, 3}) {
    const auto d = classify(examples::diamond(), FieldSpec(ch));
    CHECK(d.gorenstein);
    CHECK_FALSE(d.one_gorenstein);
    CHECK_FALSE(d.free);
    REQUIRE(d.freeness_counterexample);
    CHECK(d.freeness_counterexample->morphism == "x->w");
    CHECK_FALSE(d.gorenstein_dim_bound);
  }

  const auto st = classify(examples::stabilized_alpha(), FieldSpec(2));
  CHECK_FALSE(st.gorenstein);
  REQUIRE(st.projectivity_witnesses.size() == 1);
  CHECK(st.projectivity_witnesses[0].morphism == "alpha");
  CHECK(st.projectivity_witnesses[0].right == 2);

  const auto st3 = classify(examples::stabilized_alpha(), FieldSpec(3));
  CHECK(st3.hereditary);
  CHECK(st3.gorenstein_dim_bound == std::optional<std::size_t>{1});

  const auto chain = classify(examples::chain_a3(), FieldSpec(0));
  CHECK(chain.ordering == std::vector<std::string>{"z", "y", "x"});
  CHECK(chain.m_star.size() == 2);
  CHECK(chain.hereditary);
}

TEST_CASE("classify rejects non-EI input") {
  RawCategory idem{{"*"}, {{"id", "*", "*", true}, {"e", "*", "*", false}}, {{"e", "e", "e"}}};
  CHECK_THROWS_AS(classify(validate(idem), FieldSpec(0)), OrderError);
}

TEST_CASE("gorenstein_bound examples") {
  const std::vector<std::size_t> d00{0, 0}, d01{0, 1}, d000{0, 0, 0}, d1{3}, d12{1, 2}, empty;
  CHECK(gorenstein_bound(d00, true) == 1);
  CHECK(gorenstein_bound(d01, true) == 1);
  CHECK(gorenstein_bound(d000, true) == 1);
  CHECK(gorenstein_bound(d1, true) == 3);
  CHECK(gorenstein_bound(d12, true) == 2);
  CHECK_THROWS_AS(gorenstein_bound(d00, false), HypothesisViolated);
  CHECK_THROWS_AS(gorenstein_bound(empty, true), std::invalid_argument);
}

TEST_CASE("gorenstein_bound never exceeds max + 1") {
  std::vector<std::size_t> d;
  for (std::size_t n = 1; n <= 5; ++n) {
    d.assign(n, 0);
    // all sequences over {0,1,2} of length n
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 3) d[i] = c % 3;
      const auto b = gorenstein_bound(d, true);
      CHECK(b <= *std::max_element(d.begin(), d.end()) + 1);
      CHECK(b >= *std::max_element(d.begin(), d.end()));
    }
  }
}

TEST_CASE("flag implications on the corpus") {
  for (int ch : {0, 2, 3, 5}) {
    for (const auto& e : small_corpus()) {
      CAPTURE(e.name);
      const auto r = classify(e.category, FieldSpec(ch));
      if (r.one_gorenstein) CHECK(r.gorenstein);
      if (r.hereditary) CHECK(r.one_gorenstein);
      if (r.zero_gorenstein) CHECK(r.one_gorenstein);
      CHECK(r.gorenstein == r.projective);
      if (r.gorenstein_dim_bound) CHECK(*r.gorenstein_dim_bound <= 1);
      CHECK(r.m_star.size() + 1 == std::max<std::size_t>(r.ordering.size(), 1));
    }
  }
}

TEST_CASE("classification does not depend on the tie-breaking order") {
  for (const auto& e : small_corpus()) {
    const auto skel = skeletalize(e.category).category;
    std::vector<ObjectId> perm(skel.object_count());
    std::iota(perm.begin(), perm.end(), ObjectId{0});
    for (int ch : {0, 2}) {
      const auto base = flags(classify(skel, FieldSpec(ch)));
      do {
        CAPTURE(e.name);
        CHECK(flags(classify(skel, FieldSpec(ch), perm)) == base);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("classification and oracle verdicts are invariant under skeletalization") {
  // x <= y ≅ y' <= z, a diamond with a doubled top, and a product with two isomorphic objects
  const auto doubled_chain = thin_category({"x", "y", "y'", "z"}, {{true, true, true, true},
                                                                   {false, true, true, true},
                                                                   {false, true, true, true},
                                                                   {false, false, false, true}});
  const auto doubled_top = thin_category({"x", "y1", "y2", "w", "w'"}, {{true, true, true, true, true},
                                                                        {false, true, false, true, true},
                                                                        {false, false, true, true, true},
                                                                        {false, false, false, true, true},
                                                                        {false, false, false, true, true}});
  const std::vector<FiniteCategory> inputs{doubled_chain, doubled_top,
                                           product_category(examples::regular_orbit(), indiscrete2()),
                                           product_category(examples::stabilized_alpha(), indiscrete2())};
  for (const auto& c : inputs) {
    const auto s = skeletalize(c).category;
    CHECK(s.object_count() < c.object_count());
    for (int ch : {0, 2, 3}) {
      const auto rc = classify(c, FieldSpec(ch));
      const auto rs = classify(s, FieldSpec(ch));
      CHECK_FALSE(rc.is_skeletal);
      CHECK(flags(rc) == flags(rs));
      const auto vc = oracle(c, ch);
      const auto vs = oracle(s, ch);
      CHECK(vc.left == vs.left);
      CHECK(vc.right == vs.right);
      CHECK(vc.global == vs.global);
      CHECK(compare_with_oracle(rc, vc).all());
    }
  }
}

TEST_CASE("transporter categories: projective everywhere, 1-Gorenstein iff the poset is free") {
  for (const auto& e : small_corpus()) {
    if (e.family != "transporter" || !e.poset) continue;
    CAPTURE(e.name);
    for (int ch : {0, 2, 3}) {
      const auto r = classify(e.category, FieldSpec(ch));
      CHECK(r.projective);
      CHECK(r.one_gorenstein == poset_is_free(*e.poset));
    }
  }
  const auto sd = classify(examples::swapped_diamond(), FieldSpec(2));
  CHECK(sd.projective);
  CHECK_FALSE(sd.one_gorenstein);
}

TEST_CASE("group categories are 0-Gorenstein, hereditary iff the order is invertible") {
  for (const auto& name : named_group_names()) {
    const auto g = named_group(name);
    for (int ch : {0, 2, 3, 5}) {
      const auto r = classify(group_category(g), FieldSpec(ch));
      CHECK(r.zero_gorenstein);
      CHECK(r.hereditary == FieldSpec(ch).invertible(static_cast<std::int64_t>(g.order())));
    }
  }
}

TEST_CASE("compare_with_oracle") {
  ClassificationReport r;
  r.gorenstein = true;
  r.one_gorenstein = true;
  GorensteinVerdict v;
  v.left = {1, 8};
  v.right = {1, 8};
  v.global = {std::nullopt, 8};
  v.gorenstein = true;
  const auto ok = compare_with_oracle(r, v);
  CHECK(ok.all());
  r.hereditary = true;
  const auto bad = compare_with_oracle(r, v);
  CHECK_FALSE(bad.hereditary);
  CHECK(bad.gorenstein);
  CHECK_FALSE(bad.all());
}
