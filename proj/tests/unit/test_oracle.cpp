#include <doctest.h>

#include "eicat/classifier.hpp"
#include "eicat/oracle.hpp"
#include "eicat/triangular.hpp"
#include "helpers.hpp"

using namespace eicat;
using namespace testing;

namespace {

template <class F>
FiniteDimAlgebra<F> cat_algebra(const FiniteCategory& c, const F& f) {
  return algebra_from_category(c, f);
}

template <class F>
ModuleRep<F> direct_sum(const ModuleRep<F>& a, const ModuleRep<F>& b) {
  ModuleRep<F> m{a.field, a.dim + b.dim, {}};
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    SparseMatrix<F> s(m.dim, m.dim);
    for (std::size_t c = 0; c < a.dim; ++c) s.set_column(c, a.action[i].column(c));
    for (std::size_t c = 0; c < b.dim; ++c) {
      auto col = b.action[i].column(c);
      for (auto& [r, x] : col) r += a.dim;
      s.set_column(a.dim + c, col);
    }
    m.action.push_back(s);
  }
  return m;
}

template <class F>
bool same_products(const FiniteDimAlgebra<F>& a, const FiniteDimAlgebra<F>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("algebra_from_category examples") {
  PrimeField f(2);
  CHECK(cat_algebra(examples::z2(), f).dim() == 2);
  const auto a3 = cat_algebra(examples::chain_a3(), f);
  CHECK(a3.dim() == 6);
  CHECK_FALSE(a3.associativity_violation());
  CHECK(a3.idempotents().size() == 3);
}

TEST_CASE("opposite") {
  RationalField q;
  const auto z = cat_algebra(group_category(GroupTable::cyclic(3)), q);
  CHECK(same_products(opposite(z), z));
  for (const auto& e : small_corpus()) {
    const auto a = cat_algebra(e.category, PrimeField(2));
    CHECK(same_products(opposite(opposite(a)), a));
    CHECK(radical(opposite(a)).dim() == radical(a).dim());
  }
  // the chain algebra reversed is the chain algebra of the opposite poset
  const auto a3 = cat_algebra(examples::chain_a3(), q);
  const auto op = opposite(a3);
  CHECK(op.product(morphism(examples::chain_a3(), "x->y"), morphism(examples::chain_a3(), "y->z")).size() == 1);
  CHECK(op.product(morphism(examples::chain_a3(), "y->z"), morphism(examples::chain_a3(), "x->y")).empty());
}

TEST_CASE("radical examples") {
  RationalField q;
  const auto qz2 = cat_algebra(examples::z2(), q);
  CHECK(radical(qz2).dim() == 0);

  PrimeField f2(2);
  const auto z2 = examples::z2();
  const auto fz2 = cat_algebra(z2, f2);
  const auto r = radical(fz2);
  CHECK(r.dim() == 1);
  std::vector<std::uint32_t> one_plus_g{1, 1};
  CHECK(r.contains(std::span<const std::uint32_t>(one_plus_g)));

  const auto a3 = cat_algebra(examples::chain_a3(), q);
  const auto ra3 = radical(a3);
  CHECK(ra3.dim() == 3);
  const auto& c = examples::chain_a3();
  for (const char* name : {"x->y", "y->z", "x->z"})
    CHECK(ra3.contains(std::span<const mpq_class>(a3.basis_vector(morphism(c, name)))));
}

TEST_CASE("top_module examples") {
  RationalField q;
  const auto qz2 = cat_algebra(examples::z2(), q);
  CHECK(top_module(qz2).dim == 2);
  PrimeField f2(2);
  const auto fz2 = cat_algebra(examples::z2(), f2);
  const auto t = top_module(fz2);
  CHECK(t.dim == 1);
  for (const auto& s : t.action) CHECK(s.dense(f2) == Matrix<PrimeField>::identity(f2, 1));
  for (const auto& e : small_corpus()) {
    const auto a = cat_algebra(e.category, f2);
    CHECK(top_module(a).dim == a.dim() - radical(a).dim());
  }
}

TEST_CASE("free_resolution examples") {
  PrimeField f2(2);
  const auto fz2 = cat_algebra(examples::z2(), f2);
  const auto reg = regular_module(fz2);
  const auto free = free_resolution(fz2, direct_sum(reg, reg), 4);
  CHECK(free.complete);
  CHECK(free.ranks() == std::vector<std::size_t>{2});

  const auto k = trivial_at(examples::z2(), 0, f2);
  const auto periodic = free_resolution(fz2, k, 5);
  CHECK_FALSE(periodic.complete);
  REQUIRE(periodic.degrees.size() >= 5);
  for (auto r : periodic.ranks()) CHECK(r == 1);
  CHECK(periodic.exact());

  RationalField q;
  const auto& c = examples::chain_a3();
  const auto a3 = cat_algebra(c, q);
  const auto sx = trivial_at(c, *c.find_object("x"), q);
  const auto res = free_resolution(a3, sx, 4);
  CHECK(res.complete);
  CHECK(res.degrees.size() <= 2);
}

TEST_CASE("ext_dims examples") {
  PrimeField f2(2);
  const auto fz2 = cat_algebra(examples::z2(), f2);
  const auto k = trivial_at(examples::z2(), 0, f2);
  CHECK(ext_dims(fz2, k, k, 6) == std::vector<std::size_t>(7, 1));
  const auto ereg = ext_dims(fz2, regular_module(fz2), k, 3);
  CHECK(ereg == std::vector<std::size_t>{1, 0, 0, 0});

  // Ext¹ between simples of the chain is nonzero exactly along covers
  RationalField q;
  const auto& c = examples::chain_a3();
  const auto a3 = cat_algebra(c, q);
  const std::vector<std::string> objs{"x", "y", "z"};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto si = trivial_at(c, *c.find_object(objs[i]), q);
      const auto sj = trivial_at(c, *c.find_object(objs[j]), q);
      const auto e = ext_dims(a3, si, sj, 2);
      CAPTURE(objs[i]);
      CAPTURE(objs[j]);
      CHECK(e[0] == (i == j ? 1u : 0u));
      CHECK(e[1] == (j == i + 1 ? 1u : 0u));
      CHECK(e[2] == 0);
    }
}

TEST_CASE("injective and global dimension examples") {
  PrimeField f2(2);
  RationalField q;
  const auto fz2 = cat_algebra(examples::z2(), f2);
  CHECK(injective_dimension(fz2, Side::Left, 8) == DimensionVerdict{0, 8});
  CHECK(injective_dimension(fz2, Side::Right, 8) == DimensionVerdict{0, 8});
  CHECK_FALSE(global_dimension(fz2, 8).finite());
  CHECK(global_dimension(fz2, 8).to_string() == ">8");

  const auto d = cat_algebra(examples::diamond(), q);
  CHECK(injective_dimension(d, Side::Left, 8) == DimensionVerdict{2, 8});
  CHECK(injective_dimension(d, Side::Right, 8) == DimensionVerdict{2, 8});

  const auto st = cat_algebra(examples::stabilized_alpha(), f2);
  CHECK_FALSE(injective_dimension(st, Side::Left, 8).finite());

  CHECK(global_dimension(cat_algebra(examples::z2(), q), 8) == DimensionVerdict{0, 8});
  CHECK(global_dimension(cat_algebra(examples::chain_a3(), q), 8) == DimensionVerdict{1, 8});
}

TEST_CASE("is_module_projective examples") {
  PrimeField f2(2);
  const auto fz2 = cat_algebra(examples::z2(), f2);
  CHECK(is_module_projective(fz2, regular_module(fz2)));
  CHECK_FALSE(is_module_projective(fz2, trivial_at(examples::z2(), 0, f2)));
}

TEST_CASE("is_gorenstein_oracle examples") {
  PrimeField f2(2);
  RationalField q;
  const auto z = is_gorenstein_oracle(cat_algebra(examples::z2(), f2), 8);
  CHECK(z.gorenstein);
  CHECK(z.left == DimensionVerdict{0, 8});
  CHECK(z.right == DimensionVerdict{0, 8});

  const auto d = is_gorenstein_oracle(cat_algebra(examples::diamond(), q), 8);
  CHECK(d.gorenstein);
  CHECK(d.left == DimensionVerdict{2, 8});

  const auto st = is_gorenstein_oracle(cat_algebra(examples::stabilized_alpha(), f2), 8);
  CHECK_FALSE(st.gorenstein);
  CHECK(st.left.to_string() == ">8");
  CHECK(st.right.to_string() == ">8");
}

TEST_CASE("resolutions: d∘d = 0, exactness, independence of generator choice") {
  PrimeField f3(3);
  for (const auto& e : small_corpus()) {
    CAPTURE(e.name);
    HomologicalOracle<PrimeField> o(cat_algebra(e.category, f3));
    const auto& top = o.top();
    const auto t0 = o.resolve(top, 4, 0);
    const auto t1 = o.resolve(top, 4, 12345);
    CHECK(o.boundaries_compose_to_zero(top, t0));
    CHECK(o.boundaries_compose_to_zero(top, t1));
    CHECK(t0.exact());
    CHECK(t1.exact());
    CHECK(o.ext_dims(t0, top, 3) == o.ext_dims(t1, top, 3));
    CHECK(o.ext_dims(t0, o.regular(), 3) == o.ext_dims(t1, o.regular(), 3));
  }
}

TEST_CASE("Zaks equality on the corpus") {
  for (int ch : {0, 2, 3}) {
    for (const auto& e : small_corpus()) {
      CAPTURE(e.name);
      CAPTURE(ch);
      with_field(FieldSpec(ch), [&](const auto& f) {
        GorensteinVerdict v;
        CHECK_NOTHROW(v = is_gorenstein_oracle(cat_algebra(e.category, f), 8));
        if (v.left.finite() && v.right.finite()) CHECK(v.left == v.right);
        CHECK(v.gorenstein == (v.left.finite() && v.right.finite()));
      });
    }
  }
}

TEST_CASE("Iwanaga consistency for 0- and 1-Gorenstein instances") {
  constexpr std::size_t cap = 6;
  for (int ch : {0, 2, 3}) {
    for (const auto& e : small_corpus()) {
      const auto report = classify(e.category, FieldSpec(ch));
      if (!report.one_gorenstein) continue;
      const std::size_t m = report.zero_gorenstein ? 0 : 1;
      CAPTURE(e.name);
      CAPTURE(ch);
      with_field(FieldSpec(ch), [&](const auto& f) {
        HomologicalOracle a(cat_algebra(e.category, f));
        std::vector<ModuleRep<std::decay_t<decltype(f)>>> modules{a.top(), a.regular(), dual_module(regular_module(opposite(a.algebra())))};
        for (ObjectId x = 0; x < e.category.object_count(); ++x) modules.push_back(trivial_at(e.category, x, f));
        for (const auto& mod : modules) {
          const auto ext = a.ext_dims(mod, a.top(), cap);
          if (ext[m + 1] != 0) continue;
          for (std::size_t i = m + 1; i <= cap; ++i) CHECK(ext[i] == 0);
        }
        // the regular module is injective up to degree m: Ext^{>m}(top, A) = 0
        const auto id = a.injective_dimension(a.regular(), cap);
        CHECK(id.at_most(m));
      });
    }
  }
}
