// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eicat/classifier.hpp"
#include "eicat/cli.hpp"
#include "eicat/constructors.hpp"
#include "eicat/freeness.hpp"
#include "eicat/io.hpp"
#include "eicat/oracle.hpp"
#include "eicat/projectivity.hpp"
#include "eicat/triangular.hpp"

using namespace eicat;

namespace {

constexpr std::uint64_t kSeed = 20240607;
constexpr std::size_t kCorpusSize = 60;
constexpr std::size_t kCap = 8;
const std::vector<std::int64_t> kChars = {0, 2, 3, 5};

struct Criterion {
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string label(const std::string& name, std::int64_t ch) { return name + " @char " + std::to_string(ch); }

// cmd_classify through the CLI entry point, re-parsed against the report schema.
ClassificationReport classify_via_cli(const std::filesystem::path& file, std::int64_t ch) {
  std::ostringstream out, err;
  const int code = run_cli({"eicat", "classify", file.string(), "--char", std::to_string(ch), "--explain"}, out, err);
  if (code != 0) throw std::runtime_error("classify exited with " + std::to_string(code) + ": " + err.str());
  return report_from_json(Json::parse(out.str()));
}

template <class F>
struct Oracles {
  FiniteDimAlgebra<F> algebra;
  HomologicalOracle<F> left;
  HomologicalOracle<F> right;

  explicit Oracles(FiniteDimAlgebra<F> a)
      : algebra(std::move(a)), left(algebra), right(opposite(algebra), left.radical()) {}
};

template <class F>
ModuleRep<F> trivial_vertex_module(const TriangularPresentation& tp, std::size_t t, const F& f) {
  const std::size_t n = tp.presentation().aut(t).order();
  ModuleRep<F> m{f, 1, {}};
  for (std::size_t g = 0; g < n; ++g) m.action.push_back(SparseMatrix<F>::identity(f, 1));
  return m;
}

struct Suite {
  Criterion c1{"1 main-theorem agreement (gorenstein flag vs oracle)"};
  Criterion c2{"2 1-Gorenstein agreement (one_gorenstein vs id <= 1 on both sides)"};
  Criterion c3{"3 hereditary agreement (hereditary vs gldim <= 1)"};
  Criterion c4{"4 named instances"};
  Criterion c5{"5 structural equivalences (freeness, M* projectivity, posets)"};
  Criterion c6{"6 homological invariant suite"};
  Criterion c7{"7 bound consistency (oracle id <= gorenstein bound)"};

  std::size_t finite_verdicts = 0, negatives = 0, positives_beyond_cap = 0, projective_runs = 0, non_free = 0;

  template <class F>
  void column_module_checks(const std::string& where, const TriangularPresentation& tp, const HomologicalOracle<F>& gamma,
                            const ColumnModule<F>& x, bool gorenstein, const std::string& what) {
    const auto rep = column_to_rep(tp, x);
    const auto pd = gamma.projective_dimension(rep, kCap);
    bool all_components_projective = true;
    for (std::size_t i = 0; i < tp.size(); ++i) {
      HomologicalOracle<F> vertex(vertex_algebra(tp, i, x.field));
      const auto pdi = vertex.projective_dimension(restrict_to_vertex(tp, x, i), kCap);
      all_components_projective = all_components_projective && pdi.finite();
      // pd of the last component is bounded by pd over Γ
      if (i + 1 == tp.size() && pd.finite())
        c6.check(pdi.finite() && *pdi.value <= *pd.value,
                 where + ": pd of last component of " + what + " is " + pdi.to_string() + " > " + pd.to_string());
    }
    if (gorenstein)
      c6.check(pd.finite() == all_components_projective,
               where + ": finite pd of " + what + " (" + pd.to_string() + ") vs component pds disagree");
  }

  template <class F>
  void run_field(const CorpusEntry& entry, const Presentation& p, std::int64_t ch, const ClassificationReport& report,
                 const F& f) {
    const std::string where = label(entry.name, ch);
    const FieldSpec field(ch);
    const auto tp = build_triangular(p, field);
    Oracles<F> o(triangular_algebra(tp, f));

    // 6: associativity and the generated algebra
    c6.check(tp.psi_associative(), where + ": psi not associative");
    c6.check(!o.algebra.associativity_violation(), where + ": structure constants not associative");

    GorensteinVerdict v;
    try {
      v = is_gorenstein_oracle(o.algebra, kCap);
      c6.check(true, "zaks");
    } catch (const ZaksViolation& e) {
      c6.check(false, where + ": " + e.what());
      return;
    }

    // 1
    const bool both_finite = v.left.finite() && v.right.finite();
    if (both_finite) {
      ++finite_verdicts;
      c1.check(report.gorenstein, where + ": oracle finite (" + v.left.to_string() + ") but classifier negative");
    }
    if (!report.gorenstein) {
      ++negatives;
      c1.check(!both_finite, where + ": classifier negative but both sides finite");
    } else if (!both_finite) {
      ++positives_beyond_cap;
    }
    // 2, 3
    c2.check(report.one_gorenstein == (v.left.at_most(1) && v.right.at_most(1)),
             where + ": one_gorenstein=" + std::to_string(report.one_gorenstein) + " but id = (" + v.left.to_string() +
                 ", " + v.right.to_string() + ")");
    c3.check(report.hereditary == v.global.at_most(1),
             where + ": hereditary=" + std::to_string(report.hereditary) + " but gldim " + v.global.to_string());

    // 5: M* projectivity for projective instances
    if (report.projective) {
      ++projective_runs;
      bool all_mstar = true;
      for (std::size_t t = 1; t < tp.size(); ++t) {
        const bool by_count = is_mstar_projective(tp, t);
        all_mstar = all_mstar && by_count;
        const auto ms = build_m_star(tp, t, f);
        HomologicalOracle<F> sub(triangular_algebra(ms.gamma_t, f));
        const bool by_ext = sub.is_projective(column_to_rep(ms.gamma_t, ms.module));
        c5.check(by_count == by_ext, where + ": M*_" + std::to_string(t) + " dimension count says " +
                                         std::to_string(by_count) + ", Ext^1 says " + std::to_string(by_ext));
      }
      c5.check(report.free == all_mstar, where + ": free=" + std::to_string(report.free) +
                                             " but all M* projective=" + std::to_string(all_mstar));
    }

    // 7
    if (report.gorenstein_dim_bound) {
      const std::size_t b = *report.gorenstein_dim_bound;
      c7.check(b <= 1, where + ": bound " + std::to_string(b) + " exceeds 1");
      c7.check(v.left.at_most(b) && v.right.at_most(b), where + ": id (" + v.left.to_string() + ", " +
                                                             v.right.to_string() + ") exceeds bound " + std::to_string(b));
    }

    // 6: column generators are projective/injective; pd bounds on generated column modules
    for (std::size_t t = 0; t < tp.size(); ++t) {
      const auto it = build_i_t(tp, t, vertex_regular(tp, t, f));
      c6.check(o.left.is_projective(column_to_rep(tp, it)), where + ": i_" + std::to_string(t) + "(R) not projective");
      const auto jt = build_j_t(tp, t, vertex_injective(tp, t, f));
      c6.check(o.right.is_projective(dual_module(column_to_rep(tp, jt))),
               where + ": j_" + std::to_string(t) + "(DR) not injective");
      const auto k = trivial_vertex_module(tp, t, f);
      column_module_checks(where, tp, o.left, build_i_t(tp, t, k), report.projective, "i_" + std::to_string(t) + "(k)");
      column_module_checks(where, tp, o.left, build_j_t(tp, t, k), report.projective, "j_" + std::to_string(t) + "(k)");
      column_module_checks(where, tp, o.left, jt, report.projective, "j_" + std::to_string(t) + "(DR)");
    }
    for (std::size_t t = 1; t < tp.size(); ++t) {
      const auto ms = build_m_star(tp, t, f);
      HomologicalOracle<F> sub(triangular_algebra(ms.gamma_t, f));
      column_module_checks(where, ms.gamma_t, sub, ms.module, report.projective, "M*_" + std::to_string(t));
    }

    // 6: resolution independence and d∘d = 0
    const auto& top = o.left.top();
    const auto r0 = o.left.resolve(top, kCap + 2, 0);
    const auto r1 = o.left.resolve(top, kCap + 2, 0x9e3779b97f4a7c15ULL);
    c6.check(o.left.boundaries_compose_to_zero(top, r0) && r0.exact(), where + ": resolution of top not exact");
    c6.check(o.left.ext_dims(r0, o.left.regular(), kCap) == o.left.ext_dims(r1, o.left.regular(), kCap),
             where + ": Ext(top, A) depends on the resolution");
    c6.check(o.left.ext_dims(r0, top, kCap) == o.left.ext_dims(r1, top, kCap),
             where + ": Ext(top, top) depends on the resolution");
  }

  void run_entry(const CorpusEntry& entry, const std::filesystem::path& dir) {
    const auto file = dir / (entry.name + ".json");
    {
      std::ofstream f(file);
      f << category_to_json(entry.category).dump();
    }
    const Presentation p = admissible_order(skeletalize(entry.category).category);

    // 5: freeness equivalences (field independent)
    const bool free = is_free(p).free;
    if (!free) ++non_free;
    c5.check(free == ufp_direct(p), entry.name + ": is_free and ufp_direct disagree");
    if (entry.poset) {
      c5.check(poset_is_free(*entry.poset) == is_free(admissible_order(poset_category(*entry.poset))).free,
               entry.name + ": poset_is_free disagrees with is_free of the poset category");
      c5.check(poset_is_free(*entry.poset) == free, entry.name + ": category freeness differs from poset freeness");
    }

    for (auto ch : kChars) {
      const auto report = classify_via_cli(file, ch);
      with_field(FieldSpec(ch), [&](auto f) { run_field(entry, p, ch, report, f); });
    }
  }

  void named_instances() {
    struct Golden {
      std::string name;
      FiniteCategory c;
      std::int64_t ch;
      std::string left, right, gldim;
      int gorenstein, one_gorenstein, hereditary;  // -1: not asserted
    };
    const std::vector<Golden> goldens = {
        {"chain A3", examples::chain_a3(), 0, "1", "1", "1", 1, 1, 1},
        {"diamond", examples::diamond(), 0, "2", "2", "2", 1, 0, 0},
        {"F2[Z/2]", examples::z2(), 2, "0", "0", ">8", 1, 1, 0},
        {"regular orbit / F2", examples::regular_orbit(), 2, "1", "1", ">8", 1, 1, 0},
        {"stabilized alpha / F2", examples::stabilized_alpha(), 2, ">8", ">8", ">8", 0, 0, 0},
        {"stabilized alpha / F3", examples::stabilized_alpha(), 3, "1", "1", "1", -1, -1, 1},
    };
    for (const auto& g : goldens) {
      const FieldSpec field(g.ch);
      const auto tp = build_triangular(admissible_order(g.c), field);
      const auto v = with_field(field, [&](auto f) { return is_gorenstein_oracle(triangular_algebra(tp, f), kCap); });
      const auto r = classify(g.c, field);
      const std::string got = v.left.to_string() + "/" + v.right.to_string() + "/" + v.global.to_string();
      c4.check(got == g.left + "/" + g.right + "/" + g.gldim,
               g.name + ": measured id/id/gldim " + got + ", expected " + g.left + "/" + g.right + "/" + g.gldim);
      auto flag = [&](int want, bool have, const char* what) {
        if (want >= 0) c4.check(have == (want == 1), g.name + ": " + what + " is " + std::to_string(have));
      };
      flag(g.gorenstein, r.gorenstein, "gorenstein");
      flag(g.one_gorenstein, r.one_gorenstein, "one_gorenstein");
      flag(g.hereditary, r.hereditary, "hereditary");
    }
  }
};

bool report(const Criterion& c) {
  const bool ok = c.failures.empty() && c.checks > 0;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << c.checks << " checks, " << c.failures.size()
            << " failures]\n";
  for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "      " << c.failures[i] << "\n";
  for (const auto& n : c.notes) std::cout << "      " << n << "\n";
  return ok;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const auto entries = corpus(kSeed, kCorpusSize);
  const auto dir = std::filesystem::temp_directory_path() / ("eicat_acceptance_" + std::to_string(kSeed));
  std::filesystem::create_directories(dir);

  Suite s;
  std::size_t max_dim = 0, max_objects = 0, max_aut = 0;
  for (const auto& e : entries) {
    max_dim = std::max(max_dim, e.category.morphism_count());
    max_objects = std::max(max_objects, e.category.object_count());
    for (ObjectId x = 0; x < e.category.object_count(); ++x)
      max_aut = std::max(max_aut, e.category.hom(x, x).size());
    try {
      s.run_entry(e, dir);
    } catch (const std::exception& ex) {
      s.c1.check(false, e.name + ": unexpected error: " + ex.what());
    }
  }
  s.named_instances();
  std::filesystem::remove_all(dir);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "corpus: " << entries.size() << " categories x " << kChars.size() << " characteristics, cap " << kCap
            << ", seed " << kSeed << "; max objects " << max_objects << ", max |Aut| " << max_aut
            << ", max algebra dim " << max_dim << "\n";
  s.c1.notes.push_back("finite verdicts: " + std::to_string(s.finite_verdicts) + ", classifier negatives: " +
                       std::to_string(s.negatives) + ", positives measured beyond cap: " +
                       std::to_string(s.positives_beyond_cap));
  s.c5.notes.push_back("non-free categories: " + std::to_string(s.non_free) + ", projective runs with M* checks: " +
                       std::to_string(s.projective_runs));

  bool ok = true;
  for (const Criterion* c : {&s.c1, &s.c2, &s.c3, &s.c4, &s.c5, &s.c6, &s.c7}) ok = report(*c) && ok;
  std::cout << "elapsed: " << secs << " s\n";
  return ok ? 0 : 1;
}
