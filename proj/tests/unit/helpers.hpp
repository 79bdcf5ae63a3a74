#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eicat/algebra.hpp"
#include "eicat/category.hpp"
#include "eicat/constructors.hpp"
#include "eicat/presentation.hpp"

namespace testing {

using namespace eicat;

inline Presentation present(const FiniteCategory& c) { return admissible_order(skeletalize(c).category); }

inline MorphismId morphism(const FiniteCategory& c, const std::string& name) {
  auto m = c.find_morphism(name);
  if (!m) throw std::invalid_argument("no morphism " + name);
  return *m;
}

inline std::vector<std::string> ordering_names(const Presentation& p) {
  std::vector<std::string> out;
  for (auto x : p.ordering()) out.push_back(p.category().object_name(x));
  return out;
}

// Thin category of a preorder: leq[a][b] means one morphism a -> b.
inline FiniteCategory thin_category(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq) {
  RawCategory raw;
  raw.objects = names;
  auto name = [&](std::size_t a, std::size_t b) { return a == b ? "id_" + names[a] : names[a] + "->" + names[b]; };
  const std::size_t n = names.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq[a][b]) raw.morphisms.push_back({name(a, b), names[a], names[b], a == b});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && a != b && b != c) raw.composition.push_back({name(b, c), name(a, b), name(a, c)});
  return validate(raw);
}

// Two isomorphic objects and nothing else.
inline FiniteCategory indiscrete2() { return thin_category({"u", "v"}, {{true, true}, {true, true}}); }

// Module of an EI category algebra: Aut(x) acts trivially at x, everything else by zero.
template <class F>
ModuleRep<F> trivial_at(const FiniteCategory& c, ObjectId x, const F& f) {
  ModuleRep<F> m{f, 1, {}};
  for (MorphismId g = 0; g < c.morphism_count(); ++g)
    m.action.push_back(c.src(g) == x && c.dst(g) == x ? SparseMatrix<F>::identity(f, 1) : SparseMatrix<F>(1, 1));
  return m;
}

inline std::filesystem::path temp_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() / ("eicat-unit-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name, const std::string& text) {
  auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

inline const std::vector<CorpusEntry>& small_corpus() {
  static const auto c = corpus(20240607, 40);
  return c;
}

}  // namespace testing
