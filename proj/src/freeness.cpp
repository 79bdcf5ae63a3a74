#include "eicat/freeness.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace eicat {

UnfactorizableTable::UnfactorizableTable(const Presentation& p)
    : n_(p.size()), flags_(p.category().morphism_count(), false), hom0_(n_ * n_) {
  const auto& c = p.category();
  // In a skeletal EI category the isomorphisms are exactly the endomorphisms.
  for (MorphismId alpha = 0; alpha < c.morphism_count(); ++alpha) {
    if (c.is_endomorphism(alpha)) continue;
    const ObjectId x = c.src(alpha), y = c.dst(alpha);
    bool factorizable = false;
    for (ObjectId z = 0; z < c.object_count() && !factorizable; ++z) {
      if (z == x || z == y) continue;  // one factor would be an automorphism
      for (MorphismId beta : c.hom(x, z)) {
        for (MorphismId gamma : c.hom(z, y)) {
          if (c.compose(gamma, beta) == alpha) {
            factorizable = true;
            break;
          }
        }
        if (factorizable) break;
      }
    }
    if (!factorizable) {
      flags_[alpha] = true;
      hom0_[p.position(x) * n_ + p.position(y)].push_back(alpha);
    }
  }
}

UnfactorizableTable unfactorizables(const Presentation& p) { return UnfactorizableTable(p); }

std::vector<MorphismId> decompose(const Presentation& p, const UnfactorizableTable& u, MorphismId alpha) {
  const auto& c = p.category();
  if (c.is_endomorphism(alpha))
    throw IsIsomorphism("decompose: '" + c.morphism_name(alpha) + "' is an isomorphism");
  const ObjectId x = c.src(alpha);
  // Breadth-first search over composites out of x, extended by one unfactorizable at a time.
  std::vector<MorphismId> parent(c.morphism_count(), kNoMorphism);
  std::vector<MorphismId> step(c.morphism_count(), kNoMorphism);
  std::vector<bool> seen(c.morphism_count(), false);
  std::deque<MorphismId> queue;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) {
    if (c.src(f) == x && u.contains(f) && !seen[f]) {
      seen[f] = true;
      step[f] = f;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    MorphismId phi = queue.front();
    queue.pop_front();
    if (phi == alpha) {
      std::vector<MorphismId> chain;
      for (MorphismId cur = alpha; cur != kNoMorphism; cur = parent[cur]) chain.push_back(step[cur]);
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    const ObjectId z = c.dst(phi);
    for (MorphismId v = 0; v < c.morphism_count(); ++v) {
      if (c.src(v) != z || !u.contains(v)) continue;
      MorphismId next = c.compose(v, phi);
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = phi;
      step[next] = v;
      queue.push_back(next);
    }
  }
  throw std::logic_error("decompose: no decomposition into unfactorizables found");
}

namespace {

// Some h in Aut(z) with b.first = h∘a.first and b.second = a.second∘h⁻¹.
bool conjugate(const Presentation& p, const TwoStep& a, const TwoStep& b) {
  const auto& c = p.category();
  const ObjectId z = c.dst(a.first);
  if (c.dst(b.first) != z) return false;
  const std::size_t pos = p.position(z);
  const auto& g = p.aut(pos);
  for (std::size_t h = 0; h < g.order(); ++h) {
    if (c.compose(p.aut_element(pos, h), a.first) != b.first) continue;
    if (c.compose(a.second, p.aut_element(pos, g.inv(h))) == b.second) return true;
  }
  return false;
}

}  // namespace

FreeFrom is_free_from(const Presentation& p, const UnfactorizableTable& u, ObjectId x) {
  const auto& c = p.category();
  for (MorphismId alpha = 0; alpha < c.morphism_count(); ++alpha) {
    if (c.src(alpha) != x || c.is_endomorphism(alpha)) continue;
    const ObjectId y = c.dst(alpha);
    std::vector<TwoStep> factorizations;
    for (MorphismId first = 0; first < c.morphism_count(); ++first) {
      if (c.src(first) != x || !u.contains(first)) continue;
      for (MorphismId second : c.hom(c.dst(first), y))
        if (c.compose(second, first) == alpha) factorizations.push_back({first, second});
    }
    for (std::size_t a = 0; a < factorizations.size(); ++a)
      for (std::size_t b = a + 1; b < factorizations.size(); ++b)
        if (!conjugate(p, factorizations[a], factorizations[b]))
          return {false, FreenessCounterexample{alpha, factorizations[a], factorizations[b]}};
  }
  return {};
}

FreeFrom is_free_from(const Presentation& p, ObjectId x) { return is_free_from(p, unfactorizables(p), x); }

FreenessReport is_free(const Presentation& p) {
  const auto u = unfactorizables(p);
  const auto& c = p.category();
  FreenessReport report;
  report.free_from.assign(c.object_count(), true);
  for (std::size_t pos = 0; pos < p.size(); ++pos) {
    const ObjectId x = p.object(pos);
    auto r = is_free_from(p, u, x);
    report.free_from[x] = r.free;
    if (!r.free) {
      report.free = false;
      if (!report.counterexample) report.counterexample = r.counterexample;
    }
  }
  return report;
}

namespace {

// All chains of unfactorizables composing to alpha.
void enumerate_chains(const FiniteCategory& c, const UnfactorizableTable& u, MorphismId alpha, MorphismId composite,
                      std::vector<MorphismId>& chain, std::vector<std::vector<MorphismId>>& out) {
  const ObjectId here = chain.empty() ? c.src(alpha) : c.dst(composite);
  if (!chain.empty()) {
    if (composite == alpha) {
      out.push_back(chain);
      return;
    }
    // Prune composites that cannot be completed to alpha.
    bool extendable = false;
    for (MorphismId rest : c.hom(here, c.dst(alpha)))
      if (c.compose(rest, composite) == alpha) extendable = true;
    if (!extendable) return;
  }
  for (MorphismId v = 0; v < c.morphism_count(); ++v) {
    if (c.src(v) != here || !u.contains(v)) continue;
    chain.push_back(v);
    enumerate_chains(c, u, alpha, chain.size() == 1 ? v : c.compose(v, composite), chain, out);
    chain.pop_back();
  }
}

// Search for h_1..h_{m-1} with β_1 = h_1∘α_1, β_k = h_k∘α_k∘h_{k-1}⁻¹, β_m = α_m∘h_{m-1}⁻¹.
bool conjugate_chains(const Presentation& p, const std::vector<MorphismId>& a, const std::vector<MorphismId>& b,
                      std::size_t k, MorphismId prev_inverse) {
  const auto& c = p.category();
  const std::size_t m = a.size();
  // prev_inverse is h_{k-1}⁻¹ as a morphism (identity at the source for k = 0).
  const MorphismId twisted = c.compose(a[k], prev_inverse);
  if (k + 1 == m) return twisted == b[k];
  const ObjectId z = c.dst(a[k]);
  if (c.dst(b[k]) != z) return false;
  const std::size_t pos = p.position(z);
  const auto& g = p.aut(pos);
  for (std::size_t h = 0; h < g.order(); ++h) {
    if (c.compose(p.aut_element(pos, h), twisted) != b[k]) continue;
    if (conjugate_chains(p, a, b, k + 1, p.aut_element(pos, g.inv(h)))) return true;
  }
  return false;
}

}  // namespace

bool ufp_direct(const Presentation& p) {
  const auto& c = p.category();
  const auto u = unfactorizables(p);
  for (MorphismId alpha = 0; alpha < c.morphism_count(); ++alpha) {
    if (c.is_endomorphism(alpha)) continue;
    std::vector<std::vector<MorphismId>> chains;
    std::vector<MorphismId> scratch;
    enumerate_chains(c, u, alpha, kNoMorphism, scratch, chains);
    if (chains.empty()) return false;
    for (std::size_t a = 0; a < chains.size(); ++a) {
      for (std::size_t b = a + 1; b < chains.size(); ++b) {
        if (chains[a].size() != chains[b].size()) return false;
        if (!conjugate_chains(p, chains[a], chains[b], 0, c.identity(c.src(alpha)))) return false;
      }
    }
  }
  return true;
}

bool disjoint_union_holds(const Presentation& p, const UnfactorizableTable& u, std::size_t i, std::size_t j) {
  if (!(i < j) || j >= p.size()) throw std::invalid_argument("disjoint_union_holds: need i < j < n");
  const auto& c = p.category();
  std::set<MorphismId> seen;
  for (std::size_t l = i; l < j; ++l) {
    std::set<MorphismId> block;
    for (MorphismId g : u.hom0(j, l))
      for (MorphismId f : p.hom(l, i)) block.insert(c.compose(f, g));
    for (MorphismId h : block)
      if (!seen.insert(h).second) return false;
  }
  const auto& all = p.hom(j, i);
  return seen.size() == all.size();
}

}  // namespace eicat
