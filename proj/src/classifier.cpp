#include "eicat/classifier.hpp"

#include <algorithm>

#include "eicat/freeness.hpp"
#include "eicat/projectivity.hpp"
#include "eicat/triangular.hpp"

namespace eicat {

std::size_t gorenstein_bound(std::span<const std::size_t> d, bool mstar_projective) {
  if (!mstar_projective) throw HypothesisViolated("gorenstein_bound needs every M_t^* projective");
  if (d.empty()) throw std::invalid_argument("gorenstein_bound: no vertices");
  std::size_t b = d[0];
  for (std::size_t i = 1; i < d.size(); ++i) b = b != d[i] ? std::max(b, d[i]) : b + 1;
  return b;
}

ClassificationReport classify(const Presentation& p, const FieldSpec& field) {
  const auto& c = p.category();
  ClassificationReport r;
  r.characteristic = field.characteristic();
  for (std::size_t i = 0; i < p.size(); ++i) {
    r.ordering.push_back(c.object_name(p.object(i)));
    r.aut_orders.push_back(p.aut(i).order());
  }

  const auto proj = is_projective_over(p, field);
  r.projective = proj.projective;
  for (const auto& w : proj.witnesses)
    r.projectivity_witnesses.push_back({c.morphism_name(w.morphism), w.orders.left, w.orders.right});

  const auto fr = is_free(p);
  r.free = fr.free;
  if (fr.counterexample) {
    const auto& ce = *fr.counterexample;
    r.freeness_counterexample =
        FactorizationWitness{c.morphism_name(ce.morphism), c.morphism_name(ce.a.first), c.morphism_name(ce.a.second),
                             c.morphism_name(ce.b.first), c.morphism_name(ce.b.second)};
  }

  bool invertible_auts = true;
  for (auto n : r.aut_orders) invertible_auts = invertible_auts && field.invertible(static_cast<std::int64_t>(n));
  bool endo_only = true;
  for (MorphismId f = 0; f < c.morphism_count(); ++f) endo_only = endo_only && c.is_endomorphism(f);

  r.gorenstein = r.projective;
  r.one_gorenstein = r.gorenstein && r.free;
  r.hereditary = r.free && invertible_auts;
  r.zero_gorenstein = endo_only;

  const TriangularPresentation tp(p, field);
  bool all_mstar = true;
  for (std::size_t t = 1; t < p.size(); ++t) {
    MStarEntry e{t, m_star_dim(tp, t), phi_domain_dim(tp, t), std::nullopt};
    if (r.projective) e.projective = e.dim == e.phi_domain_dim;
    all_mstar = all_mstar && e.projective.value_or(false);
    r.m_star.push_back(e);
  }
  if (r.projective && all_mstar) {
    // vertex algebras are group algebras, hence self-injective
    const std::vector<std::size_t> d(p.size(), 0);
    r.gorenstein_dim_bound = gorenstein_bound(d, true);
  }
  return r;
}

OracleAgreement compare_with_oracle(const ClassificationReport& r, const GorensteinVerdict& v) {
  OracleAgreement a;
  a.gorenstein = r.gorenstein == (v.left.finite() && v.right.finite());
  a.one_gorenstein = r.one_gorenstein == (v.left.at_most(1) && v.right.at_most(1));
  a.hereditary = r.hereditary == v.global.at_most(1);
  return a;
}

ClassificationReport classify(const FiniteCategory& c, const FieldSpec& field, std::span<const ObjectId> priority) {
  const auto ei = is_ei(c);
  if (!ei.ei)
    throw OrderError(OrderError::Kind::NotEI,
                     "NotEI: endomorphism '" + c.morphism_name(*ei.witness) + "' is not invertible");
  const bool skeletal = is_skeletal(c);
  const Skeleton s = skeletalize(c);
  ClassificationReport r =
      classify(priority.empty() ? admissible_order(s.category) : admissible_order(s.category, priority), field);
  r.is_ei = true;
  r.is_skeletal = skeletal;
  return r;
}

}  // namespace eicat
