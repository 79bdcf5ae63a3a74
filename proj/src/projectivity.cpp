#include "eicat/projectivity.hpp"

#include <stdexcept>

namespace eicat {

StabilizerOrders morphism_stabilizers(const Presentation& p, MorphismId alpha) {
  const auto& c = p.category();
  if (c.is_endomorphism(alpha))
    throw std::invalid_argument("morphism_stabilizers: '" + c.morphism_name(alpha) + "' is an endomorphism");
  const std::size_t s = p.position(c.src(alpha));
  const std::size_t d = p.position(c.dst(alpha));
  StabilizerOrders out{0, 0};
  for (std::size_t g = 0; g < p.aut(d).order(); ++g)
    if (c.compose(p.aut_element(d, g), alpha) == alpha) ++out.left;
  for (std::size_t h = 0; h < p.aut(s).order(); ++h)
    if (c.compose(alpha, p.aut_element(s, h)) == alpha) ++out.right;
  return out;
}

ProjectivityReport is_projective_over(const Presentation& p, const FieldSpec& field) {
  const auto& c = p.category();
  ProjectivityReport report;
  std::vector<bool> covered(c.morphism_count(), false);
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (MorphismId alpha : p.hom(j, i)) {
        if (covered[alpha]) continue;
        // Mark the whole two-sided orbit; stabilizer orders are constant on it.
        for (std::size_t g = 0; g < p.aut(i).order(); ++g)
          for (std::size_t h = 0; h < p.aut(j).order(); ++h)
            covered[c.compose(c.compose(p.aut_element(i, g), alpha), p.aut_element(j, h))] = true;
        auto orders = morphism_stabilizers(p, alpha);
        if (!field.invertible(static_cast<std::int64_t>(orders.left)) ||
            !field.invertible(static_cast<std::int64_t>(orders.right))) {
          report.projective = false;
          report.witnesses.push_back({alpha, orders});
        }
      }
    }
  }
  return report;
}

}  // namespace eicat
