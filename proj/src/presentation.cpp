#include "eicat/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace eicat {

Presentation::Presentation(FiniteCategory c, std::vector<ObjectId> order)
    : category_(std::move(c)), order_(std::move(order)) {
  position_.assign(category_.object_count(), 0);
  for (std::size_t p = 0; p < order_.size(); ++p) position_[order_[p]] = p;
  aut_index_.assign(category_.morphism_count(), static_cast<std::size_t>(-1));
  for (ObjectId x : order_) {
    const auto& ends = category_.hom(x, x);
    std::vector<MorphismId> elements;
    elements.push_back(category_.identity(x));
    for (MorphismId f : ends)
      if (f != category_.identity(x)) elements.push_back(f);
    for (std::size_t g = 0; g < elements.size(); ++g) aut_index_[elements[g]] = g;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
    for (std::size_t a = 0; a < elements.size(); ++a) {
      names.push_back(category_.morphism_name(elements[a]));
      for (std::size_t b = 0; b < elements.size(); ++b)
        table[a][b] = aut_index_[category_.compose(elements[a], elements[b])];
    }
    aut_.emplace_back(std::move(names), std::move(table), 0);
    aut_elements_.push_back(std::move(elements));
  }
}

BiSet Presentation::hom_biset(std::size_t i, std::size_t j) const {
  const auto& h = hom(j, i);
  std::vector<std::string> names;
  std::vector<std::size_t> local(category_.morphism_count(), 0);
  for (std::size_t s = 0; s < h.size(); ++s) {
    names.push_back(category_.morphism_name(h[s]));
    local[h[s]] = s;
  }
  std::vector<std::vector<std::size_t>> left(aut(i).order(), std::vector<std::size_t>(h.size()));
  std::vector<std::vector<std::size_t>> right(h.size(), std::vector<std::size_t>(aut(j).order()));
  for (std::size_t s = 0; s < h.size(); ++s) {
    for (std::size_t g = 0; g < aut(i).order(); ++g) left[g][s] = local[category_.compose(aut_element(i, g), h[s])];
    for (std::size_t g = 0; g < aut(j).order(); ++g) right[s][g] = local[category_.compose(h[s], aut_element(j, g))];
  }
  return BiSet(aut(i), aut(j), std::move(names), std::move(left), std::move(right));
}

namespace {

void require_skeletal_ei(const FiniteCategory& c) {
  auto ei = is_ei(c);
  if (!ei.ei)
    throw OrderError(OrderError::Kind::NotEI,
                     "NotEI: endomorphism '" + c.morphism_name(*ei.witness) + "' is not invertible");
  if (!is_skeletal(c)) throw OrderError(OrderError::Kind::NotSkeletal, "NotSkeletal: distinct isomorphic objects");
}

}  // namespace

Presentation admissible_order(const FiniteCategory& c) {
  std::vector<ObjectId> priority(c.object_count());
  std::iota(priority.begin(), priority.end(), 0);
  return admissible_order(c, priority);
}

Presentation admissible_order(const FiniteCategory& c, std::span<const ObjectId> priority) {
  require_skeletal_ei(c);
  const std::size_t n = c.object_count();
  std::vector<ObjectId> sorted_priority(priority.begin(), priority.end());
  std::sort(sorted_priority.begin(), sorted_priority.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted_priority.size() != n || sorted_priority[i] != i)
      throw std::invalid_argument("admissible_order: priority is not a permutation of the objects");

  std::vector<bool> placed(n, false);
  std::vector<ObjectId> order;
  while (order.size() < n) {
    bool progressed = false;
    for (ObjectId x : priority) {
      if (placed[x]) continue;
      bool sink = true;
      for (ObjectId y = 0; y < n && sink; ++y)
        if (y != x && !placed[y] && !c.hom(x, y).empty()) sink = false;
      if (sink) {
        placed[x] = true;
        order.push_back(x);
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw OrderError(OrderError::Kind::NotSkeletal, "NotSkeletal: cycle of morphisms among distinct objects");
  }
  return Presentation(c, std::move(order));
}

Presentation presentation_with_order(const FiniteCategory& c, std::vector<ObjectId> ordering) {
  require_skeletal_ei(c);
  std::vector<ObjectId> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted.size() != c.object_count() || sorted[i] != i)
      throw std::invalid_argument("presentation_with_order: not a permutation of the objects");
  if (sorted.size() != c.object_count()) throw std::invalid_argument("presentation_with_order: wrong length");
  for (std::size_t i = 0; i < ordering.size(); ++i)
    for (std::size_t j = i + 1; j < ordering.size(); ++j)
      if (!c.hom(ordering[i], ordering[j]).empty())
        throw OrderError(OrderError::Kind::NotAdmissible,
                         "NotAdmissible: Hom(" + c.object_name(ordering[i]) + ", " +
                             c.object_name(ordering[j]) + ") is nonempty");
  return Presentation(c, std::move(ordering));
}

}  // namespace eicat
