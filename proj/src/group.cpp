#include "eicat/group.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace eicat {

GroupTable::GroupTable(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> table,
                       std::size_t identity)
    : elements_(std::move(elements)), identity_(identity) {
  const std::size_t n = elements_.size();
  if (n == 0) throw GroupError("group has no elements");
  if (identity_ >= n) throw GroupError("identity index out of range");
  if (std::set<std::string>(elements_.begin(), elements_.end()).size() != n)
    throw GroupError("duplicate element names");
  if (table.size() != n) throw GroupError("Cayley table has wrong number of rows");
  table_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw GroupError("Cayley table row has wrong length");
    for (auto v : row) {
      if (v >= n) throw GroupError("Cayley table entry out of range");
      table_.push_back(v);
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (mul(identity_, g) != g || mul(g, identity_) != g)
      throw GroupError("identity law fails for '" + elements_[g] + "'");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw GroupError("associativity fails at (" + elements_[a] + ", " + elements_[b] + ", " +
                           elements_[c] + ")");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (mul(g, h) == identity_ && mul(h, g) == identity_) {
        inverse_[g] = h;
        break;
      }
    }
    if (inverse_[g] == n) throw GroupError("'" + elements_[g] + "' has no inverse");
  }
}

GroupTable GroupTable::trivial() { return cyclic(1); }

GroupTable GroupTable::cyclic(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group of order 0");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : "r" + std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return GroupTable(std::move(names), std::move(table), 0);
}

GroupTable GroupTable::klein_four() {
  std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return GroupTable({"e", "a", "b", "c"}, std::move(table), 0);
}

GroupTable GroupTable::symmetric3() {
  // Permutations of {0,1,2} as images of (0,1,2).
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                                 {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "(01)", "(12)", "(02)", "(012)", "(021)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> ab{};
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];  // a after b
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  }
  return GroupTable(names, std::move(table), 0);
}

GroupTable GroupTable::product(const GroupTable& a, const GroupTable& b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = 0; j < b.order(); ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
  return GroupTable(std::move(names), std::move(table), a.identity() * b.order() + b.identity());
}

std::optional<std::size_t> GroupTable::find(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::size_t> GroupTable::generated_subgroup(const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> sub{identity_};
  std::vector<std::size_t> frontier{identity_};
  while (!frontier.empty()) {
    std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t g : gens) {
      std::size_t y = mul(x, g);
      if (sub.insert(y).second) frontier.push_back(y);
    }
  }
  return {sub.begin(), sub.end()};
}

GroupAction::GroupAction(GroupTable group, std::vector<std::string> set,
                         std::vector<std::vector<std::size_t>> act)
    : group_(std::move(group)), set_(std::move(set)) {
  const std::size_t n = set_.size();
  if (std::set<std::string>(set_.begin(), set_.end()).size() != n) throw GroupError("duplicate set elements");
  if (act.size() != group_.order()) throw GroupError("action table has wrong number of rows");
  for (const auto& row : act) {
    if (row.size() != n) throw GroupError("action table row has wrong length");
    for (auto v : row) {
      if (v >= n) throw GroupError("action table entry out of range");
      act_.push_back(v);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (this->act(group_.identity(), x) != x) throw GroupError("identity does not act trivially");
    for (std::size_t g = 0; g < group_.order(); ++g)
      for (std::size_t h = 0; h < group_.order(); ++h)
        if (this->act(group_.mul(g, h), x) != this->act(g, this->act(h, x)))
          throw GroupError("action is not compatible with multiplication");
  }
}

std::optional<std::size_t> GroupAction::find(std::string_view name) const {
  auto it = std::find(set_.begin(), set_.end(), name);
  if (it == set_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - set_.begin());
}

std::vector<std::size_t> GroupAction::orbit(std::size_t x) const {
  std::set<std::size_t> out;
  for (std::size_t g = 0; g < group_.order(); ++g) out.insert(act(g, x));
  return {out.begin(), out.end()};
}

std::vector<std::vector<std::size_t>> GroupAction::orbits() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (auto y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::size_t stabilizer_order(const GroupAction& a, std::size_t x) {
  if (x >= a.size()) throw GroupError("UnknownElement: index " + std::to_string(x));
  std::size_t count = 0;
  for (std::size_t g = 0; g < a.group().order(); ++g)
    if (a.act(g, x) == x) ++count;
  return count;
}

std::size_t stabilizer_order(const GroupAction& a, std::string_view x) {
  auto i = a.find(x);
  if (!i) throw GroupError("UnknownElement: '" + std::string(x) + "'");
  return stabilizer_order(a, *i);
}

PermutationProjectivity permutation_module_projective(const GroupAction& a, const FieldSpec& field) {
  PermutationProjectivity out;
  for (const auto& orbit : a.orbits()) {
    if (!field.invertible(static_cast<std::int64_t>(stabilizer_order(a, orbit.front())))) {
      out.projective = false;
      out.offending_orbits.push_back(orbit.front());
    }
  }
  return out;
}

BiSet::BiSet(GroupTable left_group, GroupTable right_group, std::vector<std::string> set,
             std::vector<std::vector<std::size_t>> left, std::vector<std::vector<std::size_t>> right)
    : left_group_(std::move(left_group)), right_group_(std::move(right_group)), set_(std::move(set)) {
  const std::size_t n = set_.size();
  if (left.size() != left_group_.order()) throw GroupError("biset: left table has wrong number of rows");
  for (const auto& row : left) {
    if (row.size() != n) throw GroupError("biset: left table row has wrong length");
    for (auto v : row) {
      if (v >= n) throw GroupError("biset: left entry out of range");
      left_.push_back(v);
    }
  }
  if (right.size() != n) throw GroupError("biset: right table has wrong number of rows");
  for (const auto& row : right) {
    if (row.size() != right_group_.order()) throw GroupError("biset: right table row has wrong length");
    for (auto v : row) {
      if (v >= n) throw GroupError("biset: right entry out of range");
      right_.push_back(v);
    }
  }
  left_action();
  right_action();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t g = 0; g < left_group_.order(); ++g)
      for (std::size_t h = 0; h < right_group_.order(); ++h)
        if (this->right(this->left(g, s), h) != this->left(g, this->right(s, h)))
          throw GroupError("biset: left and right actions do not commute");
}

GroupAction BiSet::left_action() const {
  std::vector<std::vector<std::size_t>> act(left_group_.order(), std::vector<std::size_t>(size()));
  for (std::size_t g = 0; g < left_group_.order(); ++g)
    for (std::size_t s = 0; s < size(); ++s) act[g][s] = left(g, s);
  return GroupAction(left_group_, set_, std::move(act));
}

GroupAction BiSet::right_action() const {
  std::vector<std::vector<std::size_t>> act(right_group_.order(), std::vector<std::size_t>(size()));
  for (std::size_t h = 0; h < right_group_.order(); ++h)
    for (std::size_t s = 0; s < size(); ++s) act[h][s] = right(s, right_group_.inv(h));
  return GroupAction(right_group_, set_, std::move(act));
}

}  // namespace eicat
