#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "eicat/algebra.hpp"
#include "eicat/category.hpp"
#include "eicat/classifier.hpp"
#include "eicat/constructors.hpp"
#include "eicat/group.hpp"
#include "eicat/oracle.hpp"

namespace eicat {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input (as opposed to a well-formed but invalid category).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

/// {"objects": [...], "morphisms": [{"id","src","dst","identity"?}], "composition": [[f, g, f∘g], ...]}.
/// Unknown keys are rejected.
RawCategory category_from_json(const Json& j);
/// Composites involving identities are left out.
Json category_to_json(const FiniteCategory& c);

/// {"elements": [...], "identity": "e", "table": [[g, h, gh], ...]}
GroupTable group_from_json(const Json& j);
Json group_to_json(const GroupTable& g);

/// {"group": <group>, "set": [...], "act": [[g, x, gx], ...]}; "group" may be omitted when supplied separately.
GroupAction action_from_json(const Json& j, const std::optional<GroupTable>& group = std::nullopt);
Json action_to_json(const GroupAction& a);

/// {"elements": [...], "relations": [[x, y], ...]} meaning x <= y.
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

/// {"objects": [...], "groups": [<group>...], "homs": [{"from","to","elements","left":[[g,s,gs]],"right":[[s,h,sh]]}],
///  "compositions": [{"outer": [y, z], "inner": [x, y], "table": [[t, s, t∘s]]}]}
BisetSpec biset_from_json(const Json& j);

/// {"characteristic", "basis", "unit", "idempotents", "table": [[i, j, [[k, c], ...]], ...]}; scalars are
/// integers or "a/b" strings. Zero products are omitted from the table.
template <class F>
Json algebra_to_json(const FiniteDimAlgebra<F>& a);
template <class F>
FiniteDimAlgebra<F> algebra_from_json(const Json& j, const F& field);

Json report_to_json(const ClassificationReport& r, bool explain);
/// Checks the report schema; throws ParseError.
ClassificationReport report_from_json(const Json& j);

Json verdict_to_json(const GorensteinVerdict& v, std::size_t cap, std::optional<bool> agrees);

}  // namespace eicat
