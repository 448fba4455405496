#ifndef SUPERSYM_SERIALIZE_HPP
#define SUPERSYM_SERIALIZE_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "supersym/superpartition.hpp"
#include "supersym/transform.hpp"

namespace supersym {

// {"a": [...], "s": [...]}
nlohmann::json to_json(const SuperPartition& sp);
SuperPartition superpartition_from_json(const nlohmann::json& j);

// {"basis": "m", "n": 3, "m": 2, "terms": [{"spar": {...}, "coeff": "-3"}, ...]}
nlohmann::json to_json(const BasisExpansion& x);
BasisExpansion expansion_from_json(const nlohmann::json& j);

// One "(a;s)  coeff" line per term, in enumeration order.
std::string to_text(const BasisExpansion& x);

/// Parses a linear combination such as "2*p(2,1) - 1/2*h(;1,1) + e(1;)".
/// Terms are grouped by bidegree; each group is expressed in the basis of
/// its first term. Throws std::invalid_argument naming the offending token.
std::vector<BasisExpansion> parse_expression(std::string_view text);

} // namespace supersym

#endif
