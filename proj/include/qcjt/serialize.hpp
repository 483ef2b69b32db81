#pragma once

#include <string>

#include "json.hpp"
#include "qcjt/jordan.hpp"
#include "qcjt/rank_property.hpp"

namespace qcjt {

using Json = nlohmann::ordered_json;

// Prime-field entries are integers; extension entries are residue arrays,
// low degree first.
Json elem_json(const Field& f, Elem a);
Elem elem_from_json(const Field& f, const Json& j);

Json module_json(const ModuleRep& m);
// Rejects inputs whose matrices violate the relations (InvalidModule).
ModuleRep module_from_json(const Json& j);
std::string dump_module(const ModuleRep& m);
ModuleRep parse_module(const std::string& text);

Json type_json(const JordanType& t);
Json verdict_json(const CjtVerdict& v);
Json poly_json(const HomogPoly& f);
Json rp_json(const RpReport& r, const Field& f);
Json classification_json(const Classification& c);

}  // namespace qcjt
