#pragma once

#include <json.hpp>

#include "leonard/families.hpp"
#include "leonard/intersection.hpp"
#include "leonard/parray.hpp"
#include "leonard/system.hpp"

namespace leonard {

using json = nlohmann::json;

json to_json(const Matrix& m);
json to_json(const ParameterArray& pa);
json to_json(const IntersectionData& data);
json to_json(const FamilySpec& spec);
json realization_to_json(const Realization& real);

ParameterArray parray_from_json(const json& doc);
FamilySpec famspec_from_json(const json& doc);
IntersectionData intersection_from_json(const FieldCtxPtr& ctx, const json& doc);

/// FNV-1a digest of the canonical serialization; reports carry it so they
/// are self-describing.
std::string digest(const std::string& text);

} // namespace leonard
