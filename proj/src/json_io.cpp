#include "leonard/json_io.hpp"

#include <iomanip>
#include <sstream>

namespace leonard {

namespace {

json elems_to_json(const std::vector<FieldElem>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back(e.str());
    return arr;
}

std::vector<FieldElem> elems_from_json(const FieldCtxPtr& ctx, const json& arr,
                                       const std::string& what) {
    if (!arr.is_array()) throw Error(Errc::ParseError, what + " must be an array");
    std::vector<FieldElem> out;
    for (const auto& item : arr) {
        if (!item.is_string()) throw Error(Errc::ParseError, what + " entries must be strings");
        out.push_back(ctx->parse(item.get<std::string>()));
    }
    return out;
}

} // namespace

json to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return json{{"order", m.order()}, {"rows", rows}};
}

json to_json(const ParameterArray& pa) {
    return json{{"field", pa.ctx->descriptor()}, {"d", pa.d},
                {"theta", elems_to_json(pa.theta)},
                {"theta_star", elems_to_json(pa.theta_star)},
                {"varphi", elems_to_json(pa.varphi)},
                {"phi", elems_to_json(pa.phi)}};
}

json to_json(const IntersectionData& data) {
    return json{{"a", elems_to_json(data.a)},       {"b", elems_to_json(data.b)},
                {"c", elems_to_json(data.c)},       {"a_star", elems_to_json(data.a_star)},
                {"b_star", elems_to_json(data.b_star)}, {"c_star", elems_to_json(data.c_star)}};
}

json to_json(const FamilySpec& spec) {
    json params = json::object();
    for (const auto& [name, value] : spec.params) params[name] = value.str();
    return json{{"family", family_name(spec.family)},
                {"d", spec.d},
                {"field", spec.ctx->descriptor()},
                {"params", params}};
}

json realization_to_json(const Realization& real) {
    json es = json::array(), ess = json::array();
    for (const auto& e : real.E) es.push_back(to_json(e));
    for (const auto& e : real.E_star) ess.push_back(to_json(e));
    return json{{"field", real.ctx->descriptor()},
                {"d", real.d},
                {"A", to_json(real.A)},
                {"A_star", to_json(real.A_star)},
                {"idempotents", json{{"E", es}, {"E_star", ess}}}};
}

ParameterArray parray_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "document must be a JSON object");
    for (const char* key : {"field", "d", "theta", "theta_star", "varphi", "phi"})
        if (!doc.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
    ParameterArray pa;
    pa.ctx = FieldCtx::from_descriptor(doc["field"].get<std::string>());
    if (!doc["d"].is_number_integer()) throw Error(Errc::ParseError, "d must be an integer");
    pa.d = doc["d"].get<int>();
    pa.theta = elems_from_json(pa.ctx, doc["theta"], "theta");
    pa.theta_star = elems_from_json(pa.ctx, doc["theta_star"], "theta_star");
    pa.varphi = elems_from_json(pa.ctx, doc["varphi"], "varphi");
    pa.phi = elems_from_json(pa.ctx, doc["phi"], "phi");
    return pa;
}

FamilySpec famspec_from_json(const json& doc) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "document must be a JSON object");
    for (const char* key : {"family", "d", "field", "params"})
        if (!doc.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
    FamilySpec spec;
    spec.family = family_from_name(doc["family"].get<std::string>());
    spec.d = doc["d"].get<int>();
    spec.ctx = FieldCtx::from_descriptor(doc["field"].get<std::string>());
    for (const auto& [name, value] : doc["params"].items())
        spec.params.emplace(name, spec.ctx->parse(value.get<std::string>()));
    return spec;
}

IntersectionData intersection_from_json(const FieldCtxPtr& ctx, const json& doc) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "document must be a JSON object");
    for (const char* key : {"a", "b", "c", "a_star", "b_star", "c_star"})
        if (!doc.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
    IntersectionData data;
    data.a = elems_from_json(ctx, doc["a"], "a");
    data.b = elems_from_json(ctx, doc["b"], "b");
    data.c = elems_from_json(ctx, doc["c"], "c");
    data.a_star = elems_from_json(ctx, doc["a_star"], "a_star");
    data.b_star = elems_from_json(ctx, doc["b_star"], "b_star");
    data.c_star = elems_from_json(ctx, doc["c_star"], "c_star");
    return data;
}

std::string digest(const std::string& text) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

} // namespace leonard
