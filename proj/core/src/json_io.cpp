#include "cwr/json_io.hpp"

#include "cwr/errors.hpp"
#include "cwr/multiindex.hpp"

namespace cwr {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing key '") + key + "'");
    return j.at(key);
}

u32 need_u32(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw SchemaError(std::string("'") + key + "' must be a nonnegative integer");
    return v.get<u32>();
}

}  // namespace

json field_desc_to_json(const FieldDesc& k) {
    json j;
    j["p"] = k.p;
    j["d"] = k.d;
    j["r"] = k.r;
    if (k.d > 1) j["modulus"] = k.modulus;
    return j;
}

FieldPtr field_desc_from_json(const json& j) {
    const u32 p = need_u32(j, "p");
    const u32 d = need_u32(j, "d");
    const u32 r = need_u32(j, "r");
    std::vector<u32> modulus;
    if (j.contains("modulus")) {
        const json& m = j.at("modulus");
        if (!m.is_array()) throw SchemaError("'modulus' must be an array");
        for (const auto& c : m) {
            if (!c.is_number_integer()) throw SchemaError("modulus entries must be integers");
            modulus.push_back(c.get<u32>());
        }
    }
    return make_field(p, d, r, modulus);
}

json fe_to_json(const FieldElem& a) { return a.to_string(); }

FieldElem fe_from_json(const FieldPtr& k, const json& j) {
    if (!j.is_string()) throw SchemaError("field element must be a string");
    return parse_field_elem(k, j.get<std::string>());
}

json witt_to_json(const WittVector& x) {
    json j = json::array();
    for (const auto& d : x.a) j.push_back(d.to_string());
    return j;
}

WittVector witt_from_json(const FieldPtr& k, const json& j) {
    if (!j.is_array() || j.empty())
        throw SchemaError("Witt vector must be a nonempty array");
    std::vector<FieldElem> digits;
    digits.reserve(j.size());
    for (const auto& d : j) digits.push_back(fe_from_json(k, d));
    return witt_from_digits(k, std::move(digits));
}

json lambda_to_json(const LambdaDecomposition& d) {
    json j = json::object();
    for (const auto& [I, c] : d.coeffs) j[mi_key(I)] = c.to_string();
    return j;
}

json model_to_json(const CohenRingModel& m) {
    json j;
    j["field"] = field_desc_to_json(*m.k);
    j["m"] = m.m;
    json pb = json::array();
    for (const auto& b : m.pbasis) pb.push_back(b.to_string());
    j["pbasis"] = pb;
    json reps = json::array();
    for (const auto& s : m.reps) reps.push_back(witt_to_json(s));
    j["reps"] = reps;
    return j;
}

CohenRingModel model_from_json(const json& j) {
    FieldPtr k = field_desc_from_json(need(j, "field"));
    const u32 m = need_u32(j, "m");
    const json& pb = need(j, "pbasis");
    const json& reps = need(j, "reps");
    if (!pb.is_array() || !reps.is_array())
        throw SchemaError("'pbasis' and 'reps' must be arrays");
    std::vector<FieldElem> pbasis;
    for (const auto& b : pb) pbasis.push_back(fe_from_json(k, b));
    std::vector<WittVector> sections;
    for (const auto& s : reps) sections.push_back(witt_from_json(k, s));
    return make_model(k, m, std::move(pbasis), std::move(sections));
}

json valued_to_json(const ValuedElement& x) {
    json j;
    if (x.zero) {
        j["val"] = "inf";
        j["unit"] = json::array();
    } else {
        j["val"] = x.val;
        j["unit"] = witt_to_json(x.unit);
    }
    j["precision"] = x.precision;
    return j;
}

ValuedElement valued_from_json(const FieldPtr& k, const json& j) {
    const json& val = need(j, "val");
    const u32 precision = need_u32(j, "precision");
    if (val.is_string()) {
        if (val.get<std::string>() != "inf")
            throw SchemaError("'val' must be an integer or \"inf\"");
        return valued_zero(k, precision);
    }
    if (!val.is_number_integer()) throw SchemaError("'val' must be an integer or \"inf\"");
    WittVector unit = witt_from_json(k, need(j, "unit"));
    if (unit.a.size() != precision)
        throw SchemaError("'precision' must match the unit length");
    return make_valued(val.get<long long>(), unit);
}

json tower_to_json(const TowerResult& t) {
    json j;
    j["levels"] = t.layers.size();
    j["compatible"] = t.compatible;
    if (t.witness) {
        json w;
        w["upper"] = t.witness->upper;
        w["lower"] = t.witness->lower;
        w["alpha"] = t.witness->alpha.to_string();
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json audit_to_json(const AuditReport& r) {
    json axioms = json::array();
    for (const auto& a : r.axioms) {
        json x;
        x["axiom"] = a.axiom;
        x["auditable"] = a.auditable;
        x["passed"] = a.passed;
        x["checked"] = a.checked;
        x["witness"] = a.witness;
        axioms.push_back(x);
    }
    json j;
    j["all_passed"] = r.all_passed();
    j["axioms"] = axioms;
    return j;
}

json enrichment_report_to_json(const EnrichmentReport& r) {
    json ds = json::array();
    for (const auto& d : r.discrepancies) {
        json e;
        json b = json::array();
        for (const auto& x : d.b) b.push_back(witt_to_json(x));
        e["b"] = b;
        e["alpha"] = d.alpha.to_string();
        ds.push_back(e);
    }
    json j;
    j["applicable"] = r.applicable;
    j["inapplicable"] = r.inapplicable;
    j["discrepancies"] = ds;
    return j;
}

json hom_report_to_json(const HomReport& r) {
    json vs = json::array();
    for (const auto& [x, y] : r.violations)
        vs.push_back(json::array({witt_to_json(x), witt_to_json(y)}));
    json j;
    j["checked"] = r.checked;
    j["violations"] = vs;
    return j;
}

json preservation_to_json(const PreservationReport& r) {
    json ms = json::array();
    for (const auto& [fi, ai] : r.mismatches)
        ms.push_back(json::array({fi, ai}));
    json j;
    j["checked"] = r.checked;
    j["flagged"] = r.flagged;
    j["mismatches"] = ms;
    return j;
}

}  // namespace cwr
