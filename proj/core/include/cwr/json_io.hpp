#pragma once

#include <nlohmann/json.hpp>

#include "cwr/cohen.hpp"
#include "cwr/lang.hpp"
#include "cwr/morphism.hpp"
#include "cwr/valued.hpp"

namespace cwr {

using json = nlohmann::json;

// Elements serialize as display strings, Witt vectors as digit-string arrays,
// lambda decompositions as objects keyed by multi-index. Readers throw
// SchemaError on structurally malformed input; element parsing reuses the
// text grammar and surfaces ParseError.
json field_desc_to_json(const FieldDesc& k);
FieldPtr field_desc_from_json(const json& j);

json fe_to_json(const FieldElem& a);
FieldElem fe_from_json(const FieldPtr& k, const json& j);

json witt_to_json(const WittVector& x);
WittVector witt_from_json(const FieldPtr& k, const json& j);

json lambda_to_json(const LambdaDecomposition& d);

json model_to_json(const CohenRingModel& m);
CohenRingModel model_from_json(const json& j);

json valued_to_json(const ValuedElement& x);
ValuedElement valued_from_json(const FieldPtr& k, const json& j);

json tower_to_json(const TowerResult& t);
json audit_to_json(const AuditReport& r);
json enrichment_report_to_json(const EnrichmentReport& r);
json hom_report_to_json(const HomReport& r);
json preservation_to_json(const PreservationReport& r);

}  // namespace cwr
