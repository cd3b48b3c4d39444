#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwr/cohen.hpp"
#include "cwr/morphism.hpp"
#include "cwr/valued.hpp"

namespace cwr {

// Quantifier-free terms and formulas over the two-sorted ring language
// (ring sort A, residue sort k, value sort G, valued sort K) written as
// s-expressions. Quantifiers are rejected at parse time. Partial symbols
// evaluate to a flagged default instead of failing: field/valued inverse
// of zero, S outside its domain, resn of a non-integral element.
//
// Heads:
//   atoms        x (variable), 3 (value-group literal), constants below
//   constants    0A 1A pA  0k 1k  0G 1G infG  0K 1K pK  true false
//   literals     (fe "txt") (wv "d0" "d1" ...) (iv val "d0" ...) (gamma n)
//   term ops     + - * div neg inv res (resn n t) (ac n t) v (S b1..br a)
//   formulas     = le theta and or not true false
struct Term {
    std::string head;
    std::vector<Term> args;
    std::string text;                // variable name, literal payload, level
    std::vector<std::string> texts;  // wv/iv digit strings
};

Term parse_term(const std::string& src);  // ParseError on malformed input
std::string to_string(const Term& t);     // re-parses to the same tree

struct GammaValue {
    bool inf = false;
    long long v = 0;
    bool operator==(const GammaValue& o) const {
        return inf == o.inf && (inf || v == o.v);
    }
};

using Value = std::variant<WittVector, FieldElem, GammaValue, ValuedElement>;
using Assignment = std::map<std::string, Value>;

// Carriers and the interpretation of theta/S. Hooks left empty mean the
// intended interpretation: theta as p-independence of the residues, S as
// the lambda representative with respect to the tuple.
struct StructureBinding {
    std::optional<CohenRingModel> model;
    FieldPtr vfield;
    u32 vprecision = 0;
    std::function<bool(const std::vector<WittVector>&)> theta_hook;
    std::function<SpanRep(const std::vector<WittVector>&, const FieldElem&)> s_hook;
};

StructureBinding bind_model(const CohenRingModel& m);
StructureBinding bind_valued(const FieldPtr& k, u32 precision);

struct EvalResult {
    Value value;
    bool flagged = false;  // some subterm hit a partiality default
};
EvalResult eval_term(const StructureBinding& b, const Term& t, const Assignment& asg);

struct QfResult {
    bool truth = false;
    bool flagged = false;
};
QfResult eval_qf(const StructureBinding& b, const Term& f, const Assignment& asg);

struct AxiomResult {
    std::string axiom;
    bool auditable = true;
    bool passed = true;
    u32 checked = 0;
    std::string witness;
};

struct AuditReport {
    std::vector<AxiomResult> axioms;
    bool all_passed() const;  // unauditable entries are recorded, not failed
};

// Audits the two-sorted axioms at the binding's level against samples:
// local ring with maximal ideal (p), residue field, res epimorphism,
// characteristic p^n, theta = p-independence, S = lambda representatives.
// The residue-field elementary-equivalence axiom is recorded unauditable.
AuditReport audit_t2(const StructureBinding& b,
                     const std::vector<WittVector>& ring_samples,
                     const std::vector<FieldElem>& field_samples,
                     const std::vector<EnrichmentSample>& s_samples);

enum class ValuedAxiomSet { tac_core, ac_axioms };

// tac_core: characteristic zero, value group laws, valuation laws,
// valuation ring with maximal ideal (p), residue rings and their system,
// angular components, and the residue pair as a two-sorted model at the
// top level; elementary-class axioms recorded unauditable.
// ac_axioms: just the angular component laws and their compatibility.
AuditReport audit_valued(ValuedAxiomSet which, const FieldPtr& k, u32 precision,
                         const std::vector<ValuedElement>& samples);

struct PreservationReport {
    u32 checked = 0;
    u32 flagged = 0;
    std::vector<std::pair<size_t, size_t>> mismatches;  // (formula, assignment)
};

// Evaluates each formula under each assignment in the source and, with
// ring values pushed through phi and field values through the residue map,
// in the target; records every truth-value disagreement.
PreservationReport check_morphism_preserves_qf(const CohenMorphism& phi,
                                               const std::vector<Term>& formulas,
                                               const std::vector<Assignment>& assignments);

// Fixed battery of twenty quantifier-free ring/residue formulas over ring
// variables x, y, z and field variables a, b: twelve identities that hold in
// every model and eight assignment-sensitive shapes.
std::vector<Term> l2_battery();

}  // namespace cwr
