#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cwr/pbasis.hpp"
#include "cwr/witt.hpp"

namespace cwr {

// The Cohen ring C_m(k) realized inside W_m(k): a p-basis together with a
// choice of representatives s(beta_mu). Membership is decided lazily by
// digitize; arithmetic is inherited from the ambient Witt ring.
struct CohenRingModel {
    FieldPtr k;
    u32 m = 0;
    std::vector<FieldElem> pbasis;
    std::vector<WittVector> reps;  // reps[mu] lifts pbasis[mu], length m
};

// Validates level, residues, and p-independence. The default representatives
// are the Teichmuller lifts [beta_mu]. The tuple may be shorter than a full
// p-basis, in which case lambda_representative can signal NotInSpan.
CohenRingModel make_model(const FieldPtr& k, u32 m);
CohenRingModel make_model(const FieldPtr& k, u32 m, std::vector<FieldElem> pbasis);
CohenRingModel make_model(const FieldPtr& k, u32 m, std::vector<FieldElem> pbasis,
                          std::vector<WittVector> reps);

// The level-l model with the same basis and truncated representatives, 1 <= l <= m.
CohenRingModel truncate_model(const CohenRingModel& model, u32 l);

// A lift assigns to gamma a Witt vector of the given length with first digit
// gamma; digits beyond the first are arbitrary.
using LiftFn = std::function<WittVector(const FieldElem& gamma, u32 length)>;

// The fixed default lift (gamma, 0, ..., 0).
WittVector default_lift(const FieldElem& gamma, u32 length);

// S(alpha) = sum_I s(beta)^I lift(lambda_I(alpha))^(p^m). Independent of the
// lift choice. Throws NotInSpan when alpha is outside the span (possible only
// for models whose tuple is not a full p-basis).
WittVector lambda_representative(const CohenRingModel& model, const FieldElem& alpha);
WittVector lambda_representative(const CohenRingModel& model, const FieldElem& alpha,
                                 const LiftFn& lift);

// Greedy digit expansion: strip S(digit), divide by p, recurse one level down.
// nullopt means some division failed, i.e. the vector is not a member of
// C_m(k); this decides membership.
std::optional<std::vector<FieldElem>> digitize(const CohenRingModel& model, const WittVector& a);

// sum_{i<m} S(alpha_i) p^i, each summand formed at level m-i where it is
// visible. Inverse of digitize on members.
WittVector undigitize(const CohenRingModel& model, const std::vector<FieldElem>& digits);

bool is_member(const CohenRingModel& model, const WittVector& a);

// lift(alpha^(p^-m))^(p^m) when the m-fold pth root exists, nullopt otherwise
// (not in the perfect core at this level).
std::optional<WittVector> multiplicative_representative(const CohenRingModel& model,
                                                        const FieldElem& alpha);

// Precision tower (C_l(k))_{l<=M} with truncation maps. compatible == false
// carries the first failing triple: either a representative that does not
// truncate onto the lower layer's (alpha = the basis element), or a sample
// whose representatives violate trunc(S_upper(alpha)) = S_lower(alpha).
struct TowerWitness {
    u32 upper = 0;
    u32 lower = 0;
    FieldElem alpha;
};

struct TowerResult {
    std::vector<CohenRingModel> layers;  // layers[l-1] has level l
    bool compatible = true;
    std::optional<TowerWitness> witness;
};

TowerResult tower(std::vector<CohenRingModel> family, const std::vector<FieldElem>& samples);
TowerResult tower(const CohenRingModel& top, const std::vector<FieldElem>& samples);

// sum_I b^I lift(c_I)^(p^m) against an arbitrary representative tuple; no
// independence requirement on the residues of b (morphism transport needs the
// bare formula).
WittVector assemble_rep(const FieldPtr& k, u32 m, const std::vector<WittVector>& b,
                        const LambdaDecomposition& dec, const LiftFn& lift);

// S(b, alpha) for a ring-sort tuple b of representatives: defined when the
// residue tuple res(b) is p-independent and alpha lies in its span. Undefined
// cases are statuses, not throws (the language interpretation maps them to 0).
enum class SpanStatus { ok, not_in_span, dependent_tuple };

struct SpanRep {
    SpanStatus status = SpanStatus::ok;
    WittVector value;
};

SpanRep lambda_rep_wrt(const FieldPtr& k, u32 m, const std::vector<WittVector>& b,
                       const FieldElem& alpha);

}  // namespace cwr
