#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cwr/cohen.hpp"

namespace cwr {

// Field homomorphism k1 -> k2 given by images of the canonical generators
// (w when d > 1, and t_1..t_r). Total on polynomials; on fractions it throws
// MapUndefined when a denominator image vanishes (the shipped constructions
// never do).
struct FieldHom {
    FieldPtr source;
    FieldPtr target;
    std::optional<FieldElem> gen_image;   // image of w, required iff source d > 1
    std::vector<FieldElem> var_images;    // images of t_i, length source r
};

FieldHom identity_hom(const FieldPtr& k);
// Validates characteristic, arity, and the modulus relation on gen_image.
FieldHom make_field_hom(const FieldPtr& source, const FieldPtr& target,
                        std::optional<FieldElem> gen_image, std::vector<FieldElem> var_images);
FieldHom compose(const FieldHom& g, const FieldHom& f);  // g after f

FieldElem apply(const FieldHom& h, const FieldElem& a);

// Digit-wise application: the functorial map W_m(k1) -> W_m(k2).
WittVector witt_map(const FieldHom& h, const WittVector& x);

// Morphism of Cohen rings, stored by generator data: the residue map and the
// images of the source representatives. Evaluation is digit transport:
// digitize in the source, map each digit's lambda-coefficients through the
// residue map, reassemble against rep_images in the target.
struct CohenMorphism {
    CohenRingModel source;
    CohenRingModel target;
    FieldHom residue_map;
    std::vector<WittVector> rep_images;  // images of source.reps, length-m vectors over target
};

// Throws MapUndefined when x is not a member of the source Cohen ring.
WittVector apply(const CohenMorphism& phi, const WittVector& x);

// The unique isomorphism over id_k respecting both representative systems
// (same field, level, and p-basis; representatives may differ).
CohenMorphism structure_isomorphism(const CohenRingModel& m1, const CohenRingModel& m2);

// Stage-n Teichmuller embedding: the root field k(beta^(p^-n)) is realized on
// fresh generators u_i with t_i = u_i^(p^n); since field descriptors are
// structural this is the twist t_i -> t_i^(p^n) into the canonical model.
// Requires the canonical model (full canonical basis, Teichmuller
// representatives). Each representative image carries a p^n-th root witness.
struct TepEmbedding {
    CohenMorphism phi;
    u32 stage = 0;
    std::vector<WittVector> root_witnesses;  // witness[mu]^(p^stage) = phi(s(beta_mu))
};

TepEmbedding tep_embed(const CohenRingModel& model, u32 stage);

// Embedding over a common base model: base_embed includes the base field in
// the source field, phi_k embeds the source field in the target field, and
// the relative tuple witnesses separability (validated for p-independence).
// Representative images follow the target's own system: a basis entry mapped
// onto a target basis entry uses that entry's representative, anything else
// its canonical lambda-representative. Base respect is verified on the given
// base-ring samples and reported, not thrown.
struct EmbeddingOverBase {
    CohenMorphism phi;
    bool base_respected = true;
    std::optional<WittVector> witness;  // first base sample moved by the morphism
};

EmbeddingOverBase embedding_over_base(const CohenRingModel& base, const FieldHom& base_embed,
                                      const CohenRingModel& source, const CohenRingModel& target,
                                      const FieldHom& phi_k,
                                      const std::vector<FieldElem>& rel_pbasis,
                                      const std::vector<WittVector>& base_samples);

// Enrichment compatibility: phi(S(b, alpha)) = S(phi(b), phi_k(alpha)) on
// sampled pairs. Samples whose image tuple fails the S-hypotheses (residues
// p-dependent, or the mapped alpha outside their span) are counted
// inapplicable rather than failing.
struct EnrichmentSample {
    std::vector<WittVector> b;
    FieldElem alpha;
};

struct EnrichmentReport {
    u32 applicable = 0;
    u32 inapplicable = 0;
    std::vector<EnrichmentSample> discrepancies;
};

EnrichmentReport check_enrichment(const CohenMorphism& phi,
                                  const std::vector<EnrichmentSample>& samples);

// Ring-homomorphism and residue-compatibility spot checks on sample pairs.
struct HomReport {
    u32 checked = 0;
    std::vector<std::pair<WittVector, WittVector>> violations;
};

HomReport check_homomorphism(const CohenMorphism& phi,
                             const std::vector<std::pair<WittVector, WittVector>>& pairs);

}  // namespace cwr
