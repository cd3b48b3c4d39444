#include "cwr/morphism.hpp"

#include <utility>

#include "cwr/errors.hpp"
#include "cwr/fq.hpp"

namespace cwr {

namespace {

u64 upow(u64 b, u32 e) {
    u64 r = 1;
    for (u32 i = 0; i < e; ++i) r *= b;
    return r;
}

FieldElem map_fq(const FieldHom& h, const Fq& c) {
    const FieldPtr& K = h.target;
    if (c.is_zero()) return FieldElem::zero(K);
    if (h.source->d == 1) return FieldElem::from_int(K, c.c[0]);
    FieldElem acc = FieldElem::zero(K);
    for (size_t j = c.c.size(); j-- > 0;)
        acc = acc * (*h.gen_image) + FieldElem::from_int(K, c.c[j]);
    return acc;
}

FieldElem image_poly(const FieldHom& h, const Poly& f) {
    FieldElem acc = FieldElem::zero(h.target);
    for (const PolyTerm& t : f.t) {
        FieldElem term = map_fq(h, t.c);
        for (u32 i = 0; i < t.m.e.size(); ++i)
            if (t.m.e[i] != 0) term = term * field_pow(h.var_images[i], t.m.e[i]);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

FieldHom identity_hom(const FieldPtr& k) {
    std::optional<FieldElem> gi;
    if (k->d > 1) gi = FieldElem::gen(k);
    std::vector<FieldElem> vi;
    vi.reserve(k->r);
    for (u32 i = 0; i < k->r; ++i) vi.push_back(FieldElem::var(k, i));
    return FieldHom{k, k, std::move(gi), std::move(vi)};
}

FieldHom make_field_hom(const FieldPtr& source, const FieldPtr& target,
                        std::optional<FieldElem> gen_image, std::vector<FieldElem> var_images) {
    if (!source || !target) throw ModelMismatch("field hom needs fields");
    if (source->p != target->p) throw FieldMismatch("field hom across characteristics");
    if (var_images.size() != source->r) throw IndexMismatch("one image per transcendental");
    for (const FieldElem& v : var_images) require_same_field(target, v.field(), "field hom image");
    FieldHom h{source, target, std::move(gen_image), std::move(var_images)};
    if (source->d > 1) {
        if (!h.gen_image) throw ModelMismatch("field hom needs a generator image");
        require_same_field(target, h.gen_image->field(), "field hom image");
        FieldElem v = FieldElem::zero(target);
        for (size_t j = source->modulus.size(); j-- > 0;)
            v = v * (*h.gen_image) + FieldElem::from_int(target, source->modulus[j]);
        if (!v.is_zero()) throw ModelMismatch("generator image violates the modulus");
    } else if (h.gen_image) {
        throw ModelMismatch("no generator to map for d = 1");
    }
    return h;
}

FieldHom compose(const FieldHom& g, const FieldHom& f) {
    require_same_field(g.source, f.target, "compose");
    std::optional<FieldElem> gi;
    if (f.source->d > 1) gi = apply(g, *f.gen_image);
    std::vector<FieldElem> vi;
    vi.reserve(f.var_images.size());
    for (const FieldElem& v : f.var_images) vi.push_back(apply(g, v));
    return FieldHom{f.source, g.target, std::move(gi), std::move(vi)};
}

FieldElem apply(const FieldHom& h, const FieldElem& a) {
    require_same_field(h.source, a.field(), "field hom argument");
    FieldElem num = image_poly(h, a.num());
    FieldElem den = image_poly(h, a.den());
    if (den.is_zero()) throw MapUndefined("denominator image vanishes");
    return num / den;
}

WittVector witt_map(const FieldHom& h, const WittVector& x) {
    require_same_field(h.source, x.k, "witt_map");
    std::vector<FieldElem> digits;
    digits.reserve(x.length());
    for (const FieldElem& a : x.a) digits.push_back(apply(h, a));
    return witt_from_digits(h.target, std::move(digits));
}

WittVector apply(const CohenMorphism& phi, const WittVector& x) {
    auto digits = digitize(phi.source, x);
    if (!digits) throw MapUndefined("argument is not a member of the source Cohen ring");
    const u32 m = phi.source.m;
    WittVector acc = witt_zero(phi.target.k, m);
    for (u32 i = 0; i < m; ++i) {
        const u32 l = m - i;
        auto dec = lambda_decompose(phi.source.k, phi.source.pbasis, l, (*digits)[i],
                                    {.skip_independence_check = true});
        if (!dec) throw NotInSpan("digit is outside the span of the source basis");
        LambdaDecomposition mapped;
        mapped.level = l;
        mapped.nu = dec->nu;
        mapped.coeffs.reserve(dec->coeffs.size());
        for (const auto& [I, c] : dec->coeffs) mapped.coeffs.emplace_back(I, apply(phi.residue_map, c));
        std::vector<WittVector> reps;
        reps.reserve(phi.rep_images.size());
        for (const WittVector& s : phi.rep_images) reps.push_back(witt_truncate(s, l));
        WittVector term = assemble_rep(phi.target.k, l, reps, mapped, default_lift);
        std::vector<FieldElem> padded = term.a;
        padded.resize(m, FieldElem::zero(phi.target.k));
        acc = witt_add(acc, witt_times_p_pow(witt_from_digits(phi.target.k, std::move(padded)), i));
    }
    return acc;
}

CohenMorphism structure_isomorphism(const CohenRingModel& m1, const CohenRingModel& m2) {
    require_same_field(m1.k, m2.k, "structure_isomorphism");
    if (m1.m != m2.m) throw ModelMismatch("structure_isomorphism levels differ");
    if (m1.pbasis.size() != m2.pbasis.size())
        throw ModelMismatch("structure_isomorphism p-bases differ");
    for (size_t i = 0; i < m1.pbasis.size(); ++i)
        if (!(m1.pbasis[i] == m2.pbasis[i]))
            throw ModelMismatch("structure_isomorphism p-bases differ");
    return CohenMorphism{m1, m2, identity_hom(m1.k), m2.reps};
}

TepEmbedding tep_embed(const CohenRingModel& model, u32 stage) {
    if (stage > model.m) throw StageError("tep stage exceeds the model level");
    const FieldPtr& k = model.k;
    std::vector<FieldElem> canon = canonical_pbasis(k);
    bool canonical = model.pbasis.size() == canon.size();
    for (size_t i = 0; canonical && i < canon.size(); ++i)
        canonical = model.pbasis[i] == canon[i] &&
                    model.reps[i] == teichmuller(k, model.pbasis[i], model.m);
    if (!canonical) throw ModelMismatch("tep_embed needs the canonical model");
    const u64 q = upow(k->p, stage);
    std::optional<FieldElem> gi;
    if (k->d > 1) gi = FieldElem::gen(k);
    std::vector<FieldElem> vi;
    vi.reserve(k->r);
    for (u32 i = 0; i < k->r; ++i) vi.push_back(field_pow(FieldElem::var(k, i), q));
    FieldHom phik = make_field_hom(k, k, std::move(gi), std::move(vi));
    CohenRingModel target = make_model(k, model.m);
    std::vector<WittVector> rep_images;
    std::vector<WittVector> witnesses;
    rep_images.reserve(canon.size());
    witnesses.reserve(canon.size());
    for (size_t mu = 0; mu < canon.size(); ++mu) {
        WittVector w = teichmuller(k, canon[mu], model.m);
        rep_images.push_back(witt_pow(w, q));
        witnesses.push_back(std::move(w));
    }
    return TepEmbedding{CohenMorphism{model, std::move(target), std::move(phik), std::move(rep_images)},
                        stage, std::move(witnesses)};
}

EmbeddingOverBase embedding_over_base(const CohenRingModel& base, const FieldHom& base_embed,
                                      const CohenRingModel& source, const CohenRingModel& target,
                                      const FieldHom& phi_k,
                                      const std::vector<FieldElem>& rel_pbasis,
                                      const std::vector<WittVector>& base_samples) {
    if (base.m != source.m || source.m != target.m)
        throw ModelMismatch("embedding_over_base levels differ");
    require_same_field(base_embed.source, base.k, "embedding_over_base");
    require_same_field(base_embed.target, source.k, "embedding_over_base");
    require_same_field(phi_k.source, source.k, "embedding_over_base");
    require_same_field(phi_k.target, target.k, "embedding_over_base");
    for (const FieldElem& b : rel_pbasis) require_same_field(target.k, b.field(), "relative tuple");
    if (!is_p_independent(target.k, rel_pbasis))
        throw SeparabilityWitnessInvalid("relative tuple is p-dependent");
    std::vector<WittVector> rep_images;
    rep_images.reserve(source.pbasis.size());
    for (const FieldElem& beta : source.pbasis) {
        FieldElem im = apply(phi_k, beta);
        const WittVector* hit = nullptr;
        for (size_t nu = 0; nu < target.pbasis.size(); ++nu)
            if (im == target.pbasis[nu]) {
                hit = &target.reps[nu];
                break;
            }
        rep_images.push_back(hit ? *hit : lambda_representative(target, im));
    }
    EmbeddingOverBase R{CohenMorphism{source, target, phi_k, std::move(rep_images)}, true,
                        std::nullopt};
    FieldHom through = compose(phi_k, base_embed);
    for (const WittVector& s : base_samples) {
        require_same_field(base.k, s.k, "embedding_over_base sample");
        WittVector in_source = witt_map(base_embed, s);
        if (apply(R.phi, in_source) != witt_map(through, s)) {
            R.base_respected = false;
            R.witness = s;
            break;
        }
    }
    return R;
}

EnrichmentReport check_enrichment(const CohenMorphism& phi,
                                  const std::vector<EnrichmentSample>& samples) {
    EnrichmentReport R;
    const u32 m = phi.source.m;
    for (const EnrichmentSample& smp : samples) {
        SpanRep lhs_rep = lambda_rep_wrt(phi.source.k, m, smp.b, smp.alpha);
        if (lhs_rep.status != SpanStatus::ok) {
            ++R.inapplicable;
            continue;
        }
        WittVector lhs = apply(phi, lhs_rep.value);
        std::vector<WittVector> bimg;
        bimg.reserve(smp.b.size());
        for (const WittVector& bi : smp.b) bimg.push_back(apply(phi, bi));
        SpanRep rhs = lambda_rep_wrt(phi.target.k, m, bimg, apply(phi.residue_map, smp.alpha));
        if (rhs.status != SpanStatus::ok) {
            ++R.inapplicable;
            continue;
        }
        ++R.applicable;
        if (lhs != rhs.value) R.discrepancies.push_back(smp);
    }
    return R;
}

HomReport check_homomorphism(const CohenMorphism& phi,
                             const std::vector<std::pair<WittVector, WittVector>>& pairs) {
    HomReport R;
    for (const auto& [x, y] : pairs) {
        ++R.checked;
        WittVector fx = apply(phi, x);
        WittVector fy = apply(phi, y);
        bool ok = apply(phi, witt_add(x, y)) == witt_add(fx, fy) &&
                  apply(phi, witt_mul(x, y)) == witt_mul(fx, fy) &&
                  fx.a[0] == apply(phi.residue_map, x.a[0]) &&
                  fy.a[0] == apply(phi.residue_map, y.a[0]);
        if (!ok) R.violations.emplace_back(x, y);
    }
    return R;
}

}  // namespace cwr
