#include "cwr/cohen.hpp"

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

void validate_model(const CohenRingModel& M) {
    if (!M.k) throw ModelMismatch("model has no field");
    if (M.m == 0) throw LevelError("cohen model needs level >= 1");
    if (M.reps.size() != M.pbasis.size()) throw ModelMismatch("one representative per basis entry");
    for (size_t mu = 0; mu < M.pbasis.size(); ++mu) {
        require_same_field(M.k, M.pbasis[mu].field(), "cohen model basis");
        require_same_field(M.k, M.reps[mu].k, "cohen model representative");
        if (M.reps[mu].length() != M.m) throw ModelMismatch("representative has wrong length");
        if (!(M.reps[mu].a[0] == M.pbasis[mu]))
            throw ModelMismatch("representative does not lift its basis entry");
    }
    if (!is_p_independent(M.k, M.pbasis)) throw NotPIndependent("cohen model basis");
}

bool basis_is_full(const CohenRingModel& M) { return M.pbasis.size() == M.k->r; }

}  // namespace

WittVector assemble_rep(const FieldPtr& k, u32 m, const std::vector<WittVector>& b,
                        const LambdaDecomposition& dec, const LiftFn& lift) {
    if (dec.nu != b.size()) throw IndexMismatch("assemble_rep tuple arity");
    const u64 q = upow(k->p, m);
    WittVector acc = witt_zero(k, m);
    for (const auto& [I, c] : dec.coeffs) {
        WittVector lifted = lift(c, m);
        require_same_field(k, lifted.k, "assemble_rep lift");
        if (lifted.length() != m) throw ModelMismatch("lift returned wrong length");
        if (!(lifted.a[0] == c)) throw ModelMismatch("lift does not lift its argument");
        WittVector term = witt_pow(lifted, q);
        for (size_t mu = 0; mu < b.size(); ++mu)
            if (I.v[mu] != 0) term = witt_mul(term, witt_pow(b[mu], I.v[mu]));
        acc = witt_add(acc, term);
    }
    return acc;
}

CohenRingModel make_model(const FieldPtr& k, u32 m) {
    if (!k) throw ModelMismatch("model has no field");
    return make_model(k, m, canonical_pbasis(k));
}

CohenRingModel make_model(const FieldPtr& k, u32 m, std::vector<FieldElem> pbasis) {
    std::vector<WittVector> reps;
    reps.reserve(pbasis.size());
    for (const FieldElem& b : pbasis) reps.push_back(teichmuller(k, b, m));
    return make_model(k, m, std::move(pbasis), std::move(reps));
}

CohenRingModel make_model(const FieldPtr& k, u32 m, std::vector<FieldElem> pbasis,
                          std::vector<WittVector> reps) {
    CohenRingModel M{k, m, std::move(pbasis), std::move(reps)};
    validate_model(M);
    return M;
}

CohenRingModel truncate_model(const CohenRingModel& model, u32 l) {
    if (l < 1 || l > model.m) throw LevelError("truncate_model target level");
    CohenRingModel M{model.k, l, model.pbasis, {}};
    M.reps.reserve(model.reps.size());
    for (const WittVector& s : model.reps) M.reps.push_back(witt_truncate(s, l));
    return M;
}

WittVector default_lift(const FieldElem& gamma, u32 length) {
    const FieldPtr k = gamma.field();
    std::vector<FieldElem> digits(length, FieldElem::zero(k));
    digits[0] = gamma;
    return witt_from_digits(k, std::move(digits));
}

WittVector lambda_representative(const CohenRingModel& model, const FieldElem& alpha) {
    return lambda_representative(model, alpha, default_lift);
}

WittVector lambda_representative(const CohenRingModel& model, const FieldElem& alpha,
                                 const LiftFn& lift) {
    require_same_field(model.k, alpha.field(), "lambda_representative");
    auto dec = lambda_decompose(model.k, model.pbasis, model.m, alpha,
                                {.skip_independence_check = true});
    if (!dec) throw NotInSpan("alpha is outside the p^m-span of the model basis");
    return assemble_rep(model.k, model.m, model.reps, *dec, lift);
}

std::optional<std::vector<FieldElem>> digitize(const CohenRingModel& model, const WittVector& a) {
    require_same_field(model.k, a.k, "digitize");
    if (a.length() != model.m) throw LevelError("digitize expects a full-length vector");
    std::vector<FieldElem> out;
    out.reserve(model.m);
    CohenRingModel cur = model;
    WittVector rest = a;
    for (u32 l = model.m;; --l) {
        const FieldElem digit = rest.a[0];
        out.push_back(digit);
        if (l == 1) {
            if (!basis_is_full(cur) &&
                !lambda_decompose(cur.k, cur.pbasis, 1, digit, {.skip_independence_check = true}))
                throw NotInSpan("digit is outside the p-span of the model basis");
            break;
        }
        WittVector v = witt_sub(rest, lambda_representative(cur, digit));
        auto w = witt_div_by_p(v);
        if (!w) return std::nullopt;
        rest = std::move(*w);
        cur = truncate_model(cur, l - 1);
    }
    return out;
}

WittVector undigitize(const CohenRingModel& model, const std::vector<FieldElem>& digits) {
    if (digits.size() != model.m) throw LevelError("undigitize expects m digits");
    for (const FieldElem& d : digits) require_same_field(model.k, d.field(), "undigitize");
    WittVector acc = witt_zero(model.k, model.m);
    CohenRingModel cur = model;
    for (u32 i = 0; i < model.m; ++i) {
        if (i > 0) cur = truncate_model(cur, model.m - i);
        WittVector rep = lambda_representative(cur, digits[i]);
        std::vector<FieldElem> padded = rep.a;
        padded.resize(model.m, FieldElem::zero(model.k));
        acc = witt_add(acc, witt_times_p_pow(witt_from_digits(model.k, std::move(padded)), i));
    }
    return acc;
}

bool is_member(const CohenRingModel& model, const WittVector& a) {
    return digitize(model, a).has_value();
}

std::optional<WittVector> multiplicative_representative(const CohenRingModel& model,
                                                        const FieldElem& alpha) {
    require_same_field(model.k, alpha.field(), "multiplicative_representative");
    auto root = pth_root_iter(alpha, model.m);
    if (!root) return std::nullopt;
    return witt_pow(default_lift(*root, model.m), upow(model.k->p, model.m));
}

TowerResult tower(std::vector<CohenRingModel> family, const std::vector<FieldElem>& samples) {
    if (family.empty()) throw ModelMismatch("tower needs at least one layer");
    for (size_t i = 0; i < family.size(); ++i) {
        validate_model(family[i]);
        if (family[i].m != static_cast<u32>(i + 1)) throw ModelMismatch("tower layers must have levels 1..M");
        require_same_field(family[0].k, family[i].k, "tower");
        if (family[i].pbasis.size() != family[0].pbasis.size())
            throw ModelMismatch("tower layers disagree on the p-basis");
        for (size_t mu = 0; mu < family[0].pbasis.size(); ++mu)
            if (!(family[i].pbasis[mu] == family[0].pbasis[mu]))
                throw ModelMismatch("tower layers disagree on the p-basis");
    }
    TowerResult R{std::move(family), true, std::nullopt};
    const u32 M = static_cast<u32>(R.layers.size());
    for (u32 n = 2; n <= M; ++n)
        for (u32 m = 1; m < n; ++m)
            for (size_t mu = 0; mu < R.layers[0].pbasis.size(); ++mu)
                if (witt_truncate(R.layers[n - 1].reps[mu], m) != R.layers[m - 1].reps[mu]) {
                    R.compatible = false;
                    R.witness = TowerWitness{n, m, R.layers[0].pbasis[mu]};
                    return R;
                }
    for (const FieldElem& alpha : samples) {
        require_same_field(R.layers[0].k, alpha.field(), "tower sample");
        std::vector<WittVector> rep;
        rep.reserve(M);
        for (u32 l = 1; l <= M; ++l) rep.push_back(lambda_representative(R.layers[l - 1], alpha));
        for (u32 n = 2; n <= M; ++n)
            for (u32 m = 1; m < n; ++m)
                if (witt_truncate(rep[n - 1], m) != rep[m - 1]) {
                    R.compatible = false;
                    R.witness = TowerWitness{n, m, alpha};
                    return R;
                }
    }
    return R;
}

TowerResult tower(const CohenRingModel& top, const std::vector<FieldElem>& samples) {
    validate_model(top);
    std::vector<CohenRingModel> family;
    family.reserve(top.m);
    for (u32 l = 1; l <= top.m; ++l) family.push_back(truncate_model(top, l));
    return tower(std::move(family), samples);
}

SpanRep lambda_rep_wrt(const FieldPtr& k, u32 m, const std::vector<WittVector>& b,
                       const FieldElem& alpha) {
    require_same_field(k, alpha.field(), "lambda_rep_wrt");
    if (m == 0) throw LevelError("lambda_rep_wrt needs level >= 1");
    std::vector<FieldElem> res;
    res.reserve(b.size());
    for (const WittVector& s : b) {
        require_same_field(k, s.k, "lambda_rep_wrt");
        if (s.length() != m) throw LevelError("lambda_rep_wrt tuple entry has wrong length");
        res.push_back(s.a[0]);
    }
    if (!is_p_independent(k, res)) return {SpanStatus::dependent_tuple, {}};
    auto dec = lambda_decompose(k, res, m, alpha, {.skip_independence_check = true});
    if (!dec) return {SpanStatus::not_in_span, {}};
    return {SpanStatus::ok, assemble_rep(k, m, b, *dec, default_lift)};
}

}  // namespace cwr
