#include "cwr/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "cwr/errors.hpp"

namespace cwr {

namespace {

u32 uniform_u32(Rng& g, u32 lo, u32 hi) {
    return std::uniform_int_distribution<u32>(lo, hi)(g);
}

u64 upow(u64 b, u32 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

FieldElem sample_monomial(Rng& g, const FieldPtr& k, u32 deg_cap) {
    FieldElem t = FieldElem::from_fq(k, sample_fq(g, k));
    for (u32 i = 0; i < k->r; ++i) {
        u32 e = uniform_u32(g, 0, deg_cap);
        if (e) t = t * field_pow(FieldElem::var(k, i), e);
    }
    return t;
}

FieldElem sample_poly_elem(Rng& g, const FieldPtr& k, u32 deg_cap) {
    FieldElem s = FieldElem::zero(k);
    const u32 terms = uniform_u32(g, 1, 3);
    for (u32 i = 0; i < terms; ++i) s = s + sample_monomial(g, k, deg_cap);
    return s;
}

}  // namespace

Fq sample_fq(Rng& g, const FieldPtr& k) {
    std::vector<u32> c(k->d);
    for (auto& x : c) x = uniform_u32(g, 0, k->p - 1);
    return fq_from_coeffs(k, c);
}

FieldElem sample_field_elem(Rng& g, const FieldPtr& k, u32 deg_cap) {
    FieldElem num = sample_poly_elem(g, k, deg_cap);
    FieldElem den = sample_poly_elem(g, k, deg_cap);
    while (den.is_zero()) den = sample_poly_elem(g, k, deg_cap);
    return num / den;
}

FieldElem sample_nonzero_field_elem(Rng& g, const FieldPtr& k, u32 deg_cap) {
    FieldElem x = sample_field_elem(g, k, deg_cap);
    while (x.is_zero()) x = sample_field_elem(g, k, deg_cap);
    return x;
}

WittVector sample_witt(Rng& g, const FieldPtr& k, u32 m, u32 deg_cap) {
    std::vector<FieldElem> digits;
    digits.reserve(m);
    for (u32 i = 0; i < m; ++i) digits.push_back(sample_field_elem(g, k, deg_cap));
    return witt_from_digits(k, std::move(digits));
}

WittVector sample_member(Rng& g, const CohenRingModel& model, u32 deg_cap) {
    std::vector<FieldElem> digits;
    digits.reserve(model.m);
    for (u32 i = 0; i < model.m; ++i)
        digits.push_back(sample_field_elem(g, model.k, deg_cap));
    return undigitize(model, digits);
}

ValuedElement sample_valued(Rng& g, const FieldPtr& k, u32 precision,
                            long long val_lo, long long val_hi, u32 deg_cap) {
    if (uniform_u32(g, 0, 7) == 0) return valued_zero(k, precision);
    CohenRingModel model = make_model(k, precision);
    std::vector<FieldElem> digits;
    digits.push_back(sample_nonzero_field_elem(g, k, deg_cap));
    for (u32 i = 1; i < precision; ++i)
        digits.push_back(sample_field_elem(g, k, deg_cap));
    long long val =
        std::uniform_int_distribution<long long>(val_lo, val_hi)(g);
    return make_valued(val, undigitize(model, digits));
}

std::vector<FieldElem> sample_p_independent(Rng& g, const FieldPtr& k, u32 r) {
    if (r > k->r)
        throw IndexMismatch("sample_p_independent: tuple longer than the variable count");
    std::vector<u32> idx(k->r);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), g);
    std::vector<FieldElem> out;
    out.reserve(r);
    for (u32 i = 0; i < r; ++i) {
        FieldElem unit = sample_nonzero_field_elem(g, k, 1);
        out.push_back(FieldElem::var(k, idx[i]) * field_pow(unit, k->p));
    }
    return out;
}

EnrichmentSample sample_enrichment(Rng& g, const CohenRingModel& model, u32 r) {
    const FieldPtr& k = model.k;
    std::vector<FieldElem> beta = sample_p_independent(g, k, r);
    EnrichmentSample s;
    s.b.reserve(r);
    for (const auto& be : beta) {
        std::vector<FieldElem> digits;
        digits.push_back(be);
        for (u32 i = 1; i < model.m; ++i)
            digits.push_back(sample_field_elem(g, k, 1));
        s.b.push_back(undigitize(model, digits));
    }
    if (uniform_u32(g, 0, 1) == 0) {
        s.alpha = sample_field_elem(g, k, 2);
        return s;
    }
    const u64 q = upow(k->p, model.m);
    FieldElem alpha = FieldElem::zero(k);
    const u32 terms = uniform_u32(g, 1, 3);
    for (u32 t = 0; t < terms; ++t) {
        FieldElem term = field_pow(sample_field_elem(g, k, 1), q);
        for (u32 i = 0; i < r; ++i) {
            u64 e = std::uniform_int_distribution<u64>(0, q - 1)(g);
            if (e) term = term * field_pow(beta[i], e);
        }
        alpha = alpha + term;
    }
    s.alpha = alpha;
    return s;
}

Assignment sample_assignment(Rng& g, const CohenRingModel& model,
                             const std::vector<std::string>& ring_vars,
                             const std::vector<std::string>& field_vars,
                             u32 deg_cap) {
    Assignment a;
    for (const auto& v : ring_vars) a.emplace(v, sample_member(g, model, deg_cap));
    for (const auto& v : field_vars)
        a.emplace(v, sample_field_elem(g, model.k, deg_cap));
    return a;
}

}  // namespace cwr
