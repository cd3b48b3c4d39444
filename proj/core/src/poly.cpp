#include "cwr/poly.hpp"

#include <algorithm>
#include <map>

#include "cwr/errors.hpp"

namespace cwr {

bool grlex_less(const Monomial& a, const Monomial& b) {
    u64 da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

namespace {

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
    return out;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (size_t i = 0; i < out.e.size(); ++i) {
        if (a.e[i] < b.e[i]) return std::nullopt;
        out.e[i] = a.e[i] - b.e[i];
    }
    return out;
}

Poly from_map(std::map<Monomial, Fq, GrlexLess>&& acc) {
    Poly out;
    out.t.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.t.push_back(PolyTerm{m, std::move(c)});
    return out;
}

// ---- multivariate gcd helpers: view as univariate in one variable ----

using UniView = std::map<u32, Poly>;  // degree in pivot var -> coefficient poly

u32 top_var(const Poly& a, const Poly& b) {
    // highest variable index occurring in either; UINT32_MAX when none
    u32 best = UINT32_MAX;
    auto scan = [&](const Poly& f) {
        for (const auto& t : f.t)
            for (size_t i = t.m.e.size(); i-- > 0;)
                if (t.m.e[i] != 0) {
                    u32 v = static_cast<u32>(i);
                    if (best == UINT32_MAX || v > best) best = v;
                    break;  // scanning from high index, first hit is max for this term
                }
    };
    scan(a);
    scan(b);
    return best;
}

UniView to_uni(const FieldPtr& k, const Poly& f, u32 v) {
    UniView out;
    for (const auto& t : f.t) {
        Monomial m = t.m;
        u32 dv = m.e[v];
        m.e[v] = 0;
        Poly& coeff = out[dv];
        coeff = poly_add(k, coeff, poly_term(k, m, t.c));
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Poly from_uni(const FieldPtr& k, const UniView& u, u32 v) {
    Poly out;
    for (const auto& [dv, coeff] : u) {
        Monomial xv;
        xv.e.assign(k->r, 0);
        xv.e[v] = dv;
        out = poly_add(k, out, poly_mul(k, coeff, poly_term(k, xv, fq_one())));
    }
    return out;
}

u32 uni_deg(const UniView& u) { return u.empty() ? 0 : u.rbegin()->first; }

bool uni_is_zero(const UniView& u) { return u.empty(); }

UniView uni_scale_poly(const FieldPtr& k, const UniView& u, const Poly& s) {
    UniView out;
    for (const auto& [d, c] : u) {
        Poly pc = poly_mul(k, c, s);
        if (!pc.is_zero()) out[d] = std::move(pc);
    }
    return out;
}

UniView uni_sub(const FieldPtr& k, const UniView& a, const UniView& b) {
    UniView out = a;
    for (const auto& [d, c] : b) {
        auto it = out.find(d);
        if (it == out.end()) {
            out[d] = poly_neg(k, c);
        } else {
            it->second = poly_sub(k, it->second, c);
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

UniView uni_shift(const UniView& u, u32 s) {
    UniView out;
    for (const auto& [d, c] : u) out[d + s] = c;
    return out;
}

// pseudo-remainder of a by b in the pivot variable
UniView uni_prem(const FieldPtr& k, UniView a, const UniView& b) {
    const u32 db = uni_deg(b);
    const Poly& lb = b.rbegin()->second;
    while (!uni_is_zero(a) && uni_deg(a) >= db) {
        u32 da = uni_deg(a);
        Poly la = a.rbegin()->second;
        // a := lb*a - la * x^(da-db) * b
        a = uni_sub(k, uni_scale_poly(k, a, lb), uni_scale_poly(k, uni_shift(b, da - db), la));
        if (!uni_is_zero(a) && uni_deg(a) == da) throw InternalError("pseudo-division stalled");
    }
    return a;
}

}  // namespace

Poly poly_zero() { return {}; }

Poly poly_const(const FieldPtr& k, const Fq& c) {
    if (c.is_zero()) return {};
    Poly out;
    Monomial m;
    m.e.assign(k->r, 0);
    out.t.push_back(PolyTerm{std::move(m), c});
    return out;
}

Poly poly_one(const FieldPtr& k) { return poly_const(k, fq_one()); }

Poly poly_var(const FieldPtr& k, u32 i) {
    if (i >= k->r) throw IndexMismatch("variable index out of range");
    Poly out;
    Monomial m;
    m.e.assign(k->r, 0);
    m.e[i] = 1;
    out.t.push_back(PolyTerm{std::move(m), fq_one()});
    return out;
}

Poly poly_term(const FieldPtr& k, Monomial m, Fq c) {
    if (m.e.size() != k->r) throw IndexMismatch("monomial arity mismatch");
    if (c.is_zero()) return {};
    Poly out;
    out.t.push_back(PolyTerm{std::move(m), std::move(c)});
    return out;
}

Poly poly_add(const FieldPtr& k, const Poly& a, const Poly& b) {
    Poly out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].m == b.t[j].m) {
            Fq s = fq_add(k, a.t[i].c, b.t[j].c);
            if (!s.is_zero()) out.t.push_back(PolyTerm{a.t[i].m, std::move(s)});
            ++i;
            ++j;
        } else if (grlex_less(a.t[i].m, b.t[j].m)) {
            out.t.push_back(a.t[i++]);
        } else {
            out.t.push_back(b.t[j++]);
        }
    }
    while (i < a.t.size()) out.t.push_back(a.t[i++]);
    while (j < b.t.size()) out.t.push_back(b.t[j++]);
    return out;
}

Poly poly_neg(const FieldPtr& k, const Poly& a) {
    Poly out = a;
    for (auto& t : out.t) t.c = fq_neg(k, t.c);
    return out;
}

Poly poly_sub(const FieldPtr& k, const Poly& a, const Poly& b) {
    return poly_add(k, a, poly_neg(k, b));
}

Poly poly_mul(const FieldPtr& k, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<Monomial, Fq, GrlexLess> acc;
    for (const auto& ta : a.t)
        for (const auto& tb : b.t) {
            Monomial m = mono_mul(ta.m, tb.m);
            Fq prod = fq_mul(k, ta.c, tb.c);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(prod));
            else
                it->second = fq_add(k, it->second, prod);
        }
    return from_map(std::move(acc));
}

Poly poly_scale(const FieldPtr& k, const Poly& a, const Fq& c) {
    if (c.is_zero()) return {};
    Poly out;
    out.t.reserve(a.t.size());
    for (const auto& t : a.t) {
        Fq prod = fq_mul(k, t.c, c);
        if (!prod.is_zero()) out.t.push_back(PolyTerm{t.m, std::move(prod)});
    }
    return out;
}

Poly poly_pow(const FieldPtr& k, const Poly& a, u64 e) {
    Poly result = poly_one(k);
    Poly base = a;
    while (e > 0) {
        if (e & 1) result = poly_mul(k, result, base);
        base = poly_mul(k, base, base);
        e >>= 1;
    }
    return result;
}

std::optional<Poly> poly_divexact(const FieldPtr& k, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly rem = a;
    std::map<Monomial, Fq, GrlexLess> q;
    const Fq lbinv = fq_inv(k, b.leading().c);
    while (!rem.is_zero()) {
        auto m = mono_div(rem.leading().m, b.leading().m);
        if (!m) return std::nullopt;
        Fq c = fq_mul(k, rem.leading().c, lbinv);
        Poly t = poly_term(k, *m, c);
        rem = poly_sub(k, rem, poly_mul(k, t, b));
        auto it = q.find(*m);
        if (it == q.end())
            q.emplace(std::move(*m), std::move(c));
        else
            it->second = fq_add(k, it->second, c);
    }
    return from_map(std::move(q));
}

Poly poly_monic(const FieldPtr& k, const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(k, a, fq_inv(k, a.leading().c));
}

Poly poly_gcd(const FieldPtr& k, const Poly& a, const Poly& b) {
    if (a.is_zero()) return poly_monic(k, b);
    if (b.is_zero()) return poly_monic(k, a);
    if (a == b) return poly_monic(k, a);
    u32 v = top_var(a, b);
    if (v == UINT32_MAX) return poly_one(k);  // both nonzero constants

    UniView ua = to_uni(k, a, v), ub = to_uni(k, b, v);

    auto content = [&](const UniView& u) {
        Poly c;
        for (const auto& [d, coeff] : u) c = poly_gcd(k, c, coeff);
        return c;
    };
    auto primitive = [&](const UniView& u) -> UniView {
        if (u.empty()) return u;
        Poly c = content(u);
        UniView out;
        for (const auto& [d, coeff] : u) {
            auto q = poly_divexact(k, coeff, c);
            if (!q) throw InternalError("content does not divide coefficient");
            out[d] = std::move(*q);
        }
        return out;
    };

    Poly ca = content(ua), cb = content(ub);
    Poly cg = poly_gcd(k, ca, cb);
    UniView f = primitive(ua), g = primitive(ub);
    if (uni_deg(f) < uni_deg(g)) std::swap(f, g);
    while (!uni_is_zero(g)) {
        UniView rdm = uni_prem(k, f, g);
        f = std::move(g);
        g = primitive(rdm);
    }
    Poly res = poly_mul(k, cg, from_uni(k, f, v));
    return poly_monic(k, res);
}

Poly poly_frobenius(const FieldPtr& k, const Poly& a) {
    Poly out;
    out.t.reserve(a.t.size());
    for (const auto& t : a.t) {
        Monomial m = t.m;
        for (auto& e : m.e) e *= k->p;
        out.t.push_back(PolyTerm{std::move(m), fq_frobenius(k, t.c)});
    }
    // frobenius preserves grlex order, terms stay sorted
    return out;
}

std::optional<Poly> poly_pth_root(const FieldPtr& k, const Poly& a) {
    Poly out;
    out.t.reserve(a.t.size());
    for (const auto& t : a.t) {
        Monomial m = t.m;
        for (auto& e : m.e) {
            if (e % k->p != 0) return std::nullopt;
            e /= k->p;
        }
        out.t.push_back(PolyTerm{std::move(m), fq_pth_root(k, t.c)});
    }
    return out;
}

}  // namespace cwr
