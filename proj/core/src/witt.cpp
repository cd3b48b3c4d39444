#include "cwr/witt.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "cwr/errors.hpp"

namespace cwr {
namespace {

using boost::multiprecision::cpp_int;

// Lift ring Z for W_m(F_p): digits are scalars, ghost arithmetic is plain
// big-integer arithmetic.
struct ZLift {
    using Elem = cpp_int;
    FieldPtr k;
    cpp_int pc;

    explicit ZLift(const FieldPtr& kk) : k(kk), pc(kk->p) {}

    Elem lift(const FieldElem& a) const {
        if (a.is_zero()) return 0;
        const Fq& c = a.num().t.front().c;
        return c.c.empty() ? 0 : c.c[0];
    }
    FieldElem reduce(const Elem& v) const {
        cpp_int r = v % pc;
        if (r < 0) r += pc;
        return FieldElem::from_int(k, r.convert_to<long long>());
    }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem pow_p(const Elem& a) const { return pow(a, k->p); }
    Elem scale(const Elem& a, const cpp_int& s) const { return a * s; }
    Elem div_p_pow(const Elem& a, u32 n) const {
        cpp_int q, rem;
        divide_qr(a, cpp_int(pow(pc, n)), q, rem);
        if (rem != 0) throw InternalError("ghost recursion division not exact");
        return q;
    }
};

// Lift ring for the general case: fractions over (Z[w]/(Mt))[t1..tr] with
// denominators that stay nonzero mod p. Mt is the coefficient-wise integer
// lift of the field modulus (monic, so reduction is exact division-free long
// division). Fractions are never gcd-reduced; exactness of the p-power
// division on numerators is guaranteed because the reduction of the ring mod
// p is a domain and denominators avoid p.
struct GenLift {
    using ICoef = std::vector<cpp_int>;  // length d, coefficients of w^0..w^(d-1)
    using IKey = std::vector<u32>;       // exponents of t1..tr, length r

    struct IPoly {
        std::map<IKey, ICoef> t;
    };
    struct Elem {
        IPoly num, den;
    };

    FieldPtr k;
    u32 p, d, r;
    cpp_int pc;
    std::vector<cpp_int> Mt;  // length d+1 when d >= 2

    explicit GenLift(const FieldPtr& kk) : k(kk), p(kk->p), d(kk->d), r(kk->r), pc(kk->p) {
        for (u32 c : k->modulus) Mt.emplace_back(c);
    }

    ICoef czero() const { return ICoef(d, 0); }
    static bool cis0(const ICoef& c) {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    ICoef cneg(const ICoef& a) const {
        ICoef o(d);
        for (u32 i = 0; i < d; ++i) o[i] = -a[i];
        return o;
    }
    ICoef cadd(const ICoef& a, const ICoef& b) const {
        ICoef o(d);
        for (u32 i = 0; i < d; ++i) o[i] = a[i] + b[i];
        return o;
    }
    ICoef cmul(const ICoef& a, const ICoef& b) const {
        std::vector<cpp_int> conv(2 * d - 1, 0);
        for (u32 i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (u32 j = 0; j < d; ++j)
                if (b[j] != 0) conv[i + j] += a[i] * b[j];
        }
        for (u32 i = 2 * d - 2; i + 1 > d; --i) {
            if (conv[i] == 0) continue;
            cpp_int q = conv[i];
            conv[i] = 0;
            for (u32 j = 0; j < d; ++j) conv[i - d + j] -= q * Mt[j];
        }
        conv.resize(d);
        return conv;
    }

    void paccum(IPoly& a, const IKey& key, const ICoef& c) const {
        auto it = a.t.find(key);
        if (it == a.t.end()) {
            if (!cis0(c)) a.t.emplace(key, c);
            return;
        }
        it->second = cadd(it->second, c);
        if (cis0(it->second)) a.t.erase(it);
    }
    IPoly padd(const IPoly& a, const IPoly& b) const {
        IPoly o = a;
        for (const auto& [key, c] : b.t) paccum(o, key, c);
        return o;
    }
    IPoly pneg(const IPoly& a) const {
        IPoly o;
        for (const auto& [key, c] : a.t) o.t.emplace(key, cneg(c));
        return o;
    }
    IPoly pmul(const IPoly& a, const IPoly& b) const {
        IPoly o;
        for (const auto& [ka, ca] : a.t)
            for (const auto& [kb, cb] : b.t) {
                IKey key(r);
                for (u32 i = 0; i < r; ++i) key[i] = ka[i] + kb[i];
                paccum(o, key, cmul(ca, cb));
            }
        return o;
    }
    IPoly pscale(const IPoly& a, const cpp_int& s) const {
        IPoly o;
        if (s == 0) return o;
        for (const auto& [key, c] : a.t) {
            ICoef sc(d);
            for (u32 i = 0; i < d; ++i) sc[i] = c[i] * s;
            o.t.emplace(key, std::move(sc));
        }
        return o;
    }
    IPoly ppow(const IPoly& a, u32 e) const {
        IPoly acc = pone();
        IPoly base = a;
        while (e > 0) {
            if (e & 1u) acc = pmul(acc, base);
            e >>= 1u;
            if (e) base = pmul(base, base);
        }
        return acc;
    }
    IPoly pone() const {
        IPoly o;
        ICoef c = czero();
        c[0] = 1;
        o.t.emplace(IKey(r, 0), std::move(c));
        return o;
    }
    IPoly pdiv_p_pow(const IPoly& a, u32 n) const {
        cpp_int pn = pow(pc, n);
        IPoly o;
        for (const auto& [key, c] : a.t) {
            ICoef qc(d);
            for (u32 i = 0; i < d; ++i) {
                cpp_int q, rem;
                divide_qr(c[i], pn, q, rem);
                if (rem != 0) throw InternalError("ghost recursion division not exact");
                qc[i] = std::move(q);
            }
            o.t.emplace(key, std::move(qc));
        }
        return o;
    }

    IPoly lift_poly(const Poly& a) const {
        IPoly o;
        for (const PolyTerm& term : a.t) {
            ICoef c = czero();
            for (size_t i = 0; i < term.c.c.size(); ++i) c[i] = term.c.c[i];
            o.t.emplace(term.m.e, std::move(c));
        }
        return o;
    }
    Poly reduce_poly(const IPoly& a) const {
        Poly out = poly_zero();
        for (const auto& [key, c] : a.t) {
            std::vector<u32> fc(d);
            for (u32 i = 0; i < d; ++i) {
                cpp_int v = c[i] % pc;
                if (v < 0) v += pc;
                fc[i] = v.convert_to<u32>();
            }
            while (!fc.empty() && fc.back() == 0) fc.pop_back();
            if (fc.empty()) continue;
            Monomial mono;
            mono.e = key;
            out = poly_add(k, out, poly_term(k, std::move(mono), Fq{std::move(fc)}));
        }
        return out;
    }

    Elem lift(const FieldElem& a) const { return Elem{lift_poly(a.num()), lift_poly(a.den())}; }
    FieldElem reduce(const Elem& v) const {
        Poly den = reduce_poly(v.den);
        if (den.is_zero()) throw InternalError("lift denominator degenerated mod p");
        return FieldElem(k, reduce_poly(v.num), std::move(den));
    }
    Elem add(const Elem& a, const Elem& b) const {
        if (a.den.t == b.den.t) return Elem{padd(a.num, b.num), a.den};
        return Elem{padd(pmul(a.num, b.den), pmul(b.num, a.den)), pmul(a.den, b.den)};
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const { return Elem{pneg(a.num), a.den}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return Elem{pmul(a.num, b.num), pmul(a.den, b.den)};
    }
    Elem pow_p(const Elem& a) const { return Elem{ppow(a.num, p), ppow(a.den, p)}; }
    Elem scale(const Elem& a, const cpp_int& s) const { return Elem{pscale(a.num, s), a.den}; }
    Elem div_p_pow(const Elem& a, u32 n) const { return Elem{pdiv_p_pow(a.num, n), a.den}; }
};

enum class GhostOp { add, sub, mul, neg };

// Evaluates the ghost recursion for z = x (.) y in the lift ring: zhat_n =
// (h_n - sum_{j<n} p^j zhat_j^(p^(n-j))) / p^n with h_n the combined ghost
// components. The lift ring is p-torsion-free, so zhat_n equals the integral
// universal polynomial evaluated at the lifts and reduces to the exact digit.
template <class L>
std::vector<FieldElem> ghost_eval(const L& ctx, GhostOp op, const std::vector<FieldElem>& xd,
                                  const std::vector<FieldElem>& yd) {
    using E = typename L::Elem;
    const u32 m = static_cast<u32>(xd.size());
    const bool unary = (op == GhostOp::neg);
    std::vector<cpp_int> ppow(m);
    ppow[0] = 1;
    for (u32 j = 1; j < m; ++j) ppow[j] = ppow[j - 1] * ctx.k->p;

    std::vector<E> px, py, pz;
    std::vector<FieldElem> out;
    out.reserve(m);
    auto ghost_sum = [&](const std::vector<E>& v, u32 upto) {
        E acc = ctx.scale(v[0], ppow[0]);
        for (u32 j = 1; j < upto; ++j) acc = ctx.add(acc, ctx.scale(v[j], ppow[j]));
        return acc;
    };
    for (u32 n = 0; n < m; ++n) {
        for (u32 j = 0; j < n; ++j) {
            px[j] = ctx.pow_p(px[j]);
            if (!unary) py[j] = ctx.pow_p(py[j]);
            pz[j] = ctx.pow_p(pz[j]);
        }
        px.push_back(ctx.lift(xd[n]));
        if (!unary) py.push_back(ctx.lift(yd[n]));

        E wx = ghost_sum(px, n + 1);
        E h = [&] {
            switch (op) {
                case GhostOp::add: return ctx.add(wx, ghost_sum(py, n + 1));
                case GhostOp::sub: return ctx.sub(wx, ghost_sum(py, n + 1));
                case GhostOp::mul: return ctx.mul(wx, ghost_sum(py, n + 1));
                case GhostOp::neg: return ctx.neg(wx);
            }
            throw InternalError("unreachable");
        }();
        for (u32 j = 0; j < n; ++j) h = ctx.sub(h, ctx.scale(pz[j], ppow[j]));
        E zn = ctx.div_p_pow(h, n);
        out.push_back(ctx.reduce(zn));
        pz.push_back(std::move(zn));
    }
    return out;
}

std::vector<FieldElem> witt_eval(const FieldPtr& k, GhostOp op, const std::vector<FieldElem>& x,
                                 const std::vector<FieldElem>& y) {
    if (k->d == 1 && k->r == 0) return ghost_eval(ZLift(k), op, x, y);
    return ghost_eval(GenLift(k), op, x, y);
}

void require_compatible(const WittVector& x, const WittVector& y, const char* where) {
    require_same_field(x.k, y.k, where);
    if (x.a.size() != y.a.size()) throw LevelError(std::string(where) + ": length mismatch");
}

}  // namespace

bool WittVector::operator==(const WittVector& o) const {
    if (!k || !o.k) return !k && !o.k;
    require_same_field(k, o.k, "witt comparison");
    return a == o.a;
}

bool WittVector::is_zero() const {
    for (const FieldElem& x : a)
        if (!x.is_zero()) return false;
    return true;
}

WittVector witt_from_digits(const FieldPtr& k, std::vector<FieldElem> digits) {
    if (!k) throw InvalidDescriptor("null field");
    if (digits.empty()) throw LevelError("witt vector needs at least one digit");
    for (const FieldElem& x : digits) require_same_field(k, x.field(), "witt digit");
    return WittVector{k, std::move(digits)};
}

WittVector witt_zero(const FieldPtr& k, u32 m) {
    if (m == 0) throw LevelError("witt length must be positive");
    return WittVector{k, std::vector<FieldElem>(m, FieldElem::zero(k))};
}

WittVector witt_one(const FieldPtr& k, u32 m) {
    WittVector o = witt_zero(k, m);
    o.a[0] = FieldElem::one(k);
    return o;
}

WittVector witt_add(const WittVector& x, const WittVector& y) {
    require_compatible(x, y, "witt_add");
    return WittVector{x.k, witt_eval(x.k, GhostOp::add, x.a, y.a)};
}

WittVector witt_sub(const WittVector& x, const WittVector& y) {
    require_compatible(x, y, "witt_sub");
    return WittVector{x.k, witt_eval(x.k, GhostOp::sub, x.a, y.a)};
}

WittVector witt_mul(const WittVector& x, const WittVector& y) {
    require_compatible(x, y, "witt_mul");
    return WittVector{x.k, witt_eval(x.k, GhostOp::mul, x.a, y.a)};
}

WittVector witt_neg(const WittVector& x) {
    return WittVector{x.k, witt_eval(x.k, GhostOp::neg, x.a, {})};
}

WittVector witt_pow(const WittVector& x, u64 e) {
    WittVector acc = witt_one(x.k, x.length());
    WittVector base = x;
    while (e > 0) {
        if (e & 1u) acc = witt_mul(acc, base);
        e >>= 1u;
        if (e) base = witt_mul(base, base);
    }
    return acc;
}

WittVector teichmuller(const FieldPtr& k, const FieldElem& a, u32 m) {
    require_same_field(k, a.field(), "teichmuller");
    WittVector o = witt_zero(k, m);
    o.a[0] = a;
    return o;
}

WittVector witt_frobenius(const WittVector& x) {
    WittVector o = x;
    for (FieldElem& c : o.a) c = frobenius(c);
    return o;
}

WittVector verschiebung(const WittVector& x) {
    WittVector o;
    o.k = x.k;
    o.a.reserve(x.a.size() + 1);
    o.a.push_back(FieldElem::zero(x.k));
    o.a.insert(o.a.end(), x.a.begin(), x.a.end());
    return o;
}

WittVector witt_times_p(const WittVector& x) {
    WittVector o = witt_zero(x.k, x.length());
    for (u32 i = 1; i < x.length(); ++i) o.a[i] = frobenius(x.a[i - 1]);
    return o;
}

WittVector witt_times_p_pow(const WittVector& x, u32 j) {
    WittVector o = x;
    for (u32 i = 0; i < j; ++i) o = witt_times_p(o);
    return o;
}

WittVector witt_truncate(const WittVector& x, u32 l) {
    if (l == 0 || l > x.length()) throw LevelError("truncation length out of range");
    return WittVector{x.k, std::vector<FieldElem>(x.a.begin(), x.a.begin() + l)};
}

std::optional<WittVector> witt_div_by_p(const WittVector& x) {
    if (x.length() < 2) throw LevelError("division by p needs length >= 2");
    if (!x.a[0].is_zero()) return std::nullopt;
    std::vector<FieldElem> out;
    out.reserve(x.length() - 1);
    for (u32 i = 1; i < x.length(); ++i) {
        auto root = pth_root(x.a[i]);
        if (!root) return std::nullopt;
        out.push_back(*root);
    }
    return WittVector{x.k, std::move(out)};
}

std::optional<WittVector> witt_inverse(const WittVector& x) {
    if (x.a[0].is_zero()) return std::nullopt;
    const u32 m = x.length();
    WittVector inv = teichmuller(x.k, field_inv(x.a[0]), m);
    WittVector two = witt_add(witt_one(x.k, m), witt_one(x.k, m));
    u32 iters = 1;
    while ((1u << iters) < m) ++iters;
    ++iters;
    for (u32 i = 0; i < iters; ++i) inv = witt_mul(inv, witt_sub(two, witt_mul(x, inv)));
    if (!(witt_mul(x, inv) == witt_one(x.k, m)))
        throw InternalError("inverse iteration failed to converge");
    return inv;
}

}  // namespace cwr
