#include "cwr/wittpoly.hpp"

#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "cwr/errors.hpp"
#include "cwr/multiindex.hpp"

namespace cwr {
namespace {

using boost::multiprecision::cpp_int;

void iaccum(IntPoly& a, const std::vector<u32>& key, const cpp_int& c) {
    auto it = a.t.find(key);
    if (it == a.t.end()) {
        if (c != 0) a.t.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) a.t.erase(it);
}

IntPoly iadd(const IntPoly& a, const IntPoly& b) {
    IntPoly o = a;
    for (const auto& [key, c] : b.t) iaccum(o, key, c);
    return o;
}

IntPoly ineg(const IntPoly& a) {
    IntPoly o;
    for (const auto& [key, c] : a.t) o.t.emplace(key, -c);
    return o;
}

IntPoly isub(const IntPoly& a, const IntPoly& b) { return iadd(a, ineg(b)); }

IntPoly imul(const IntPoly& a, const IntPoly& b) {
    IntPoly o;
    for (const auto& [ka, ca] : a.t)
        for (const auto& [kb, cb] : b.t) {
            std::vector<u32> key(ka.size());
            for (size_t i = 0; i < ka.size(); ++i) key[i] = ka[i] + kb[i];
            iaccum(o, key, ca * cb);
        }
    return o;
}

IntPoly iscale(const IntPoly& a, const cpp_int& s) {
    IntPoly o;
    if (s == 0) return o;
    for (const auto& [key, c] : a.t) o.t.emplace(key, c * s);
    return o;
}

IntPoly ione(u32 nvars) {
    IntPoly o;
    o.t.emplace(std::vector<u32>(nvars, 0), cpp_int(1));
    return o;
}

IntPoly ipow(const IntPoly& a, u64 e) {
    IntPoly acc = ione(a.t.empty() ? 0 : static_cast<u32>(a.t.begin()->first.size()));
    if (a.t.empty()) {
        if (e == 0) throw InternalError("0^0 in witt polynomial build");
        return IntPoly{};
    }
    IntPoly base = a;
    while (e > 0) {
        if (e & 1u) acc = imul(acc, base);
        e >>= 1u;
        if (e) base = imul(base, base);
    }
    return acc;
}

IntPoly idiv_p_pow(const IntPoly& a, u32 p, u32 n) {
    cpp_int pn = pow(cpp_int(p), n);
    IntPoly o;
    for (const auto& [key, c] : a.t) {
        cpp_int q, rem;
        divide_qr(c, pn, q, rem);
        if (rem != 0) throw InternalError("witt polynomial recursion division not exact");
        o.t.emplace(key, std::move(q));
    }
    return o;
}

IntPoly ivar(u32 idx, u32 nvars) {
    IntPoly o;
    std::vector<u32> key(nvars, 0);
    key[idx] = 1;
    o.t.emplace(std::move(key), cpp_int(1));
    return o;
}

IntPoly ghost_block(u32 p, u32 n, u32 m, u32 offset) {
    IntPoly acc;
    cpp_int pj = 1;
    for (u32 j = 0; j <= n; ++j) {
        u64 e = pow_u64_checked(p, n - j);
        acc = iadd(acc, iscale(ipow(ivar(offset + j, 2 * m), e), pj));
        pj *= p;
    }
    return acc;
}

std::vector<IntPoly> build_polys(u32 p, u32 m, WittOpKind op) {
    std::vector<IntPoly> S;
    S.reserve(m);
    for (u32 n = 0; n < m; ++n) {
        IntPoly gx = ghost_block(p, n, m, 0);
        IntPoly h;
        switch (op) {
            case WittOpKind::add: h = iadd(gx, ghost_block(p, n, m, m)); break;
            case WittOpKind::mul: h = imul(gx, ghost_block(p, n, m, m)); break;
            case WittOpKind::neg: h = ineg(gx); break;
        }
        cpp_int pj = 1;
        for (u32 j = 0; j < n; ++j) {
            h = isub(h, iscale(ipow(S[j], pow_u64_checked(p, n - j)), pj));
            pj *= p;
        }
        S.push_back(idiv_p_pow(h, p, n));
    }
    return S;
}

std::shared_mutex cache_mu;
std::map<std::tuple<u32, u32, int>, std::vector<IntPoly>> cache;

}  // namespace

const std::vector<IntPoly>& witt_op_polynomials(u32 p, u32 m, WittOpKind op) {
    if (m == 0) throw LevelError("witt length must be positive");
    std::tuple<u32, u32, int> key{p, m, static_cast<int>(op)};
    {
        std::shared_lock lk(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    std::vector<IntPoly> polys = build_polys(p, m, op);
    std::unique_lock lk(cache_mu);
    return cache.emplace(std::move(key), std::move(polys)).first->second;
}

IntPoly ghost_polynomial(u32 p, u32 n, u32 m) {
    if (n >= m) throw LevelError("ghost index out of range");
    return ghost_block(p, n, m, 0);
}

bool check_ghost_identity(u32 p, u32 m, WittOpKind op) {
    const auto& S = witt_op_polynomials(p, m, op);
    for (u32 n = 0; n < m; ++n) {
        IntPoly lhs;
        cpp_int pj = 1;
        for (u32 j = 0; j <= n; ++j) {
            lhs = iadd(lhs, iscale(ipow(S[j], pow_u64_checked(p, n - j)), pj));
            pj *= p;
        }
        IntPoly gx = ghost_block(p, n, m, 0);
        IntPoly rhs;
        switch (op) {
            case WittOpKind::add: rhs = iadd(gx, ghost_block(p, n, m, m)); break;
            case WittOpKind::mul: rhs = imul(gx, ghost_block(p, n, m, m)); break;
            case WittOpKind::neg: rhs = ineg(gx); break;
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

FieldElem intpoly_eval_mod_p(const FieldPtr& k, const IntPoly& f,
                             const std::vector<FieldElem>& xs,
                             const std::vector<FieldElem>& ys) {
    FieldElem acc = FieldElem::zero(k);
    for (const auto& [key, c] : f.t) {
        cpp_int cm = c % k->p;
        if (cm < 0) cm += k->p;
        if (cm == 0) continue;
        FieldElem term = FieldElem::from_int(k, cm.convert_to<long long>());
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            const FieldElem& arg = i < xs.size() ? xs[i] : ys.at(i - xs.size());
            term = term * field_pow(arg, key[i]);
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace cwr
