#include "cwr/fq.hpp"

#include <algorithm>

#include "cwr/errors.hpp"

namespace cwr {

namespace {

using Uni = std::vector<u32>;  // univariate over F_p, low-to-high, trimmed

void uni_trim(Uni& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Uni uni_mul(u32 p, const Uni& a, const Uni& b) {
    if (a.empty() || b.empty()) return {};
    Uni out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<u32>((out[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    }
    uni_trim(out);
    return out;
}

u32 mod_inverse(u32 a, u32 p) {
    // p prime, a != 0 mod p
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p;
    return static_cast<u32>(t);
}

// a mod f, f monic
Uni uni_rem(u32 p, Uni a, const Uni& f) {
    uni_trim(a);
    const size_t df = f.size() - 1;
    while (a.size() > df) {
        u32 lc = a.back();
        size_t shift = a.size() - 1 - df;
        if (lc != 0) {
            for (size_t i = 0; i < f.size(); ++i) {
                u64 sub = static_cast<u64>(lc) * f[i] % p;
                u32& tgt = a[shift + i];
                tgt = static_cast<u32>((tgt + p - sub) % p);
            }
        }
        a.pop_back();
        uni_trim(a);
        if (a.size() <= df) break;
    }
    uni_trim(a);
    return a;
}

Uni uni_mulmod(u32 p, const Uni& a, const Uni& b, const Uni& f) {
    return uni_rem(p, uni_mul(p, a, b), f);
}

Uni uni_powmod(u32 p, Uni base, u64 e, const Uni& f) {
    Uni result{1};
    base = uni_rem(p, std::move(base), f);
    while (e > 0) {
        if (e & 1) result = uni_mulmod(p, result, base, f);
        base = uni_mulmod(p, base, base, f);
        e >>= 1;
    }
    return result;
}

Uni uni_gcd(u32 p, Uni a, Uni b) {
    uni_trim(a);
    uni_trim(b);
    while (!b.empty()) {
        // make b monic for stable remainders
        u32 inv = mod_inverse(b.back(), p);
        for (auto& c : b) c = static_cast<u32>(static_cast<u64>(c) * inv % p);
        Uni r = uni_rem(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u32 inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = static_cast<u32>(static_cast<u64>(c) * inv % p);
    }
    return a;
}

u64 pow_u64(u64 b, u32 e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

bool is_irreducible_mod_p(u32 p, const std::vector<u32>& f) {
    if (f.size() < 2 || f.back() != 1) return false;
    const u32 d = static_cast<u32>(f.size() - 1);
    const Uni x{0, 1};
    // x^(p^d) == x mod f
    Uni xp = uni_powmod(p, x, pow_u64(p, d), f);
    Uni diff = xp;
    // subtract x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<u32>((diff[1] + p - 1) % p);
    uni_trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(d/q)) - x, f) == 1 for every prime divisor q of d
    u32 rem = d;
    for (u32 q = 2; q <= rem; ++q) {
        if (rem % q != 0) continue;
        while (rem % q == 0) rem /= q;
        Uni xq = uni_powmod(p, x, pow_u64(p, d / q), f);
        Uni g = xq;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<u32>((g[1] + p - 1) % p);
        uni_trim(g);
        Uni gg = uni_gcd(p, g, f);
        if (gg.size() != 1) return false;
    }
    return true;
}

FieldPtr make_field(u32 p, u32 d, u32 r, const std::vector<u32>& modulus) {
    if (!is_prime_u32(p)) throw InvalidDescriptor("p = " + std::to_string(p) + " is not prime");
    if (d == 0) throw InvalidDescriptor("d must be >= 1");
    if (d > 16) throw InvalidDescriptor("extension degree too large");
    if (r > 8) throw InvalidDescriptor("too many transcendentals");
    auto desc = std::make_shared<FieldDesc>();
    desc->p = p;
    desc->d = d;
    desc->r = r;
    if (d == 1) {
        if (!modulus.empty()) throw InvalidDescriptor("modulus given for prime field");
        return desc;
    }
    if (!modulus.empty()) {
        std::vector<u32> f = modulus;
        for (auto& c : f) c %= p;
        if (f.size() != d + 1 || f.back() != 1)
            throw InvalidDescriptor("modulus must be monic of degree d");
        if (!is_irreducible_mod_p(p, f)) throw InvalidDescriptor("modulus is reducible");
        desc->modulus = std::move(f);
        return desc;
    }
    // first monic irreducible of degree d, low coefficients enumerated as a
    // base-p counter
    std::vector<u32> f(d + 1, 0);
    f[d] = 1;
    const u64 total = pow_u64(p, d);
    for (u64 n = 0; n < total; ++n) {
        u64 v = n;
        for (u32 i = 0; i < d; ++i) {
            f[i] = static_cast<u32>(v % p);
            v /= p;
        }
        if (is_irreducible_mod_p(p, f)) {
            desc->modulus = f;
            return desc;
        }
    }
    throw InternalError("no irreducible modulus found");
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where) {
    if (!same_field(a, b)) throw FieldMismatch(where);
}

bool Fq::operator<(const Fq& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
}

Fq fq_zero() { return {}; }

Fq fq_one() { return Fq{{1}}; }

Fq fq_from_int(const FieldPtr& k, long long v) {
    long long m = v % static_cast<long long>(k->p);
    if (m < 0) m += k->p;
    if (m == 0) return {};
    return Fq{{static_cast<u32>(m)}};
}

Fq fq_from_coeffs(const FieldPtr& k, std::vector<u32> coeffs) {
    for (auto& c : coeffs) c %= k->p;
    if (coeffs.size() > k->d) {
        if (k->d == 1) {
            // reduce a general vector into the prime field: only allowed if
            // higher coefficients vanish
            for (size_t i = 1; i < coeffs.size(); ++i)
                if (coeffs[i] != 0) throw InvalidDescriptor("coefficient outside prime field");
            coeffs.resize(1);
        } else {
            throw InvalidDescriptor("coefficient vector longer than extension degree");
        }
    }
    Fq out{std::move(coeffs)};
    uni_trim(out.c);
    return out;
}

Fq fq_add(const FieldPtr& k, const Fq& a, const Fq& b) {
    Fq out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < out.c.size(); ++i) {
        u32 x = i < a.c.size() ? a.c[i] : 0;
        u32 y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = (x + y) % k->p;
    }
    uni_trim(out.c);
    return out;
}

Fq fq_neg(const FieldPtr& k, const Fq& a) {
    Fq out = a;
    for (auto& c : out.c) c = (k->p - c) % k->p;
    return out;
}

Fq fq_sub(const FieldPtr& k, const Fq& a, const Fq& b) { return fq_add(k, a, fq_neg(k, b)); }

Fq fq_mul(const FieldPtr& k, const Fq& a, const Fq& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Uni prod = uni_mul(k->p, a.c, b.c);
    if (k->d > 1) prod = uni_rem(k->p, std::move(prod), k->modulus);
    Fq out{std::move(prod)};
    uni_trim(out.c);
    return out;
}

Fq fq_pow(const FieldPtr& k, const Fq& a, u64 e) {
    if (e == 0) return fq_one();
    if (a.is_zero()) return {};
    Fq result = fq_one();
    Fq base = a;
    while (e > 0) {
        if (e & 1) result = fq_mul(k, result, base);
        base = fq_mul(k, base, base);
        e >>= 1;
    }
    return result;
}

Fq fq_inv(const FieldPtr& k, const Fq& a) {
    if (a.is_zero()) throw DivisionByZero("inverse of zero in F_q");
    // a^(p^d - 2); exponents stay small for the supported descriptors
    u64 q = pow_u64(k->p, k->d);
    return fq_pow(k, a, q - 2);
}

Fq fq_frobenius(const FieldPtr& k, const Fq& a) { return fq_pow(k, a, k->p); }

Fq fq_pth_root(const FieldPtr& k, const Fq& a) {
    if (k->d == 1) return a;  // x^p = x on the prime field
    return fq_pow(k, a, pow_u64(k->p, k->d - 1));
}

std::string fq_to_string(const FieldPtr& k, const Fq& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(a.c[i]);
        } else {
            if (a.c[i] != 1) out += std::to_string(a.c[i]) + "*";
            out += "w";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace cwr
