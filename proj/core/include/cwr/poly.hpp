#pragma once

#include <optional>
#include <vector>

#include "cwr/fq.hpp"

namespace cwr {

// Exponent vector over t1..tr. Always sized to the descriptor's r.
struct Monomial {
    std::vector<u32> e;

    bool operator==(const Monomial& o) const = default;
    u64 total_degree() const {
        u64 s = 0;
        for (u32 x : e) s += x;
        return s;
    }
};

// Graded lexicographic: total degree first, then lexicographic with t1 most
// significant.
bool grlex_less(const Monomial& a, const Monomial& b);

struct PolyTerm {
    Monomial m;
    Fq c;

    bool operator==(const PolyTerm& o) const = default;
};

// Sparse multivariate polynomial over F_{p^d}; terms ascending in grlex, no
// zero coefficients. The leading term is the last entry.
struct Poly {
    std::vector<PolyTerm> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const Poly& o) const = default;
    const PolyTerm& leading() const { return t.back(); }
    u64 total_degree() const { return t.empty() ? 0 : t.back().m.total_degree(); }
};

Poly poly_zero();
Poly poly_const(const FieldPtr& k, const Fq& c);
Poly poly_one(const FieldPtr& k);
// t_{i} for 0 <= i < r
Poly poly_var(const FieldPtr& k, u32 i);
Poly poly_term(const FieldPtr& k, Monomial m, Fq c);

Poly poly_add(const FieldPtr& k, const Poly& a, const Poly& b);
Poly poly_sub(const FieldPtr& k, const Poly& a, const Poly& b);
Poly poly_neg(const FieldPtr& k, const Poly& a);
Poly poly_mul(const FieldPtr& k, const Poly& a, const Poly& b);
Poly poly_scale(const FieldPtr& k, const Poly& a, const Fq& c);
Poly poly_pow(const FieldPtr& k, const Poly& a, u64 e);

// Exact division; nullopt when b does not divide a.
std::optional<Poly> poly_divexact(const FieldPtr& k, const Poly& a, const Poly& b);

// gcd normalized monic (leading coefficient 1 in grlex); gcd(0,0) = 0.
Poly poly_gcd(const FieldPtr& k, const Poly& a, const Poly& b);
Poly poly_monic(const FieldPtr& k, const Poly& a);

Poly poly_frobenius(const FieldPtr& k, const Poly& a);
// nullopt when some exponent is not divisible by p (coefficient roots always
// exist since F_{p^d} is perfect).
std::optional<Poly> poly_pth_root(const FieldPtr& k, const Poly& a);

}  // namespace cwr
