#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cwr {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Descriptor of a coefficient field F_{p^d} together with the number r of
// transcendentals t1..tr. Immutable after construction; shared by value
// semantics through a shared_ptr.
struct FieldDesc {
    u32 p = 2;                 // prime characteristic
    u32 d = 1;                 // extension degree over F_p
    u32 r = 0;                 // number of transcendentals
    std::vector<u32> modulus;  // monic irreducible over F_p of degree d, low-to-high
                               // coefficients, size d+1; empty when d == 1

    bool operator==(const FieldDesc& o) const = default;
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

// Element of F_{p^d}: coefficients of 1, w, ..., w^(d-1), low-to-high,
// trailing zeros trimmed. The empty vector is zero.
struct Fq {
    std::vector<u32> c;

    bool is_zero() const { return c.empty(); }
    bool operator==(const Fq& o) const = default;
    bool operator<(const Fq& o) const;  // arbitrary total order for canonical maps
};

// Builds and validates a descriptor. When modulus is empty and d > 1 the
// lexicographically first monic irreducible of degree d is used.
FieldPtr make_field(u32 p, u32 d, u32 r, const std::vector<u32>& modulus = {});

bool same_field(const FieldPtr& a, const FieldPtr& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b, const char* where);

bool is_prime_u32(u32 n);
// Irreducibility over F_p of a monic univariate polynomial (low-to-high).
bool is_irreducible_mod_p(u32 p, const std::vector<u32>& f);

Fq fq_zero();
Fq fq_one();
Fq fq_from_int(const FieldPtr& k, long long v);
Fq fq_from_coeffs(const FieldPtr& k, std::vector<u32> coeffs);

Fq fq_add(const FieldPtr& k, const Fq& a, const Fq& b);
Fq fq_sub(const FieldPtr& k, const Fq& a, const Fq& b);
Fq fq_neg(const FieldPtr& k, const Fq& a);
Fq fq_mul(const FieldPtr& k, const Fq& a, const Fq& b);
Fq fq_inv(const FieldPtr& k, const Fq& a);
Fq fq_pow(const FieldPtr& k, const Fq& a, u64 e);

// x -> x^p and its inverse x -> x^(p^(d-1)) (F_{p^d} is perfect).
Fq fq_frobenius(const FieldPtr& k, const Fq& a);
Fq fq_pth_root(const FieldPtr& k, const Fq& a);

std::string fq_to_string(const FieldPtr& k, const Fq& a);

}  // namespace cwr
