#pragma once

#include <optional>

#include "cwr/field.hpp"

namespace cwr {

// Element of W_m(k), m >= 1, as its digit list (a_0, ..., a_{m-1}).
struct WittVector {
    FieldPtr k;
    std::vector<FieldElem> a;

    u32 length() const { return static_cast<u32>(a.size()); }
    bool operator==(const WittVector& o) const;
    bool operator!=(const WittVector& o) const { return !(*this == o); }
    bool is_zero() const;
};

WittVector witt_zero(const FieldPtr& k, u32 m);
WittVector witt_one(const FieldPtr& k, u32 m);
WittVector witt_from_digits(const FieldPtr& k, std::vector<FieldElem> digits);

// Ring operations, computed exactly by evaluating the integral ghost
// recursion in a p-torsion-free lift ring. Operands must share field and
// length.
WittVector witt_add(const WittVector& x, const WittVector& y);
WittVector witt_sub(const WittVector& x, const WittVector& y);
WittVector witt_mul(const WittVector& x, const WittVector& y);
WittVector witt_neg(const WittVector& x);
WittVector witt_pow(const WittVector& x, u64 e);

// Multiplicative lift a -> (a, 0, ..., 0).
WittVector teichmuller(const FieldPtr& k, const FieldElem& a, u32 m);

// Digit-wise p-th power W_m -> W_m.
WittVector witt_frobenius(const WittVector& x);
// (a_0..a_{m-1}) -> (0, a_0, ..., a_{m-1}) in W_{m+1}.
WittVector verschiebung(const WittVector& x);
// Multiplication by p = V o F, truncated back to length m.
WittVector witt_times_p(const WittVector& x);
WittVector witt_times_p_pow(const WittVector& x, u32 j);
// First l digits, 1 <= l <= m.
WittVector witt_truncate(const WittVector& x, u32 l);

// Exact division by p in the truncation sense: defined when a_0 = 0 and every
// higher digit has a p-th root; the quotient lives in W_{m-1}. Requires
// m >= 2. nullopt when x is not divisible.
std::optional<WittVector> witt_div_by_p(const WittVector& x);

// nullopt when x is not a unit (a_0 = 0).
std::optional<WittVector> witt_inverse(const WittVector& x);

}  // namespace cwr
