#pragma once

#include <optional>

#include "cwr/witt.hpp"

namespace cwr {

// Finite-precision element of the unramified valued field over k: denotes
// exactly p^val * unit with unit a length-`precision` member of C(k) with
// nonzero residue. Zero carries only the infinity marker. Multiplication and
// division are exact; addition aligns to the smaller precision and truncates,
// so cancellation shortens the surviving unit (tracked in `precision`).
struct ValuedElement {
    FieldPtr k;
    u32 precision = 0;
    bool zero = true;
    long long val = 0;
    WittVector unit;

    bool operator==(const ValuedElement& o) const;
};

ValuedElement valued_zero(const FieldPtr& k, u32 precision);
// Validates the nonzero residue and membership of the unit in the canonical
// Cohen ring at its length.
ValuedElement make_valued(long long val, const WittVector& unit);
// Normal form p^v * unit of a nonzero Witt vector; nullopt when the vector is
// not a member of C(k) (strip of leading zeros hits a failing division).
std::optional<ValuedElement> valued_from_witt(const WittVector& a);

// nullopt encodes infinity (the valuation of zero).
std::optional<long long> valuation(const ValuedElement& x);

ValuedElement vneg(const ValuedElement& x);
ValuedElement vadd(const ValuedElement& x, const ValuedElement& y);
ValuedElement vsub(const ValuedElement& x, const ValuedElement& y);
ValuedElement vmul(const ValuedElement& x, const ValuedElement& y);
ValuedElement vdiv(const ValuedElement& x, const ValuedElement& y);  // DivisionByZero on zero divisor

// Class of x in O_v/(p^n) as a length-n vector; nullopt when v(x) < 0
// (not integral). PrecisionError when n exceeds what x knows (val + precision).
std::optional<WittVector> residue_n(const ValuedElement& x, u32 n);

// ac_n(0) = 0, otherwise the class of the unit part mod p^n. PrecisionError
// when n > precision.
WittVector ac_n(const ValuedElement& x, u32 n);

}  // namespace cwr
