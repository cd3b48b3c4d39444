#include "cwr/valued.hpp"

#include <string>
#include <utility>

#include "cwr/cohen.hpp"
#include "cwr/errors.hpp"

namespace cwr {

namespace {

// Strips the leading zero digits of a nonzero member, returning (count, unit).
// Division failures mean the input was not a member, which callers rule out.
std::pair<u32, WittVector> renormalize(const WittVector& s) {
    WittVector cur = s;
    u32 shift = 0;
    while (cur.a[0].is_zero()) {
        auto q = witt_div_by_p(cur);
        if (!q) throw InternalError("renormalize: sum of members left the ring");
        cur = *q;
        ++shift;
    }
    return {shift, cur};
}

WittVector pad_to(const WittVector& w, u32 n) {
    std::vector<FieldElem> digits = w.a;
    while (digits.size() < n) digits.push_back(FieldElem::zero(w.k));
    return witt_from_digits(w.k, std::move(digits));
}

}  // namespace

bool ValuedElement::operator==(const ValuedElement& o) const {
    require_same_field(k, o.k, "ValuedElement::operator==");
    if (zero || o.zero) return zero == o.zero;
    return val == o.val && precision == o.precision && unit == o.unit;
}

ValuedElement valued_zero(const FieldPtr& k, u32 precision) {
    if (!k) throw ModelMismatch("valued_zero: null field");
    if (precision == 0) throw LevelError("valued_zero: precision must be positive");
    ValuedElement x;
    x.k = k;
    x.precision = precision;
    x.zero = true;
    return x;
}

ValuedElement make_valued(long long val, const WittVector& unit) {
    if (!unit.k) throw ModelMismatch("make_valued: unit has no field");
    if (unit.a.empty()) throw LevelError("make_valued: empty unit");
    if (unit.a[0].is_zero()) throw ModelMismatch("make_valued: unit residue is zero");
    if (!is_member(make_model(unit.k, static_cast<u32>(unit.a.size())), unit))
        throw ModelMismatch("make_valued: unit is not a Cohen ring member");
    ValuedElement x;
    x.k = unit.k;
    x.precision = static_cast<u32>(unit.a.size());
    x.zero = false;
    x.val = val;
    x.unit = unit;
    return x;
}

std::optional<ValuedElement> valued_from_witt(const WittVector& a) {
    if (!a.k) throw ModelMismatch("valued_from_witt: no field");
    if (a.a.empty()) throw LevelError("valued_from_witt: empty vector");
    const u32 m = static_cast<u32>(a.a.size());
    if (a.is_zero()) return valued_zero(a.k, m);
    WittVector cur = a;
    u32 shift = 0;
    while (cur.a[0].is_zero()) {
        auto q = witt_div_by_p(cur);
        if (!q) return std::nullopt;
        cur = *q;
        ++shift;
    }
    if (!is_member(make_model(a.k, m - shift), cur)) return std::nullopt;
    ValuedElement x;
    x.k = a.k;
    x.precision = m - shift;
    x.zero = false;
    x.val = shift;
    x.unit = cur;
    return x;
}

std::optional<long long> valuation(const ValuedElement& x) {
    if (x.zero) return std::nullopt;
    return x.val;
}

ValuedElement vneg(const ValuedElement& x) {
    if (x.zero) return x;
    ValuedElement r = x;
    r.unit = witt_neg(x.unit);
    return r;
}

ValuedElement vadd(const ValuedElement& x, const ValuedElement& y) {
    require_same_field(x.k, y.k, "vadd");
    const u32 P = std::min(x.precision, y.precision);
    if (x.zero && y.zero) return valued_zero(x.k, P);
    if (x.zero || y.zero) {
        const ValuedElement& n = x.zero ? y : x;
        ValuedElement r = n;
        r.precision = P;
        r.unit = witt_truncate(n.unit, P);
        return r;
    }
    const ValuedElement& lo = x.val <= y.val ? x : y;
    const ValuedElement& hi = x.val <= y.val ? y : x;
    const long long delta = hi.val - lo.val;
    if (delta >= static_cast<long long>(P)) {
        ValuedElement r = lo;
        r.precision = P;
        r.unit = witt_truncate(lo.unit, P);
        return r;
    }
    WittVector s = witt_add(witt_truncate(lo.unit, P),
                            witt_times_p_pow(witt_truncate(hi.unit, P),
                                             static_cast<u32>(delta)));
    if (s.is_zero()) {
        // Full cancellation. With equal knowledge on both sides the finite
        // data sums to zero exactly; otherwise the discarded digits of the
        // longer operand could carry the answer, so no digit is provable.
        if (x.precision == y.precision) return valued_zero(x.k, P);
        throw PrecisionExhausted("vadd: cancellation below precision " +
                                 std::to_string(P));
    }
    auto [shift, unit] = renormalize(s);
    ValuedElement r;
    r.k = x.k;
    r.precision = P - shift;
    r.zero = false;
    r.val = lo.val + shift;
    r.unit = unit;
    return r;
}

ValuedElement vsub(const ValuedElement& x, const ValuedElement& y) {
    return vadd(x, vneg(y));
}

ValuedElement vmul(const ValuedElement& x, const ValuedElement& y) {
    require_same_field(x.k, y.k, "vmul");
    const u32 P = std::min(x.precision, y.precision);
    if (x.zero || y.zero) return valued_zero(x.k, P);
    ValuedElement r;
    r.k = x.k;
    r.precision = P;
    r.zero = false;
    r.val = x.val + y.val;
    r.unit = witt_mul(witt_truncate(x.unit, P), witt_truncate(y.unit, P));
    return r;
}

ValuedElement vdiv(const ValuedElement& x, const ValuedElement& y) {
    require_same_field(x.k, y.k, "vdiv");
    if (y.zero) throw DivisionByZero("vdiv");
    const u32 P = std::min(x.precision, y.precision);
    if (x.zero) return valued_zero(x.k, P);
    auto inv = witt_inverse(witt_truncate(y.unit, P));
    if (!inv) throw InternalError("vdiv: unit has no inverse");
    ValuedElement r;
    r.k = x.k;
    r.precision = P;
    r.zero = false;
    r.val = x.val - y.val;
    r.unit = witt_mul(witt_truncate(x.unit, P), *inv);
    return r;
}

std::optional<WittVector> residue_n(const ValuedElement& x, u32 n) {
    if (n == 0) throw LevelError("residue_n: level must be positive");
    if (x.zero) return witt_zero(x.k, n);
    if (x.val < 0) return std::nullopt;
    if (x.val >= static_cast<long long>(n)) return witt_zero(x.k, n);
    const u32 need = n - static_cast<u32>(x.val);
    if (need > x.precision)
        throw PrecisionError("residue_n: level " + std::to_string(n) +
                             " needs " + std::to_string(need) +
                             " digits, have " + std::to_string(x.precision));
    return witt_times_p_pow(pad_to(witt_truncate(x.unit, need), n),
                            static_cast<u32>(x.val));
}

WittVector ac_n(const ValuedElement& x, u32 n) {
    if (n == 0) throw LevelError("ac_n: level must be positive");
    if (x.zero) return witt_zero(x.k, n);
    if (n > x.precision)
        throw PrecisionError("ac_n: level " + std::to_string(n) +
                             " exceeds precision " + std::to_string(x.precision));
    return witt_truncate(x.unit, n);
}

}  // namespace cwr
