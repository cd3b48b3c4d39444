#pragma once

#include <string>
#include <vector>

#include "cwr/field.hpp"

namespace cwr {

// Element of P_{nu,m}: exponent tuple of length nu with entries in [0, p^m).
// The level m is carried for checked reduction/composition.
struct MultiIndex {
    std::vector<u64> v;
    u32 level = 0;

    u32 arity() const { return static_cast<u32>(v.size()); }
    bool operator==(const MultiIndex& o) const { return v == o.v; }
    bool operator<(const MultiIndex& o) const { return v < o.v; }
};

u64 pow_u64_checked(u64 base, u32 exp);

MultiIndex mi_zero(u32 nu, u32 level);
void mi_validate(u32 p, const MultiIndex& I);

// Coordinate-wise reduction mod p^l (l <= level of I).
MultiIndex mi_reduce(u32 p, const MultiIndex& I, u32 l);

// I in P_{nu,l}, J in P_{nu,m-l} -> I + p^l * J in P_{nu,m}; the inverse digit
// split of the bijection P_{nu,l} x P_{nu,m-l} -> P_{nu,m}.
MultiIndex mi_oplus(u32 p, const MultiIndex& I, const MultiIndex& J);

// All of P_{nu,m} in odometer order (last coordinate fastest). Throws
// LevelError when |P_{nu,m}| would exceed the cap.
std::vector<MultiIndex> enumerate_multiindices(u32 p, u32 nu, u32 m, u64 cap = 1u << 20);

// beta^I as a field element.
FieldElem mi_monomial(const std::vector<FieldElem>& beta, const MultiIndex& I);

std::string mi_key(const MultiIndex& I);
MultiIndex mi_parse(const std::string& key, u32 level);

}  // namespace cwr
