#pragma once

#include <optional>
#include <string>

#include "cwr/poly.hpp"

namespace cwr {

// Element of k = F_{p^d}(t1..tr) in canonical form: gcd-reduced fraction with
// monic denominator (grlex leading coefficient 1); zero is 0/1. Equality of
// canonical forms is literal equality.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldPtr k, Poly num, Poly den);

    static FieldElem zero(const FieldPtr& k);
    static FieldElem one(const FieldPtr& k);
    static FieldElem from_int(const FieldPtr& k, long long v);
    static FieldElem from_fq(const FieldPtr& k, const Fq& c);
    static FieldElem var(const FieldPtr& k, u32 i);  // t_{i+1}
    static FieldElem gen(const FieldPtr& k);         // w (requires d > 1)

    const FieldPtr& field() const { return k_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;

    std::string to_string() const;

  private:
    FieldPtr k_;
    Poly num_, den_;

    void canonicalize();
};

FieldElem frobenius(const FieldElem& a);
// nullopt marks "not a p-th power".
std::optional<FieldElem> pth_root(const FieldElem& a);
std::optional<FieldElem> pth_root_iter(const FieldElem& a, u32 n);
FieldElem field_pow(const FieldElem& a, u64 e);
FieldElem field_inv(const FieldElem& a);

// Accepts polynomial expressions over digits, w, t / t1..tr with + - * / ^
// and parentheses; the canonical fraction form "(num)/(den)" is a special
// case. Throws ParseError.
FieldElem parse_field_elem(const FieldPtr& k, const std::string& text);

}  // namespace cwr
