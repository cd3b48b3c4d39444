#include "cwr/field.hpp"

#include <cctype>

#include "cwr/errors.hpp"

namespace cwr {

FieldElem::FieldElem(FieldPtr k, Poly num, Poly den)
    : k_(std::move(k)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("field element with zero denominator");
    canonicalize();
}

void FieldElem::canonicalize() {
    if (num_.is_zero()) {
        den_ = poly_one(k_);
        return;
    }
    Poly g = poly_gcd(k_, num_, den_);
    auto qn = poly_divexact(k_, num_, g);
    auto qd = poly_divexact(k_, den_, g);
    if (!qn || !qd) throw InternalError("gcd does not divide operands");
    num_ = std::move(*qn);
    den_ = std::move(*qd);
    Fq scale = fq_inv(k_, den_.leading().c);
    num_ = poly_scale(k_, num_, scale);
    den_ = poly_scale(k_, den_, scale);
}

FieldElem FieldElem::zero(const FieldPtr& k) { return FieldElem(k, poly_zero(), poly_one(k)); }

FieldElem FieldElem::one(const FieldPtr& k) { return FieldElem(k, poly_one(k), poly_one(k)); }

FieldElem FieldElem::from_int(const FieldPtr& k, long long v) {
    return FieldElem(k, poly_const(k, fq_from_int(k, v)), poly_one(k));
}

FieldElem FieldElem::from_fq(const FieldPtr& k, const Fq& c) {
    return FieldElem(k, poly_const(k, c), poly_one(k));
}

FieldElem FieldElem::var(const FieldPtr& k, u32 i) {
    return FieldElem(k, poly_var(k, i), poly_one(k));
}

FieldElem FieldElem::gen(const FieldPtr& k) {
    if (k->d == 1) throw IndexMismatch("prime field has no extension generator");
    return FieldElem(k, poly_const(k, Fq{{0, 1}}), poly_one(k));
}

bool FieldElem::is_one() const { return num_ == poly_one(k_) && den_ == poly_one(k_); }

bool FieldElem::operator==(const FieldElem& o) const {
    if (!k_ || !o.k_) return !k_ && !o.k_;
    require_same_field(k_, o.k_, "field element comparison");
    return num_ == o.num_ && den_ == o.den_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same_field(k_, o.k_, "field addition");
    Poly n = poly_add(k_, poly_mul(k_, num_, o.den_), poly_mul(k_, o.num_, den_));
    return FieldElem(k_, std::move(n), poly_mul(k_, den_, o.den_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same_field(k_, o.k_, "field subtraction");
    Poly n = poly_sub(k_, poly_mul(k_, num_, o.den_), poly_mul(k_, o.num_, den_));
    return FieldElem(k_, std::move(n), poly_mul(k_, den_, o.den_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same_field(k_, o.k_, "field multiplication");
    return FieldElem(k_, poly_mul(k_, num_, o.num_), poly_mul(k_, den_, o.den_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same_field(k_, o.k_, "field division");
    if (o.is_zero()) throw DivisionByZero("field division");
    return FieldElem(k_, poly_mul(k_, num_, o.den_), poly_mul(k_, den_, o.num_));
}

FieldElem FieldElem::operator-() const { return FieldElem(k_, poly_neg(k_, num_), den_); }

FieldElem field_inv(const FieldElem& a) {
    if (a.is_zero()) throw DivisionByZero("field inverse");
    return FieldElem(a.field(), a.den(), a.num());
}

FieldElem field_pow(const FieldElem& a, u64 e) {
    FieldElem result = FieldElem::one(a.field());
    FieldElem base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElem frobenius(const FieldElem& a) {
    const FieldPtr& k = a.field();
    return FieldElem(k, poly_frobenius(k, a.num()), poly_frobenius(k, a.den()));
}

std::optional<FieldElem> pth_root(const FieldElem& a) {
    const FieldPtr& k = a.field();
    // a = f/g = f*g^(p-1) / g^p; the root exists iff f*g^(p-1) is a p-th power
    Poly u = poly_mul(k, a.num(), poly_pow(k, a.den(), k->p - 1));
    auto root = poly_pth_root(k, u);
    if (!root) return std::nullopt;
    return FieldElem(k, std::move(*root), a.den());
}

std::optional<FieldElem> pth_root_iter(const FieldElem& a, u32 n) {
    FieldElem cur = a;
    for (u32 i = 0; i < n; ++i) {
        auto nxt = pth_root(cur);
        if (!nxt) return std::nullopt;
        cur = std::move(*nxt);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

namespace {

std::string mono_to_string(const FieldPtr& k, const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += (k->r == 1) ? "t" : ("t" + std::to_string(i + 1));
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

std::string poly_to_string(const FieldPtr& k, const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.t) {  // ascending grlex
        if (!out.empty()) out += "+";
        std::string ms = mono_to_string(k, t.m);
        std::string cs = fq_to_string(k, t.c);
        if (ms.empty()) {
            out += cs;
        } else if (t.c == fq_one()) {
            out += ms;
        } else {
            bool composite = cs.find('+') != std::string::npos;
            out += (composite ? "(" + cs + ")" : cs) + "*" + ms;
        }
    }
    return out;
}

}  // namespace

std::string FieldElem::to_string() const {
    if (!k_) return "0";
    if (den_ == poly_one(k_)) return poly_to_string(k_, num_);
    return "(" + poly_to_string(k_, num_) + ")/(" + poly_to_string(k_, den_) + ")";
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const FieldPtr& k;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    u64 parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        u64 v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<u64>(s[pos] - '0');
            if (v > (1ull << 40)) fail("integer literal too large");
            ++pos;
        }
        return v;
    }

    FieldElem parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElem e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return FieldElem::from_int(k, static_cast<long long>(parse_uint()));
        if (c == 'w') {
            ++pos;
            if (k->d == 1) fail("generator w undefined over a prime field");
            return FieldElem::gen(k);
        }
        if (c == 't') {
            ++pos;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                u64 idx = parse_uint();
                if (idx == 0 || idx > k->r) fail("variable index out of range");
                return FieldElem::var(k, static_cast<u32>(idx - 1));
            }
            if (k->r == 1) return FieldElem::var(k, 0);
            if (k->r == 0) fail("no transcendentals in this field");
            fail("ambiguous variable 't' (use t1..tr)");
        }
        fail("unexpected character");
    }

    FieldElem parse_factor() {
        FieldElem base = parse_atom();
        skip_ws();
        if (eat('^')) {
            u64 e = parse_uint();
            return field_pow(base, e);
        }
        return base;
    }

    FieldElem parse_unary() {
        if (eat('-')) return -parse_unary();
        if (eat('+')) return parse_unary();
        return parse_factor();
    }

    FieldElem parse_term() {
        FieldElem acc = parse_unary();
        while (true) {
            if (eat('*')) {
                acc = acc * parse_unary();
            } else if (eat('/')) {
                FieldElem d = parse_unary();
                if (d.is_zero()) fail("division by zero");
                acc = acc / d;
            } else {
                break;
            }
        }
        return acc;
    }

    FieldElem parse_expr() {
        FieldElem acc = parse_term();
        while (true) {
            if (eat('+')) {
                acc = acc + parse_term();
            } else {
                skip_ws();
                if (pos < s.size() && s[pos] == '-') {
                    ++pos;
                    acc = acc - parse_term();
                } else {
                    break;
                }
            }
        }
        return acc;
    }
};

}  // namespace

FieldElem parse_field_elem(const FieldPtr& k, const std::string& text) {
    Parser p{k, text};
    FieldElem e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

}  // namespace cwr
