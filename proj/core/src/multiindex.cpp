#include "cwr/multiindex.hpp"

#include "cwr/errors.hpp"

namespace cwr {

u64 pow_u64_checked(u64 base, u32 exp) {
    u64 r = 1;
    for (u32 i = 0; i < exp; ++i) {
        if (r > (1ull << 40)) throw LevelError("p^m too large");
        r *= base;
    }
    return r;
}

MultiIndex mi_zero(u32 nu, u32 level) {
    MultiIndex I;
    I.v.assign(nu, 0);
    I.level = level;
    return I;
}

void mi_validate(u32 p, const MultiIndex& I) {
    u64 bound = pow_u64_checked(p, I.level);
    for (u64 x : I.v)
        if (x >= bound) throw LevelError("multi-index entry exceeds p^level");
}

MultiIndex mi_reduce(u32 p, const MultiIndex& I, u32 l) {
    if (l > I.level) throw LevelError("reduction level exceeds index level");
    u64 q = pow_u64_checked(p, l);
    MultiIndex out = I;
    out.level = l;
    for (auto& x : out.v) x %= q;
    return out;
}

MultiIndex mi_oplus(u32 p, const MultiIndex& I, const MultiIndex& J) {
    if (I.arity() != J.arity()) throw IndexMismatch("oplus arity mismatch");
    mi_validate(p, I);
    mi_validate(p, J);
    u64 q = pow_u64_checked(p, I.level);
    MultiIndex out;
    out.level = I.level + J.level;
    out.v.resize(I.v.size());
    for (size_t i = 0; i < I.v.size(); ++i) out.v[i] = I.v[i] + q * J.v[i];
    return out;
}

std::vector<MultiIndex> enumerate_multiindices(u32 p, u32 nu, u32 m, u64 cap) {
    u64 q = pow_u64_checked(p, m);
    u64 count = 1;
    for (u32 i = 0; i < nu; ++i) {
        count *= q;
        if (count > cap) throw LevelError("P_{nu,m} too large to enumerate");
    }
    std::vector<MultiIndex> out;
    out.reserve(count);
    MultiIndex cur = mi_zero(nu, m);
    out.push_back(cur);
    while (true) {
        size_t i = nu;
        while (i > 0) {
            --i;
            if (++cur.v[i] < q) break;
            cur.v[i] = 0;
            if (i == 0) return out;
        }
        if (nu == 0) return out;
        out.push_back(cur);
    }
}

FieldElem mi_monomial(const std::vector<FieldElem>& beta, const MultiIndex& I) {
    if (beta.size() != I.v.size()) throw IndexMismatch("monomial arity mismatch");
    if (beta.empty()) throw IndexMismatch("monomial over empty tuple needs a field");
    FieldElem out = FieldElem::one(beta.front().field());
    for (size_t i = 0; i < beta.size(); ++i)
        if (I.v[i] > 0) out = out * field_pow(beta[i], I.v[i]);
    return out;
}

std::string mi_key(const MultiIndex& I) {
    std::string out = "(";
    for (size_t i = 0; i < I.v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(I.v[i]);
    }
    out += ")";
    return out;
}

MultiIndex mi_parse(const std::string& key, u32 level) {
    MultiIndex I;
    I.level = level;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < key.size() && std::isspace(static_cast<unsigned char>(key[pos]))) ++pos;
    };
    skip();
    if (pos >= key.size() || key[pos] != '(') throw ParseError("multi-index must start with '('");
    ++pos;
    skip();
    if (pos < key.size() && key[pos] == ')') {
        ++pos;
    } else {
        while (true) {
            skip();
            if (pos >= key.size() || !std::isdigit(static_cast<unsigned char>(key[pos])))
                throw ParseError("expected digit in multi-index");
            u64 v = 0;
            while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos])))
                v = v * 10 + static_cast<u64>(key[pos++] - '0');
            I.v.push_back(v);
            skip();
            if (pos < key.size() && key[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < key.size() && key[pos] == ')') {
                ++pos;
                break;
            }
            throw ParseError("malformed multi-index");
        }
    }
    skip();
    if (pos != key.size()) throw ParseError("trailing input after multi-index");
    return I;
}

}  // namespace cwr
