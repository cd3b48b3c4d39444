#include "cwr/pbasis.hpp"

#include <algorithm>
#include <map>

#include "cwr/errors.hpp"

namespace cwr {

const FieldElem* LambdaDecomposition::find(const MultiIndex& I) const {
    for (const auto& [J, c] : coeffs)
        if (J == I) return &c;
    return nullptr;
}

FieldElem LambdaDecomposition::coeff(const FieldPtr& k, const MultiIndex& I) const {
    const FieldElem* c = find(I);
    return c ? *c : FieldElem::zero(k);
}

std::vector<FieldElem> canonical_pbasis(const FieldPtr& k) {
    std::vector<FieldElem> out;
    out.reserve(k->r);
    for (u32 i = 0; i < k->r; ++i) out.push_back(FieldElem::var(k, i));
    return out;
}

namespace {

FieldElem monomial_or_one(const FieldPtr& k, const std::vector<FieldElem>& beta,
                          const MultiIndex& I) {
    if (beta.empty()) return FieldElem::one(k);
    return mi_monomial(beta, I);
}

bool is_canonical_basis(const FieldPtr& k, const std::vector<FieldElem>& beta) {
    if (beta.size() != k->r) return false;
    for (u32 i = 0; i < k->r; ++i)
        if (!(beta[i] == FieldElem::var(k, i))) return false;
    return true;
}

// Decomposition w.r.t. the canonical p-basis (t1..tr). Always succeeds: with
// alpha = f/g put u = f*g^(p^m-1), so alpha = u/g^(p^m). Each exponent vector
// of u splits uniquely as E = I + p^m*Q, the coefficient has an m-fold p-th
// root in F_{p^d}, and bucketing by I gives lambda_I(alpha) = root_I/g.
std::vector<std::pair<MultiIndex, FieldElem>> decompose_canonical(const FieldPtr& k, u32 m,
                                                                  const FieldElem& alpha,
                                                                  bool reversed) {
    u64 pm = pow_u64_checked(k->p, m);
    Poly u = poly_mul(k, alpha.num(), poly_pow(k, alpha.den(), pm - 1));
    std::map<std::vector<u64>, Poly> buckets;
    auto process = [&](const PolyTerm& term) {
        std::vector<u64> idx(k->r);
        Monomial q;
        q.e.assign(k->r, 0);
        for (u32 i = 0; i < k->r; ++i) {
            idx[i] = term.m.e[i] % pm;
            q.e[i] = static_cast<u32>((term.m.e[i] - idx[i]) / pm);
        }
        Fq c = term.c;
        for (u32 j = 0; j < m; ++j) c = fq_pth_root(k, c);
        Poly piece = poly_term(k, q, c);
        auto it = buckets.find(idx);
        if (it == buckets.end())
            buckets.emplace(std::move(idx), std::move(piece));
        else
            it->second = poly_add(k, it->second, piece);
    };
    if (reversed)
        for (auto it = u.t.rbegin(); it != u.t.rend(); ++it) process(*it);
    else
        for (const auto& term : u.t) process(term);

    std::vector<std::pair<MultiIndex, FieldElem>> out;
    for (const auto& [idx, num] : buckets) {
        if (num.is_zero()) continue;
        MultiIndex I;
        I.v = idx;
        I.level = m;
        out.emplace_back(std::move(I), FieldElem(k, num, alpha.den()));
    }
    return out;
}

// Solve sum_I u_(J,I) x_I = a_J over k, where u and a are the canonical
// lambda-coordinates of beta^I and alpha. Consistency <=> alpha lies in the
// level-m span of beta; the column order is permuted when reversed is set,
// which must not change the (unique) solution. Assumes full column rank,
// which holds whenever beta is p-independent.
std::optional<std::vector<FieldElem>> solve_span(const FieldPtr& k,
                                                 const std::vector<FieldElem>& beta, u32 m,
                                                 const FieldElem& alpha, bool reversed,
                                                 const std::vector<MultiIndex>& cols) {
    std::map<std::vector<u64>, size_t> row_of;
    std::vector<std::vector<std::pair<MultiIndex, FieldElem>>> col_dec;
    col_dec.reserve(cols.size());
    for (const MultiIndex& I : cols) {
        col_dec.push_back(decompose_canonical(k, m, monomial_or_one(k, beta, I), false));
        for (const auto& [J, c] : col_dec.back()) row_of.emplace(J.v, 0);
    }
    auto a_dec = decompose_canonical(k, m, alpha, false);
    for (const auto& [J, c] : a_dec) row_of.emplace(J.v, 0);

    size_t nrows = 0;
    for (auto& [key, idx] : row_of) idx = nrows++;
    size_t ncols = cols.size();
    std::vector<std::vector<FieldElem>> M(nrows,
                                          std::vector<FieldElem>(ncols + 1, FieldElem::zero(k)));
    for (size_t j = 0; j < ncols; ++j)
        for (const auto& [J, c] : col_dec[j]) M[row_of[J.v]][j] = c;
    for (const auto& [J, c] : a_dec) M[row_of[J.v]][ncols] = c;

    std::vector<size_t> order(ncols);
    for (size_t j = 0; j < ncols; ++j) order[j] = reversed ? ncols - 1 - j : j;

    std::vector<bool> row_used(nrows, false);
    std::vector<size_t> pivot_row(ncols, SIZE_MAX);
    for (size_t cj : order) {
        size_t pr = SIZE_MAX;
        for (size_t ri = 0; ri < nrows; ++ri)
            if (!row_used[ri] && !M[ri][cj].is_zero()) {
                pr = ri;
                break;
            }
        if (pr == SIZE_MAX)
            throw InternalError("lambda span system is rank-deficient for a p-independent tuple");
        row_used[pr] = true;
        pivot_row[cj] = pr;
        FieldElem inv = field_inv(M[pr][cj]);
        for (size_t c2 = 0; c2 <= ncols; ++c2)
            if (!M[pr][c2].is_zero()) M[pr][c2] = M[pr][c2] * inv;
        for (size_t ri = 0; ri < nrows; ++ri) {
            if (ri == pr || M[ri][cj].is_zero()) continue;
            FieldElem f = M[ri][cj];
            for (size_t c2 = 0; c2 <= ncols; ++c2)
                if (!M[pr][c2].is_zero()) M[ri][c2] = M[ri][c2] - f * M[pr][c2];
        }
    }
    for (size_t ri = 0; ri < nrows; ++ri)
        if (!row_used[ri] && !M[ri][ncols].is_zero()) return std::nullopt;

    std::vector<FieldElem> x;
    x.reserve(ncols);
    for (size_t j = 0; j < ncols; ++j) x.push_back(M[pivot_row[j]][ncols]);
    return x;
}

void require_elems_over(const FieldPtr& k, const std::vector<FieldElem>& beta,
                        const char* where) {
    for (const FieldElem& b : beta) require_same_field(k, b.field(), where);
}

// Membership of alpha in k^p(prefix), with prefix already known independent.
bool in_level1_span(const FieldPtr& k, const std::vector<FieldElem>& prefix,
                    const FieldElem& alpha) {
    auto cols = enumerate_multiindices(k->p, static_cast<u32>(prefix.size()), 1);
    return solve_span(k, prefix, 1, alpha, false, cols).has_value();
}

}  // namespace

bool is_p_independent(const FieldPtr& k, const std::vector<FieldElem>& beta, u32 m) {
    if (!k) throw InvalidDescriptor("null field");
    if (m == 0) throw LevelError("independence level must be positive");
    require_elems_over(k, beta, "is_p_independent");
    // Independence at level 1 is equivalent to independence at every level,
    // so the check below ignores m beyond validation.
    for (size_t i = 0; i < beta.size(); ++i) {
        std::vector<FieldElem> prefix(beta.begin(), beta.begin() + static_cast<long>(i));
        if (in_level1_span(k, prefix, beta[i])) return false;
    }
    return true;
}

std::optional<LambdaDecomposition> lambda_decompose(const FieldPtr& k,
                                                    const std::vector<FieldElem>& beta, u32 m,
                                                    const FieldElem& alpha,
                                                    DecomposeOptions opts) {
    if (!k) throw InvalidDescriptor("null field");
    if (m == 0) throw LevelError("decomposition level must be positive");
    require_elems_over(k, beta, "lambda_decompose");
    require_same_field(k, alpha.field(), "lambda_decompose");
    if (!opts.skip_independence_check && !is_p_independent(k, beta, 1))
        throw NotPIndependent("tuple is not p-independent");

    LambdaDecomposition out;
    out.level = m;
    out.nu = static_cast<u32>(beta.size());
    if (is_canonical_basis(k, beta)) {
        out.coeffs = decompose_canonical(k, m, alpha, opts.reversed_order);
        return out;
    }
    auto cols = enumerate_multiindices(k->p, out.nu, m);
    auto x = solve_span(k, beta, m, alpha, opts.reversed_order, cols);
    if (!x) return std::nullopt;
    for (size_t j = 0; j < cols.size(); ++j)
        if (!(*x)[j].is_zero()) out.coeffs.emplace_back(cols[j], (*x)[j]);
    return out;
}

FieldElem lambda_reconstruct(const FieldPtr& k, const std::vector<FieldElem>& beta,
                             const LambdaDecomposition& dec) {
    if (!k) throw InvalidDescriptor("null field");
    require_elems_over(k, beta, "lambda_reconstruct");
    if (dec.nu != beta.size()) throw IndexMismatch("decomposition arity mismatch");
    u64 pm = pow_u64_checked(k->p, dec.level);
    FieldElem acc = FieldElem::zero(k);
    for (const auto& [I, c] : dec.coeffs) {
        if (I.arity() != beta.size()) throw IndexMismatch("multi-index arity mismatch");
        acc = acc + monomial_or_one(k, beta, I) * field_pow(c, pm);
    }
    return acc;
}

}  // namespace cwr
