#pragma once

#include <optional>

#include "cwr/multiindex.hpp"

namespace cwr {

// Result of the level-m decomposition alpha = sum_I beta^I lambda_I(alpha)^(p^m):
// the finitely many nonzero coefficients keyed by multi-index.
struct LambdaDecomposition {
    u32 level = 0;
    u32 nu = 0;
    std::vector<std::pair<MultiIndex, FieldElem>> coeffs;  // sorted by index vector

    const FieldElem* find(const MultiIndex& I) const;
    FieldElem coeff(const FieldPtr& k, const MultiIndex& I) const;
};

struct DecomposeOptions {
    // Process extraction (fast path) or pivoting (general path) in reversed
    // monomial order; the result must be identical, which the uniqueness
    // tests exercise.
    bool reversed_order = false;
    // Internal: the caller already knows the tuple is p-independent.
    bool skip_independence_check = false;
};

// Decides p-independence of a finite tuple over k. Independence at level 1 is
// equivalent to independence at every level.
bool is_p_independent(const FieldPtr& k, const std::vector<FieldElem>& beta, u32 m = 1);

// Unique lambda-coefficients of alpha w.r.t. a p-independent tuple beta at
// level m. nullopt means alpha lies outside k^(p^m)(beta) ("not in span").
// Throws NotPIndependent when beta fails the independence check.
std::optional<LambdaDecomposition> lambda_decompose(const FieldPtr& k,
                                                    const std::vector<FieldElem>& beta, u32 m,
                                                    const FieldElem& alpha,
                                                    DecomposeOptions opts = {});

// sum_I beta^I coeff_I^(p^m); inverse of lambda_decompose on its image.
FieldElem lambda_reconstruct(const FieldPtr& k, const std::vector<FieldElem>& beta,
                             const LambdaDecomposition& dec);

// The canonical p-basis (t1..tr) of F_{p^d}(t1..tr).
std::vector<FieldElem> canonical_pbasis(const FieldPtr& k);

}  // namespace cwr
