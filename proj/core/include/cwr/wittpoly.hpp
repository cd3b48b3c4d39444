#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "cwr/field.hpp"

namespace cwr {

// Integer polynomial in X_0..X_{m-1}, Y_0..Y_{m-1}; exponent keys have length
// 2m (unary operations only touch the X block).
struct IntPoly {
    std::map<std::vector<u32>, boost::multiprecision::cpp_int> t;

    bool is_zero() const { return t.empty(); }
    bool operator==(const IntPoly& o) const = default;
};

enum class WittOpKind { add, mul, neg };

// Universal digit polynomials over Z for the operation in W_m over F_p; entry
// n is digit n. Built by the integral ghost recursion and cached per
// (p, m, op). Intended for small parameters; this is the symbolic oracle the
// evaluation route is checked against.
const std::vector<IntPoly>& witt_op_polynomials(u32 p, u32 m, WittOpKind op);

// w_n in the X block, inside the 2m-variable ring.
IntPoly ghost_polynomial(u32 p, u32 n, u32 m);

// Symbolic check of w_n(S_0..S_n) = w_n(X) (.) w_n(Y) over Z for all n < m.
bool check_ghost_identity(u32 p, u32 m, WittOpKind op);

// Evaluates f mod p at field arguments: variable i < m maps to xs[i], i >= m
// to ys[i-m].
FieldElem intpoly_eval_mod_p(const FieldPtr& k, const IntPoly& f,
                             const std::vector<FieldElem>& xs,
                             const std::vector<FieldElem>& ys);

}  // namespace cwr
