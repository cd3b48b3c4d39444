#include "doctest.h"

#include "cwr/errors.hpp"
#include "cwr/multiindex.hpp"
#include "cwr/pbasis.hpp"
#include "cwr/sampling.hpp"

using namespace cwr;

namespace {

FieldPtr kt() { return make_field(2, 1, 1); }
FieldPtr kt2() { return make_field(2, 1, 2); }

FieldElem fe(const FieldPtr& k, const std::string& s) { return parse_field_elem(k, s); }

}  // namespace

TEST_CASE("multi-index keys round-trip") {
    MultiIndex I;
    I.level = 2;
    I.v = {3, 0};
    CHECK(mi_key(I) == "(3,0)");
    MultiIndex J = mi_parse("(3,0)", 2);
    CHECK(J.v == I.v);
    CHECK(mi_key(mi_parse("(0)", 1)) == "(0)");
}

TEST_CASE("p-independence") {
    FieldPtr k = kt();
    CHECK(is_p_independent(k, {fe(k, "t")}));
    CHECK(!is_p_independent(k, {fe(k, "t^2")}));
    CHECK(!is_p_independent(k, {fe(k, "t"), fe(k, "1+t")}));
    CHECK(!is_p_independent(k, {fe(k, "0")}));
    FieldPtr k2 = kt2();
    CHECK(is_p_independent(k2, {fe(k2, "t1"), fe(k2, "t2")}));
    CHECK(!is_p_independent(k2, {fe(k2, "t1"), fe(k2, "t1^2")}));
    CHECK(is_p_independent(k2, {fe(k2, "t1*t2")}));
}

TEST_CASE("all lambda coefficients of 1/(1+t) equal 1/(1+t)") {
    FieldPtr k = kt();
    FieldElem alpha = fe(k, "(1)/(1+t)");
    for (u32 m = 1; m <= 3; ++m) {
        auto dec = lambda_decompose(k, canonical_pbasis(k), m, alpha);
        REQUIRE(dec.has_value());
        const u32 q = 1u << m;
        CHECK(dec->coeffs.size() == q);
        for (const auto& [I, c] : dec->coeffs) CHECK(c == alpha);
        CHECK(lambda_reconstruct(k, canonical_pbasis(k), *dec) == alpha);
    }
}

TEST_CASE("reconstruction is the identity and coefficients are unique") {
    FieldPtr k = kt2();
    auto basis = canonical_pbasis(k);
    Rng g(42);
    for (u32 m = 1; m <= 2; ++m) {
        for (int it = 0; it < 25; ++it) {
            FieldElem alpha = sample_field_elem(g, k, 2);
            auto dec = lambda_decompose(k, basis, m, alpha);
            REQUIRE(dec.has_value());
            CHECK(lambda_reconstruct(k, basis, *dec) == alpha);
            DecomposeOptions opts;
            opts.reversed_order = true;
            auto dec2 = lambda_decompose(k, basis, m, alpha, opts);
            REQUIRE(dec2.has_value());
            CHECK(dec->coeffs == dec2->coeffs);
        }
    }
}

TEST_CASE("composition of lambda maps matches the oplus index") {
    FieldPtr k = kt();
    auto basis = canonical_pbasis(k);
    FieldElem alpha = fe(k, "t^3");
    auto d1 = lambda_decompose(k, basis, 1, alpha);
    REQUIRE(d1.has_value());
    MultiIndex I;
    I.level = 1;
    I.v = {1};
    FieldElem inner = d1->coeff(k, I);
    CHECK(inner == fe(k, "t"));
    auto d2 = lambda_decompose(k, basis, 1, inner);
    REQUIRE(d2.has_value());
    FieldElem outer = d2->coeff(k, I);
    auto dfull = lambda_decompose(k, basis, 2, alpha);
    REQUIRE(dfull.has_value());
    MultiIndex IJ;
    IJ.level = 2;
    IJ.v = {3};
    CHECK(dfull->coeff(k, IJ) == outer);
    CHECK(outer == FieldElem::one(k));
}

TEST_CASE("decomposition against a partial basis detects out-of-span input") {
    FieldPtr k = kt2();
    std::vector<FieldElem> partial = {fe(k, "t1")};
    auto miss = lambda_decompose(k, partial, 1, fe(k, "t2"));
    CHECK(!miss.has_value());
    auto hit = lambda_decompose(k, partial, 1, fe(k, "t1^3+t2^2"));
    REQUIRE(hit.has_value());
    CHECK(lambda_reconstruct(k, partial, *hit) == fe(k, "t1^3+t2^2"));
}

TEST_CASE("dependent tuples are rejected") {
    FieldPtr k = kt();
    CHECK_THROWS_AS(lambda_decompose(k, {fe(k, "t^2")}, 1, fe(k, "t")),
                    NotPIndependent);
}

TEST_CASE("canonical p-basis lists the variables") {
    FieldPtr k = kt2();
    auto basis = canonical_pbasis(k);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == FieldElem::var(k, 0));
    CHECK(basis[1] == FieldElem::var(k, 1));
    CHECK(canonical_pbasis(make_field(2, 2, 0, {1, 1, 1})).empty());
}
