#include "doctest.h"

#include "cwr/errors.hpp"
#include "cwr/field.hpp"

using namespace cwr;

namespace {

FieldPtr kt() { return make_field(2, 1, 1); }

FieldElem fe(const FieldPtr& k, const std::string& s) { return parse_field_elem(k, s); }

}  // namespace

TEST_CASE("parsing and printing round-trip") {
    FieldPtr k = kt();
    for (const char* s : {"0", "1", "t", "1+t", "(1)/(1+t)", "(t)/(1+t+t^2)", "t^3"}) {
        FieldElem a = fe(k, s);
        CHECK(parse_field_elem(k, a.to_string()) == a);
    }
    CHECK(fe(k, "(1)/(1+t)").to_string() == "(1)/(1+t)");
    CHECK(fe(k, "t").to_string() == "t");
    CHECK_THROWS_AS(fe(k, "t+"), ParseError);
    CHECK_THROWS_AS(fe(k, "(1/(t)"), ParseError);
}

TEST_CASE("fractions reduce to lowest terms with monic denominator") {
    FieldPtr k = kt();
    FieldElem a = fe(k, "1+t^2") / fe(k, "1+t");
    CHECK(a == fe(k, "1+t"));
    FieldElem b = fe(k, "t") / fe(k, "t^2");
    CHECK(b.to_string() == "(1)/(t)");
    CHECK_THROWS_AS(fe(k, "1") / fe(k, "0"), DivisionByZero);
}

TEST_CASE("field laws on rational functions") {
    FieldPtr k = kt();
    FieldElem x = fe(k, "(1+t)/(t)");
    FieldElem y = fe(k, "t^2");
    CHECK((x + y) * (x + y) == x * x + y * y);
    CHECK(x * field_inv(x) == FieldElem::one(k));
    CHECK(x - x == FieldElem::zero(k));
    CHECK(field_pow(x, 5) == x * x * x * x * x);
}

TEST_CASE("frobenius and iterated p-th roots") {
    FieldPtr k = kt();
    FieldElem x = fe(k, "(1+t)/(t)");
    CHECK(frobenius(x) == x * x);
    auto r = pth_root(frobenius(x));
    REQUIRE(r.has_value());
    CHECK(*r == x);
    CHECK(!pth_root(fe(k, "t")).has_value());
    auto r2 = pth_root_iter(fe(k, "t^4"), 2);
    REQUIRE(r2.has_value());
    CHECK(*r2 == fe(k, "t"));
    CHECK(!pth_root_iter(fe(k, "t^4"), 3).has_value());
}

TEST_CASE("extension field with generator") {
    FieldPtr k4 = make_field(2, 2, 1, {1, 1, 1});
    FieldElem g = FieldElem::gen(k4);
    CHECK(g * g + g == FieldElem::one(k4));
    FieldElem a = (g + FieldElem::var(k4, 0)) / (FieldElem::one(k4) + FieldElem::var(k4, 0));
    CHECK(parse_field_elem(k4, a.to_string()) == a);
    CHECK(frobenius(g) == g * g);
    auto rg = pth_root(g);
    REQUIRE(rg.has_value());
    CHECK(frobenius(*rg) == g);
}

TEST_CASE("cross-field operations are rejected") {
    FieldPtr a = make_field(2, 1, 1);
    FieldPtr b = make_field(3, 1, 1);
    CHECK_THROWS_AS(parse_field_elem(a, "t") + parse_field_elem(b, "t"), FieldMismatch);
}
