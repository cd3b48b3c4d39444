#include "doctest.h"

#include "cwr/cohen.hpp"
#include "cwr/errors.hpp"
#include "cwr/sampling.hpp"

using namespace cwr;

namespace {

FieldPtr kt() { return make_field(2, 1, 1); }

FieldElem fe(const FieldPtr& k, const std::string& s) { return parse_field_elem(k, s); }

WittVector wv(const FieldPtr& k, const std::vector<std::string>& digits) {
    std::vector<FieldElem> a;
    for (const auto& s : digits) a.push_back(fe(k, s));
    return witt_from_digits(k, a);
}

std::vector<FieldElem> digs(const FieldPtr& k, const std::vector<std::string>& ss) {
    std::vector<FieldElem> a;
    for (const auto& s : ss) a.push_back(fe(k, s));
    return a;
}

LiftFn noisy_lift(u64 seed) {
    auto g = std::make_shared<Rng>(seed);
    return [g](const FieldElem& gamma, u32 length) {
        std::vector<FieldElem> a = {gamma};
        for (u32 i = 1; i < length; ++i)
            a.push_back(sample_field_elem(*g, gamma.field(), 2));
        return witt_from_digits(gamma.field(), a);
    };
}

}  // namespace

TEST_CASE("model validation") {
    FieldPtr k = kt();
    CHECK_THROWS_AS(make_model(k, 0), LevelError);
    CHECK_THROWS_AS(make_model(k, 2, {fe(k, "t^2")}), NotPIndependent);
    CHECK_THROWS_AS(make_model(k, 2, {fe(k, "t")}, {wv(k, {"1+t", "0"})}), ModelMismatch);
    CHECK_THROWS_AS(make_model(k, 2, {fe(k, "t")}, {wv(k, {"t"})}), ModelMismatch);
    CohenRingModel C = make_model(k, 2);
    CHECK(C.pbasis == canonical_pbasis(k));
    CHECK(C.reps[0] == teichmuller(k, fe(k, "t"), 2));
    CohenRingModel C1 = truncate_model(C, 1);
    CHECK(C1.m == 1);
    CHECK(C1.reps[0] == wv(k, {"t"}));
}

TEST_CASE("frozen lambda representatives over F_2(t)") {
    FieldPtr k = kt();
    CohenRingModel C2 = make_model(k, 2);
    CHECK(lambda_representative(C2, fe(k, "1+t")) == wv(k, {"1+t", "t"}));
    CohenRingModel C3 = make_model(k, 3);
    CHECK(lambda_representative(C3, fe(k, "1+t")) == wv(k, {"1+t", "t", "t*(1+t)^2"}));
    CHECK(lambda_representative(C2, fe(k, "t")) == wv(k, {"t", "0"}));
    CHECK(lambda_representative(C2, fe(k, "0")).is_zero());
    CHECK(lambda_representative(C2, fe(k, "1")) == witt_one(k, 2));
}

TEST_CASE("representatives do not depend on the lift") {
    FieldPtr k = kt();
    Rng g(31);
    for (u32 m = 1; m <= 3; ++m) {
        CohenRingModel C = make_model(k, m);
        for (int it = 0; it < 8; ++it) {
            FieldElem alpha = sample_field_elem(g, k, 2);
            WittVector base = lambda_representative(C, alpha);
            CHECK(base == lambda_representative(C, alpha, noisy_lift(100 + it)));
            CHECK(base.a[0] == alpha);
        }
    }
}

TEST_CASE("the representative map is a section, not a homomorphism") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    FieldElem a = fe(k, "1+t");
    WittVector s = lambda_representative(C, a);
    CHECK(witt_mul(s, s) == wv(k, {"1+t^2", "0"}));
    CHECK(lambda_representative(C, a * a) == wv(k, {"1+t^2", "t^2"}));
    CHECK(witt_mul(s, s) != lambda_representative(C, a * a));
}

TEST_CASE("digitize frozen values and membership") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    auto d = digitize(C, wv(k, {"t", "1"}));
    REQUIRE(d.has_value());
    CHECK(*d == digs(k, {"t", "1"}));
    auto z = digitize(C, wv(k, {"0", "1"}));
    REQUIRE(z.has_value());
    CHECK(*z == digs(k, {"0", "1"}));
    CHECK(!digitize(C, wv(k, {"0", "t"})).has_value());
    CHECK(!is_member(C, wv(k, {"0", "t"})));
    CHECK(!is_member(C, wv(k, {"t", "t"})));
    CHECK(is_member(C, teichmuller(k, fe(k, "t"), 2)));
    CHECK(is_member(C, witt_times_p(witt_one(k, 2))));
    CHECK(is_member(C, witt_zero(k, 2)));
}

TEST_CASE("digit expansion round-trips") {
    FieldPtr k = kt();
    Rng g(37);
    for (u32 m = 1; m <= 3; ++m) {
        CohenRingModel C = make_model(k, m);
        for (int it = 0; it < 10; ++it) {
            std::vector<FieldElem> digits;
            for (u32 i = 0; i < m; ++i) digits.push_back(sample_field_elem(g, k, 2));
            WittVector x = undigitize(C, digits);
            auto back = digitize(C, x);
            REQUIRE(back.has_value());
            CHECK(*back == digits);
            WittVector y = sample_member(g, C);
            auto dy = digitize(C, y);
            REQUIRE(dy.has_value());
            CHECK(undigitize(C, *dy) == y);
        }
    }
}

TEST_CASE("custom representative system") {
    FieldPtr k = kt();
    WittVector s2 = wv(k, {"t", "1"});
    CohenRingModel M2 = make_model(k, 2, {fe(k, "t")}, {s2});
    CHECK(lambda_representative(M2, fe(k, "t")) == s2);
    auto d = digitize(M2, wv(k, {"t", "0"}));
    REQUIRE(d.has_value());
    CHECK(*d == digs(k, {"t", "1"}));
    CHECK(undigitize(M2, digs(k, {"t", "1"})) == wv(k, {"t", "0"}));
    Rng g(41);
    for (int it = 0; it < 10; ++it) {
        WittVector x = sample_member(g, M2);
        auto dx = digitize(M2, x);
        REQUIRE(dx.has_value());
        CHECK(undigitize(M2, *dx) == x);
    }
}

TEST_CASE("membership is closed under the ring operations") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    Rng g(43);
    for (int it = 0; it < 10; ++it) {
        WittVector x = sample_member(g, C);
        WittVector y = sample_member(g, C);
        CHECK(is_member(C, witt_add(x, y)));
        CHECK(is_member(C, witt_mul(x, y)));
        CHECK(is_member(C, witt_neg(x)));
    }
}

TEST_CASE("multiplicative representatives exist exactly on the perfect core") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    auto r = multiplicative_representative(C, fe(k, "t^4"));
    REQUIRE(r.has_value());
    CHECK(*r == wv(k, {"t^4", "0"}));
    CHECK(!multiplicative_representative(C, fe(k, "t")).has_value());
    CHECK(multiplicative_representative(C, fe(k, "1")).has_value());
    FieldPtr f4 = make_field(2, 2, 0, {1, 1, 1});
    CohenRingModel P = make_model(f4, 2);
    FieldElem gen = FieldElem::gen(f4);
    auto rg = multiplicative_representative(P, gen);
    REQUIRE(rg.has_value());
    CHECK(*rg == teichmuller(f4, gen, 2));
}

TEST_CASE("precision tower compatibility and its failure") {
    FieldPtr k = kt();
    CohenRingModel C3 = make_model(k, 3);

    TowerResult ok = tower(C3, {fe(k, "t"), fe(k, "1"), fe(k, "0")});
    CHECK(ok.compatible);
    CHECK(ok.layers.size() == 3);
    CHECK(!ok.witness.has_value());

    TowerResult bad = tower(C3, {fe(k, "t"), fe(k, "1+t^4")});
    REQUIRE(!bad.compatible);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->upper == 3);
    CHECK(bad.witness->lower == 2);
    CHECK(bad.witness->alpha == fe(k, "1+t^4"));

    WittVector u = lambda_representative(make_model(k, 3), fe(k, "1+t^4"));
    CHECK(witt_truncate(u, 2) == wv(k, {"1+t^4", "t^4"}));
    CHECK(lambda_representative(make_model(k, 2), fe(k, "1+t^4")) == wv(k, {"1+t^4", "0"}));
}

TEST_CASE("tower rejects representative systems that do not truncate onto each other") {
    FieldPtr k = kt();
    std::vector<CohenRingModel> family = {
        make_model(k, 1),
        make_model(k, 2, {fe(k, "t")}, {wv(k, {"t", "1"})}),
        make_model(k, 3),
    };
    TowerResult r = tower(family, {});
    REQUIRE(!r.compatible);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->alpha == fe(k, "t"));
}

TEST_CASE("representatives w.r.t. an arbitrary ring tuple") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    std::vector<WittVector> b = {teichmuller(k, fe(k, "t"), 2)};
    SpanRep ok = lambda_rep_wrt(k, 2, b, fe(k, "(1)/(1+t)"));
    CHECK(ok.status == SpanStatus::ok);
    CHECK(ok.value == lambda_representative(C, fe(k, "(1)/(1+t)")));

    std::vector<WittVector> dep = {teichmuller(k, fe(k, "t"), 2),
                                   teichmuller(k, fe(k, "1+t"), 2)};
    CHECK(lambda_rep_wrt(k, 2, dep, fe(k, "t")).status == SpanStatus::dependent_tuple);

    FieldPtr k2 = make_field(2, 1, 2);
    std::vector<WittVector> part = {teichmuller(k2, fe(k2, "t1"), 2)};
    CHECK(lambda_rep_wrt(k2, 2, part, fe(k2, "t2")).status == SpanStatus::not_in_span);
    CHECK(lambda_rep_wrt(k2, 2, part, fe(k2, "t1^3")).status == SpanStatus::ok);
}

TEST_CASE("partial-basis models signal out-of-span representatives") {
    FieldPtr k2 = make_field(2, 1, 2);
    CohenRingModel part = make_model(k2, 2, {fe(k2, "t1")});
    CHECK_THROWS_AS(lambda_representative(part, fe(k2, "t2")), NotInSpan);
    CHECK(lambda_representative(part, fe(k2, "t1^3")).a[0] == fe(k2, "t1^3"));
}
