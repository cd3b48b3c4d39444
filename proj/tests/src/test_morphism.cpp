#include "doctest.h"

#include "cwr/errors.hpp"
#include "cwr/morphism.hpp"
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

std::vector<WittVector> alt_reps(const FieldPtr& k) {
    return {wv(k, {"t", "1"}), wv(k, {"t", "t^2"}), wv(k, {"t", "1+t^2"})};
}

}  // namespace

TEST_CASE("field homomorphisms") {
    FieldPtr k = kt();
    FieldHom id = identity_hom(k);
    CHECK(apply(id, fe(k, "(1+t)/(t)")) == fe(k, "(1+t)/(t)"));

    FieldHom sq = make_field_hom(k, k, std::nullopt, {fe(k, "t^2")});
    CHECK(apply(sq, fe(k, "(1+t)/(t)")) == fe(k, "(1+t^2)/(t^2)"));
    CHECK(apply(compose(sq, sq), fe(k, "t")) == fe(k, "t^4"));

    FieldPtr f4 = make_field(2, 2, 0, {1, 1, 1});
    CHECK_THROWS_AS(make_field_hom(make_field(3, 1, 0), k, std::nullopt, {}), FieldMismatch);
    CHECK_THROWS_AS(make_field_hom(k, k, std::nullopt, {}), IndexMismatch);
    CHECK_THROWS_AS(make_field_hom(f4, k, fe(k, "t"), {}), ModelMismatch);
    FieldHom inc = make_field_hom(f4, f4, FieldElem::gen(f4) * FieldElem::gen(f4), {});
    CHECK(apply(inc, FieldElem::gen(f4)) == FieldElem::gen(f4) * FieldElem::gen(f4));
}

TEST_CASE("witt_map is the digit-wise functorial map") {
    FieldPtr k = kt();
    FieldHom sq = make_field_hom(k, k, std::nullopt, {fe(k, "t^2")});
    CHECK(witt_map(sq, wv(k, {"t", "1+t"})) == wv(k, {"t^2", "1+t^2"}));
    Rng g(47);
    for (int it = 0; it < 10; ++it) {
        WittVector x = sample_witt(g, k, 3, 2);
        WittVector y = sample_witt(g, k, 3, 2);
        CHECK(witt_map(sq, witt_add(x, y)) == witt_add(witt_map(sq, x), witt_map(sq, y)));
        CHECK(witt_map(sq, witt_mul(x, y)) == witt_mul(witt_map(sq, x), witt_map(sq, y)));
    }
}

TEST_CASE("structure isomorphism between representative systems") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    CohenRingModel M2 = make_model(k, 2, {fe(k, "t")}, {wv(k, {"t", "1"})});
    CohenMorphism phi = structure_isomorphism(C, M2);
    CohenMorphism psi = structure_isomorphism(M2, C);

    CHECK(apply(phi, wv(k, {"t", "0"})) == wv(k, {"t", "1"}));
    CHECK(apply(phi, wv(k, {"t", "1"})) == wv(k, {"t", "0"}));
    CHECK(apply(phi, witt_one(k, 2)) == witt_one(k, 2));
    CHECK(apply(phi, witt_zero(k, 2)).is_zero());

    Rng g(53);
    for (int it = 0; it < 15; ++it) {
        WittVector x = sample_member(g, C);
        WittVector y = sample_member(g, C);
        CHECK(apply(phi, witt_add(x, y)) == witt_add(apply(phi, x), apply(phi, y)));
        CHECK(apply(phi, witt_mul(x, y)) == witt_mul(apply(phi, x), apply(phi, y)));
        CHECK(apply(phi, x).a[0] == x.a[0]);
        CHECK(apply(psi, apply(phi, x)) == x);
    }
}

TEST_CASE("structure isomorphism for each alternative representative") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    Rng g(59);
    for (const WittVector& s2 : alt_reps(k)) {
        CohenRingModel M = make_model(k, 2, {fe(k, "t")}, {s2});
        CohenMorphism phi = structure_isomorphism(C, M);
        CohenMorphism psi = structure_isomorphism(M, C);
        CHECK(apply(phi, C.reps[0]) == s2);
        for (int it = 0; it < 5; ++it) {
            WittVector x = sample_member(g, C);
            CHECK(apply(psi, apply(phi, x)) == x);
            CHECK(is_member(M, apply(phi, x)));
        }
    }
}

TEST_CASE("structure isomorphism rejects mismatched models and non-members") {
    FieldPtr k = kt();
    CohenRingModel C2 = make_model(k, 2);
    CHECK_THROWS_AS(structure_isomorphism(C2, make_model(k, 3)), ModelMismatch);
    FieldPtr k2 = make_field(2, 1, 2);
    CHECK_THROWS_AS(
        structure_isomorphism(make_model(k2, 2, {fe(k2, "t1")}),
                              make_model(k2, 2, {fe(k2, "t2")})),
        ModelMismatch);
    CohenMorphism phi = structure_isomorphism(C2, C2);
    CHECK_THROWS_AS(apply(phi, wv(k, {"0", "t"})), MapUndefined);
}

TEST_CASE("teichmuller embedding of the p-th root stage") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    TepEmbedding e1 = tep_embed(C, 1);
    CHECK(e1.phi.rep_images[0] == wv(k, {"t^2", "0"}));
    REQUIRE(e1.root_witnesses.size() == 1);
    CHECK(e1.root_witnesses[0] == wv(k, {"t", "0"}));
    CHECK(witt_pow(e1.root_witnesses[0], 2) == e1.phi.rep_images[0]);

    TepEmbedding e0 = tep_embed(C, 0);
    TepEmbedding e2 = tep_embed(C, 2);
    CHECK(witt_pow(e2.root_witnesses[0], 4) == e2.phi.rep_images[0]);

    Rng g(61);
    std::vector<WittVector> seen_x, seen_fx;
    for (int it = 0; it < 12; ++it) {
        WittVector x = sample_member(g, C);
        CHECK(apply(e0.phi, x) == x);
        WittVector y = apply(e1.phi, x);
        CHECK(y.a[0] == frobenius(x.a[0]));
        WittVector z = apply(e2.phi, x);
        CHECK(z.a[0] == frobenius(frobenius(x.a[0])));
        for (size_t j = 0; j < seen_x.size(); ++j)
            if (seen_x[j] != x) CHECK(seen_fx[j] != y);
        seen_x.push_back(x);
        seen_fx.push_back(y);
    }

    CHECK_THROWS_AS(tep_embed(C, 3), StageError);
    CohenRingModel M2 = make_model(k, 2, {fe(k, "t")}, {wv(k, {"t", "1"})});
    CHECK_THROWS_AS(tep_embed(M2, 1), ModelMismatch);
}

TEST_CASE("tep embedding is a ring homomorphism") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    TepEmbedding e = tep_embed(C, 1);
    Rng g(67);
    std::vector<std::pair<WittVector, WittVector>> pairs;
    for (int it = 0; it < 10; ++it)
        pairs.emplace_back(sample_member(g, C), sample_member(g, C));
    HomReport r = check_homomorphism(e.phi, pairs);
    CHECK(r.checked == 10);
    CHECK(r.violations.empty());
}

TEST_CASE("embedding over a base: inclusion along u -> t^2") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    FieldHom base_embed = make_field_hom(k, k, std::nullopt, {fe(k, "t^2")});
    CohenRingModel base = make_model(k, 2);
    Rng g(71);
    std::vector<WittVector> base_samples;
    for (int it = 0; it < 5; ++it) base_samples.push_back(sample_member(g, C));

    EmbeddingOverBase emb = embedding_over_base(base, base_embed, C, C, identity_hom(k),
                                                {fe(k, "t")}, base_samples);
    CHECK(emb.base_respected);
    for (int it = 0; it < 5; ++it) {
        WittVector x = sample_member(g, C);
        CHECK(apply(emb.phi, x) == x);
    }
}

TEST_CASE("embedding over the prime base recovers the structure isomorphism") {
    FieldPtr k = kt();
    FieldPtr f2 = make_field(2, 1, 0);
    CohenRingModel base = make_model(f2, 2);
    CohenRingModel C = make_model(k, 2);
    CohenRingModel M2 = make_model(k, 2, {fe(k, "t")}, {wv(k, {"t", "1"})});
    FieldHom base_embed = make_field_hom(f2, k, std::nullopt, {});
    std::vector<WittVector> base_samples = {witt_one(f2, 2),
                                            witt_times_p(witt_one(f2, 2))};

    EmbeddingOverBase emb = embedding_over_base(base, base_embed, C, M2, identity_hom(k),
                                                {fe(k, "t")}, base_samples);
    CHECK(emb.base_respected);
    CohenMorphism iso = structure_isomorphism(C, M2);
    Rng g(73);
    for (int it = 0; it < 10; ++it) {
        WittVector x = sample_member(g, C);
        CHECK(apply(emb.phi, x) == apply(iso, x));
    }
}

TEST_CASE("embedding over a base with a frobenius-twisted residue map") {
    FieldPtr k = kt();
    FieldPtr f2 = make_field(2, 1, 0);
    CohenRingModel base = make_model(f2, 2);
    CohenRingModel C = make_model(k, 2);
    FieldHom base_embed = make_field_hom(f2, k, std::nullopt, {});
    FieldHom sq = make_field_hom(k, k, std::nullopt, {fe(k, "t^2")});

    EmbeddingOverBase emb = embedding_over_base(base, base_embed, C, C, sq, {fe(k, "t")},
                                                {witt_one(f2, 2)});
    CHECK(emb.base_respected);
    CHECK(emb.phi.rep_images[0] == wv(k, {"t^2", "0"}));
    Rng g(79);
    std::vector<std::pair<WittVector, WittVector>> pairs;
    for (int it = 0; it < 10; ++it)
        pairs.emplace_back(sample_member(g, C), sample_member(g, C));
    CHECK(check_homomorphism(emb.phi, pairs).violations.empty());
    for (auto& [x, y] : pairs) CHECK(apply(emb.phi, x).a[0] == apply(sq, x.a[0]));
}

TEST_CASE("embedding over a base validates the relative tuple") {
    FieldPtr k = kt();
    FieldPtr f2 = make_field(2, 1, 0);
    CohenRingModel base = make_model(f2, 2);
    CohenRingModel C = make_model(k, 2);
    FieldHom base_embed = make_field_hom(f2, k, std::nullopt, {});
    CHECK_THROWS_AS(embedding_over_base(base, base_embed, C, C, identity_hom(k),
                                        {fe(k, "t^2")}, {}),
                    SeparabilityWitnessInvalid);
}

TEST_CASE("enrichment compatibility reports") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    Rng g(83);
    std::vector<EnrichmentSample> samples;
    for (int it = 0; it < 30; ++it) samples.push_back(sample_enrichment(g, C, 1));

    CohenMorphism id = structure_isomorphism(C, C);
    EnrichmentReport r0 = check_enrichment(id, samples);
    CHECK(r0.applicable > 0);
    CHECK(r0.discrepancies.empty());

    CohenRingModel M2 = make_model(k, 2, {fe(k, "t")}, {wv(k, {"t", "1"})});
    EnrichmentReport r1 = check_enrichment(structure_isomorphism(C, M2), samples);
    CHECK(r1.applicable + r1.inapplicable == 30);
    CHECK(r1.discrepancies.empty());

    CohenMorphism bad = structure_isomorphism(C, M2);
    bad.rep_images[0] = wv(k, {"1+t", "1"});
    EnrichmentReport r2 = check_enrichment(bad, samples);
    CHECK(!r2.discrepancies.empty());

    TepEmbedding e = tep_embed(C, 1);
    EnrichmentReport r3 = check_enrichment(e.phi, samples);
    CHECK(r3.applicable == 0);
    CHECK(r3.inapplicable == 30);
    CHECK(r3.discrepancies.empty());
}

TEST_CASE("check_homomorphism flags corrupted maps") {
    FieldPtr k = kt();
    CohenRingModel C = make_model(k, 2);
    Rng g(89);
    std::vector<std::pair<WittVector, WittVector>> pairs;
    for (int it = 0; it < 10; ++it)
        pairs.emplace_back(sample_member(g, C), sample_member(g, C));
    CohenMorphism bad = structure_isomorphism(C, C);
    bad.rep_images[0] = wv(k, {"1+t", "1"});
    HomReport r = check_homomorphism(bad, pairs);
    CHECK(!r.violations.empty());
}
