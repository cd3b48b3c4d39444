#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cwr/cohen.hpp"
#include "cwr/errors.hpp"
#include "cwr/json_io.hpp"
#include "cwr/lang.hpp"
#include "cwr/morphism.hpp"
#include "cwr/sampling.hpp"
#include "cwr/valued.hpp"

namespace {

using cwr::json;
using cwr::u32;
using cwr::u64;

struct Common {
    u32 p = 2;
    u32 d = 1;
    u32 r = 1;
    u32 m = 2;
    std::string modulus;
    u64 seed = 12345;
    u32 samples = 200;
};

cwr::FieldPtr make_k(const Common& c) {
    std::vector<u32> mod;
    if (!c.modulus.empty()) {
        std::stringstream ss(c.modulus);
        std::string tok;
        while (std::getline(ss, tok, ',')) mod.push_back(static_cast<u32>(std::stoul(tok)));
    }
    return cwr::make_field(c.p, c.d, c.r, mod);
}

int emit(const json& j) {
    std::cout << j.dump() << "\n";
    return 0;
}

int domain(const std::string& marker) {
    std::cout << json{{"error", marker}}.dump() << "\n";
    return 2;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw cwr::SchemaError("invalid JSON payload");
    return j;
}

std::string read_stdin() {
    std::ostringstream o;
    o << std::cin.rdbuf();
    return o.str();
}

json value_to_json(const cwr::Value& v) {
    if (std::holds_alternative<cwr::WittVector>(v))
        return cwr::witt_to_json(std::get<cwr::WittVector>(v));
    if (std::holds_alternative<cwr::FieldElem>(v))
        return std::get<cwr::FieldElem>(v).to_string();
    if (std::holds_alternative<cwr::GammaValue>(v)) {
        const auto& g = std::get<cwr::GammaValue>(v);
        if (g.inf) return "inf";
        return g.v;
    }
    return cwr::valued_to_json(std::get<cwr::ValuedElement>(v));
}

cwr::Value value_from_json(const cwr::FieldPtr& k, const json& j) {
    if (j.is_array()) return cwr::witt_from_json(k, j);
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return cwr::GammaValue{true, 0};
        return cwr::parse_field_elem(k, s);
    }
    if (j.is_number_integer()) return cwr::GammaValue{false, j.get<long long>()};
    if (j.is_object()) return cwr::valued_from_json(k, j);
    throw cwr::SchemaError("cannot type assignment value");
}

bool is_formula_head(const std::string& h) {
    return h == "=" || h == "le" || h == "theta" || h == "and" || h == "or" ||
           h == "not" || h == "true" || h == "false";
}

cwr::CohenMorphism morphism_from_payload(const Common& c, const json& payload,
                                         u32 tep_stage, bool tep_set) {
    if (payload.contains("m1") && payload.contains("m2")) {
        cwr::CohenRingModel m1 = cwr::model_from_json(payload.at("m1"));
        cwr::CohenRingModel m2 = cwr::model_from_json(payload.at("m2"));
        return cwr::structure_isomorphism(m1, m2);
    }
    if (tep_set) {
        cwr::CohenRingModel model = cwr::make_model(make_k(c), c.m);
        return cwr::tep_embed(model, tep_stage).phi;
    }
    throw cwr::SchemaError("expected models on stdin or --tep stage");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohen ring and Witt vector workbench"};
    app.require_subcommand(1);

    Common c;
    app.add_option("--p", c.p, "field characteristic");
    app.add_option("--d", c.d, "extension degree over the prime field");
    app.add_option("--r", c.r, "number of rational variables");
    app.add_option("--m", c.m, "truncation level / precision");
    app.add_option("--modulus", c.modulus, "comma-separated modulus coefficients, low to high");
    app.add_option("--seed", c.seed, "RNG seed for sampled reports");
    app.add_option("--samples", c.samples, "sample count for sampled reports");

    std::function<int()> action;

    // lambda
    std::string alpha_text;
    auto* lam = app.add_subcommand("lambda", "lambda decomposition over the canonical p-basis");
    lam->add_option("alpha", alpha_text, "field element")->required();
    lam->callback([&] {
        action = [&]() -> int {
            auto k = make_k(c);
            cwr::FieldElem alpha = cwr::parse_field_elem(k, alpha_text);
            auto dec = cwr::lambda_decompose(k, cwr::canonical_pbasis(k), c.m, alpha);
            if (!dec) return domain("NotInSpan");
            return emit(cwr::lambda_to_json(*dec));
        };
    });

    // witt
    auto* witt = app.add_subcommand("witt", "truncated Witt vector arithmetic");
    witt->require_subcommand(1);
    std::string wx, wy, wa;
    u32 trunc_l = 1;
    auto add_bin = [&](const char* name, auto fn) {
        auto* sc = witt->add_subcommand(name);
        sc->add_option("x", wx)->required();
        sc->add_option("y", wy)->required();
        sc->callback([&, fn] {
            action = [&, fn]() -> int {
                auto k = make_k(c);
                auto x = cwr::witt_from_json(k, parse_json(wx));
                auto y = cwr::witt_from_json(k, parse_json(wy));
                return emit(json{{"result", cwr::witt_to_json(fn(x, y))}});
            };
        });
    };
    add_bin("add", [](const cwr::WittVector& x, const cwr::WittVector& y) {
        return cwr::witt_add(x, y);
    });
    add_bin("sub", [](const cwr::WittVector& x, const cwr::WittVector& y) {
        return cwr::witt_sub(x, y);
    });
    add_bin("mul", [](const cwr::WittVector& x, const cwr::WittVector& y) {
        return cwr::witt_mul(x, y);
    });
    auto add_un = [&](const char* name, auto fn) {
        auto* sc = witt->add_subcommand(name);
        sc->add_option("x", wx)->required();
        sc->callback([&, fn] {
            action = [&, fn]() -> int {
                auto k = make_k(c);
                auto x = cwr::witt_from_json(k, parse_json(wx));
                return emit(json{{"result", cwr::witt_to_json(fn(x))}});
            };
        });
    };
    add_un("neg", [](const cwr::WittVector& x) { return cwr::witt_neg(x); });
    add_un("frobenius", [](const cwr::WittVector& x) { return cwr::witt_frobenius(x); });
    add_un("verschiebung", [](const cwr::WittVector& x) { return cwr::verschiebung(x); });
    {
        auto* sc = witt->add_subcommand("teichmuller");
        sc->add_option("a", wa)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto a = cwr::parse_field_elem(k, wa);
                return emit(json{{"result", cwr::witt_to_json(cwr::teichmuller(k, a, c.m))}});
            };
        });
    }
    {
        auto* sc = witt->add_subcommand("truncate");
        sc->add_option("x", wx)->required();
        sc->add_option("--l", trunc_l, "target length")->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto x = cwr::witt_from_json(k, parse_json(wx));
                return emit(json{{"result", cwr::witt_to_json(cwr::witt_truncate(x, trunc_l))}});
            };
        });
    }
    {
        auto* sc = witt->add_subcommand("divp");
        sc->add_option("x", wx)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto x = cwr::witt_from_json(k, parse_json(wx));
                auto q = cwr::witt_div_by_p(x);
                if (!q) return domain("NotDivisible");
                return emit(json{{"result", cwr::witt_to_json(*q)}});
            };
        });
    }

    // cohen
    auto* cohen = app.add_subcommand("cohen", "Cohen ring digit parametrization");
    cohen->require_subcommand(1);
    std::string cx;
    {
        auto* sc = cohen->add_subcommand("digitize");
        sc->add_option("x", cx)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto model = cwr::make_model(k, c.m);
                auto x = cwr::witt_from_json(k, parse_json(cx));
                auto digits = cwr::digitize(model, x);
                if (!digits) return domain("NotMember");
                json arr = json::array();
                for (const auto& d : *digits) arr.push_back(d.to_string());
                return emit(json{{"digits", arr}});
            };
        });
    }
    {
        auto* sc = cohen->add_subcommand("undigitize");
        sc->add_option("digits", cx)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                json j = parse_json(cx);
                if (!j.is_array()) throw cwr::SchemaError("digits must be an array");
                std::vector<cwr::FieldElem> digits;
                for (const auto& s : j) digits.push_back(cwr::fe_from_json(k, s));
                auto model = cwr::make_model(k, static_cast<u32>(digits.size()));
                return emit(json{{"result", cwr::witt_to_json(cwr::undigitize(model, digits))}});
            };
        });
    }
    {
        auto* sc = cohen->add_subcommand("member");
        sc->add_option("x", cx)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto x = cwr::witt_from_json(k, parse_json(cx));
                auto model = cwr::make_model(k, static_cast<u32>(x.a.size()));
                return emit(json{{"member", cwr::is_member(model, x)}});
            };
        });
    }
    {
        auto* sc = cohen->add_subcommand("rep");
        sc->add_option("alpha", cx)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto model = cwr::make_model(k, c.m);
                auto alpha = cwr::parse_field_elem(k, cx);
                return emit(json{{"result",
                                  cwr::witt_to_json(cwr::lambda_representative(model, alpha))}});
            };
        });
    }

    // morphism
    auto* mor = app.add_subcommand("morphism", "Cohen ring morphisms");
    mor->require_subcommand(1);
    u32 tep_stage = 1;
    {
        auto* sc = mor->add_subcommand("structure-iso");
        sc->callback([&] {
            action = [&]() -> int {
                json payload = parse_json(read_stdin());
                cwr::CohenRingModel m1 = cwr::model_from_json(payload.at("m1"));
                cwr::CohenRingModel m2 = cwr::model_from_json(payload.at("m2"));
                cwr::CohenMorphism phi = cwr::structure_isomorphism(m1, m2);
                if (payload.contains("apply")) {
                    auto x = cwr::witt_from_json(m1.k, payload.at("apply"));
                    try {
                        return emit(json{{"result", cwr::witt_to_json(cwr::apply(phi, x))}});
                    } catch (const cwr::MapUndefined&) {
                        return domain("MapUndefined");
                    }
                }
                json reps = json::array();
                for (const auto& s : phi.rep_images) reps.push_back(cwr::witt_to_json(s));
                return emit(json{{"rep_images", reps}});
            };
        });
    }
    {
        auto* sc = mor->add_subcommand("tep");
        sc->add_option("--stage", tep_stage, "p-power stage")->required();
        sc->add_option("x", cx, "optional element to map");
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto model = cwr::make_model(k, c.m);
                cwr::TepEmbedding emb = cwr::tep_embed(model, tep_stage);
                if (!cx.empty()) {
                    auto x = cwr::witt_from_json(k, parse_json(cx));
                    try {
                        return emit(json{{"result", cwr::witt_to_json(cwr::apply(emb.phi, x))}});
                    } catch (const cwr::MapUndefined&) {
                        return domain("MapUndefined");
                    }
                }
                json reps = json::array();
                for (const auto& s : emb.phi.rep_images) reps.push_back(cwr::witt_to_json(s));
                json wits = json::array();
                for (const auto& w : emb.root_witnesses) wits.push_back(cwr::witt_to_json(w));
                return emit(json{{"rep_images", reps}, {"root_witnesses", wits}});
            };
        });
    }
    {
        auto* sc = mor->add_subcommand("check-enrichment");
        sc->add_option("--tep", tep_stage, "use the p-power embedding at this stage");
        sc->callback([&, sc] {
            const bool tep_given = sc->count("--tep") > 0;
            action = [&, tep_given]() -> int {
                std::string in = read_stdin();
                json payload = in.empty() ? json::object() : parse_json(in);
                cwr::CohenMorphism phi = morphism_from_payload(c, payload, tep_stage, tep_given);
                cwr::Rng g(c.seed);
                std::vector<cwr::EnrichmentSample> samples;
                const u32 r = std::max<u32>(1, std::min<u32>(phi.source.k->r, 2));
                for (u32 i = 0; i < c.samples; ++i)
                    samples.push_back(cwr::sample_enrichment(g, phi.source, r));
                return emit(cwr::enrichment_report_to_json(cwr::check_enrichment(phi, samples)));
            };
        });
    }

    // valued
    auto* val = app.add_subcommand("valued", "finite-precision valued field elements");
    val->require_subcommand(1);
    std::string vx;
    u32 level_n = 1;
    {
        auto* sc = val->add_subcommand("v");
        sc->add_option("x", vx)->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto x = cwr::valued_from_json(k, parse_json(vx));
                auto g = cwr::valuation(x);
                if (!g) return emit(json{{"result", "inf"}});
                return emit(json{{"result", *g}});
            };
        });
    }
    {
        auto* sc = val->add_subcommand("res");
        sc->add_option("x", vx)->required();
        sc->add_option("--n", level_n, "residue level")->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto x = cwr::valued_from_json(k, parse_json(vx));
                auto r = cwr::residue_n(x, level_n);
                if (!r) return domain("NotIntegral");
                return emit(json{{"result", cwr::witt_to_json(*r)}});
            };
        });
    }
    {
        auto* sc = val->add_subcommand("ac");
        sc->add_option("x", vx)->required();
        sc->add_option("--n", level_n, "component level")->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                auto x = cwr::valued_from_json(k, parse_json(vx));
                return emit(json{{"result", cwr::witt_to_json(cwr::ac_n(x, level_n))}});
            };
        });
    }

    // lang
    auto* lang = app.add_subcommand("lang", "quantifier-free evaluation and axiom audits");
    lang->require_subcommand(1);
    std::string formula_text, which = "t2";
    {
        auto* sc = lang->add_subcommand("eval");
        sc->add_option("term", formula_text, "s-expression term or formula")->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                cwr::StructureBinding b = cwr::bind_model(cwr::make_model(k, c.m));
                b.vfield = k;
                b.vprecision = c.m;
                cwr::Term t = cwr::parse_term(formula_text);
                cwr::Assignment asg;
                std::string in = read_stdin();
                if (!in.empty()) {
                    json j = parse_json(in);
                    if (!j.is_object()) throw cwr::SchemaError("assignment must be an object");
                    for (const auto& [name, v] : j.items())
                        asg.emplace(name, value_from_json(k, v));
                }
                if (is_formula_head(t.head)) {
                    cwr::QfResult r = cwr::eval_qf(b, t, asg);
                    return emit(json{{"truth", r.truth}, {"flagged", r.flagged}});
                }
                cwr::EvalResult r = cwr::eval_term(b, t, asg);
                return emit(json{{"result", value_to_json(r.value)}, {"flagged", r.flagged}});
            };
        });
    }
    {
        auto* sc = lang->add_subcommand("audit");
        sc->add_option("--which", which, "t2, tac, or ac")->required();
        sc->callback([&] {
            action = [&]() -> int {
                auto k = make_k(c);
                cwr::Rng g(c.seed);
                if (which == "t2") {
                    auto model = cwr::make_model(k, c.m);
                    std::vector<cwr::WittVector> rs;
                    std::vector<cwr::FieldElem> fs;
                    std::vector<cwr::EnrichmentSample> ss;
                    for (u32 i = 0; i < c.samples; ++i) {
                        rs.push_back(cwr::sample_member(g, model));
                        fs.push_back(cwr::sample_field_elem(g, k));
                        if (k->r >= 1 && i % 4 == 0)
                            ss.push_back(cwr::sample_enrichment(
                                g, model, 1 + (k->r > 1 ? i % k->r : 0)));
                    }
                    return emit(cwr::audit_to_json(
                        cwr::audit_t2(cwr::bind_model(model), rs, fs, ss)));
                }
                if (which != "tac" && which != "ac")
                    throw cwr::SchemaError("--which must be t2, tac, or ac");
                std::vector<cwr::ValuedElement> vs;
                for (u32 i = 0; i < c.samples; ++i)
                    vs.push_back(cwr::sample_valued(g, k, c.m));
                auto set = which == "tac" ? cwr::ValuedAxiomSet::tac_core
                                          : cwr::ValuedAxiomSet::ac_axioms;
                return emit(cwr::audit_to_json(cwr::audit_valued(set, k, c.m, vs)));
            };
        });
    }

    std::function<void(CLI::App*)> allow_global_flags = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* s : a->get_subcommands(std::function<bool(CLI::App*)>{}))
            allow_global_flags(s);
    };
    allow_global_flags(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        if (!action) {
            std::cerr << "no action selected\n";
            return 64;
        }
        return action();
    } catch (const cwr::SchemaError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const cwr::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    } catch (const cwr::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
