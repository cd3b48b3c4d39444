#include "cwr/lang.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <utility>

#include "cwr/errors.hpp"

namespace cwr {

namespace {

// ---------------------------------------------------------------- parsing

struct Tok {
    enum Kind { lp, rp, atom, str } kind;
    std::string text;
};

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::lp, "("});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::rp, ")"});
            ++i;
        } else if (c == '"') {
            size_t j = s.find('"', i + 1);
            if (j == std::string::npos) throw ParseError("unterminated string literal");
            out.push_back({Tok::str, s.substr(i + 1, j - i - 1)});
            i = j + 1;
        } else {
            size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
                   s[j] != '(' && s[j] != ')' && s[j] != '"')
                ++j;
            out.push_back({Tok::atom, s.substr(i, j - i)});
            i = j;
        }
    }
    return out;
}

struct Node {
    bool leaf = true;
    bool quoted = false;
    std::string text;
    std::vector<Node> kids;
};

Node read_node(const std::vector<Tok>& toks, size_t& pos) {
    if (pos >= toks.size()) throw ParseError("unexpected end of input");
    const Tok& t = toks[pos];
    if (t.kind == Tok::rp) throw ParseError("unexpected ')'");
    if (t.kind == Tok::atom || t.kind == Tok::str) {
        ++pos;
        return Node{true, t.kind == Tok::str, t.text, {}};
    }
    ++pos;
    Node n;
    n.leaf = false;
    while (pos < toks.size() && toks[pos].kind != Tok::rp)
        n.kids.push_back(read_node(toks, pos));
    if (pos >= toks.size()) throw ParseError("missing ')'");
    ++pos;
    return n;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

const std::set<std::string>& constants() {
    static const std::set<std::string> c = {"0A", "1A", "pA", "0k", "1k", "0G",
                                            "1G", "infG", "0K", "1K", "pK",
                                            "true", "false"};
    return c;
}

bool is_quantifier(const std::string& s) {
    return s == "forall" || s == "exists" || s == "all" || s == "ex";
}

Term build(const Node& n) {
    if (n.leaf) {
        if (n.quoted) throw ParseError("string literal outside fe/wv/iv");
        if (is_quantifier(n.text))
            throw ParseError("quantifiers are outside the quantifier-free fragment");
        if (constants().count(n.text)) return Term{n.text, {}, "", {}};
        if (is_integer(n.text)) return Term{"gamma", {}, n.text, {}};
        return Term{"var", {}, n.text, {}};
    }
    if (n.kids.empty()) throw ParseError("empty list");
    const Node& h = n.kids[0];
    if (!h.leaf || h.quoted) throw ParseError("list head must be a symbol");
    const std::string& head = h.text;
    const size_t argc = n.kids.size() - 1;
    auto leaf_arg = [&](size_t i) -> const std::string& {
        const Node& a = n.kids[i + 1];
        if (!a.leaf) throw ParseError(head + ": expected a literal argument");
        if (a.quoted) throw ParseError(head + ": unexpected string literal");
        return a.text;
    };
    auto quoted_arg = [&](size_t i) -> const std::string& {
        const Node& a = n.kids[i + 1];
        if (!a.leaf || !a.quoted)
            throw ParseError(head + ": expected a quoted string literal");
        return a.text;
    };
    if (is_quantifier(head))
        throw ParseError("quantifiers are outside the quantifier-free fragment");
    if (head == "fe") {
        if (argc != 1) throw ParseError("fe takes one literal");
        return Term{"fe", {}, quoted_arg(0), {}};
    }
    if (head == "wv") {
        if (argc == 0) throw ParseError("wv needs at least one digit");
        Term t{"wv", {}, "", {}};
        for (size_t i = 0; i < argc; ++i) t.texts.push_back(quoted_arg(i));
        return t;
    }
    if (head == "iv") {
        if (argc < 2) throw ParseError("iv needs a valuation and at least one digit");
        if (!is_integer(leaf_arg(0))) throw ParseError("iv: valuation must be an integer");
        Term t{"iv", {}, leaf_arg(0), {}};
        for (size_t i = 1; i < argc; ++i) t.texts.push_back(quoted_arg(i));
        return t;
    }
    if (head == "gamma") {
        if (argc != 1 || !is_integer(leaf_arg(0)))
            throw ParseError("gamma takes one integer");
        return Term{"gamma", {}, leaf_arg(0), {}};
    }
    if (head == "var") {
        if (argc != 1) throw ParseError("var takes one name");
        const std::string& nm = leaf_arg(0);
        if (nm.empty() || constants().count(nm) || is_integer(nm) || is_quantifier(nm))
            throw ParseError("var: invalid name '" + nm + "'");
        return Term{"var", {}, nm, {}};
    }
    if (head == "resn" || head == "ac") {
        if (argc != 2) throw ParseError(head + " takes a level and a term");
        const std::string& lv = leaf_arg(0);
        if (!is_integer(lv) || lv[0] == '-')
            throw ParseError(head + ": level must be a nonnegative integer");
        Term t{head, {}, lv, {}};
        t.args.push_back(build(n.kids[2]));
        return t;
    }
    auto sub = [&](size_t lo) {
        std::vector<Term> args;
        for (size_t i = lo; i < n.kids.size(); ++i) args.push_back(build(n.kids[i]));
        return args;
    };
    if (head == "S") {
        if (argc < 2) throw ParseError("S takes ring arguments and a field argument");
        return Term{"S", sub(1), "", {}};
    }
    if (head == "theta") {
        if (argc < 1) throw ParseError("theta needs at least one argument");
        return Term{"theta", sub(1), "", {}};
    }
    if (head == "+" || head == "-" || head == "*" || head == "div" ||
        head == "=" || head == "le") {
        if (argc != 2) throw ParseError(head + " takes two arguments");
        return Term{head, sub(1), "", {}};
    }
    if (head == "and" || head == "or") {
        if (argc < 2) throw ParseError(head + " takes at least two arguments");
        return Term{head, sub(1), "", {}};
    }
    if (head == "neg" || head == "inv" || head == "res" || head == "v" ||
        head == "not") {
        if (argc != 1) throw ParseError(head + " takes one argument");
        return Term{head, sub(1), "", {}};
    }
    throw ParseError("unknown head '" + head + "'");
}

// ---------------------------------------------------------------- rendering

std::string render_wv(const WittVector& x) {
    std::string s = "(";
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (i) s += ",";
        s += x.a[i].to_string();
    }
    return s + ")";
}

std::string render_valued(const ValuedElement& x) {
    if (x.zero) return "0";
    return "p^" + std::to_string(x.val) + "*" + render_wv(x.unit);
}

std::string render_value(const Value& v) {
    if (std::holds_alternative<WittVector>(v)) return render_wv(std::get<WittVector>(v));
    if (std::holds_alternative<FieldElem>(v)) return std::get<FieldElem>(v).to_string();
    if (std::holds_alternative<GammaValue>(v)) {
        const auto& g = std::get<GammaValue>(v);
        return g.inf ? "inf" : std::to_string(g.v);
    }
    return render_valued(std::get<ValuedElement>(v));
}

std::string render_tuple(const std::vector<WittVector>& b) {
    std::string s = "[";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += " ";
        s += render_wv(b[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------- evaluation

const FieldPtr& bfield(const StructureBinding& b) {
    if (b.model) return b.model->k;
    if (b.vfield) return b.vfield;
    throw SortError("no carrier bound");
}

const CohenRingModel& bmodel(const StructureBinding& b, const char* who) {
    if (!b.model) throw SortError(std::string(who) + " needs a bound ring model");
    return *b.model;
}

const WittVector& as_ring(const Value& v, const char* who) {
    if (!std::holds_alternative<WittVector>(v))
        throw SortError(std::string(who) + ": expected a ring value");
    return std::get<WittVector>(v);
}

const FieldElem& as_field(const Value& v, const char* who) {
    if (!std::holds_alternative<FieldElem>(v))
        throw SortError(std::string(who) + ": expected a field value");
    return std::get<FieldElem>(v);
}

bool values_equal(const Value& x, const Value& y) {
    if (x.index() != y.index()) throw SortError("=: mixed sorts");
    if (std::holds_alternative<WittVector>(x))
        return std::get<WittVector>(x) == std::get<WittVector>(y);
    if (std::holds_alternative<FieldElem>(x))
        return std::get<FieldElem>(x) == std::get<FieldElem>(y);
    if (std::holds_alternative<GammaValue>(x))
        return std::get<GammaValue>(x) == std::get<GammaValue>(y);
    return std::get<ValuedElement>(x) == std::get<ValuedElement>(y);
}

bool default_theta(const std::vector<WittVector>& b) {
    if (b.empty()) throw SortError("theta: empty tuple");
    std::vector<FieldElem> res;
    res.reserve(b.size());
    for (const auto& x : b) res.push_back(x.a[0]);
    return is_p_independent(b[0].k, res);
}

ValuedElement valued_one(const FieldPtr& k, u32 precision) {
    return make_valued(0, witt_one(k, precision));
}

EvalResult ev(const StructureBinding& b, const Term& t, const Assignment& asg) {
    const std::string& h = t.head;
    if (h == "var") {
        auto it = asg.find(t.text);
        if (it == asg.end()) throw UnboundVariable(t.text);
        return {it->second, false};
    }
    if (h == "fe") return {parse_field_elem(bfield(b), t.text), false};
    if (h == "wv") {
        const FieldPtr& k = bfield(b);
        std::vector<FieldElem> digits;
        digits.reserve(t.texts.size());
        for (const auto& s : t.texts) digits.push_back(parse_field_elem(k, s));
        return {witt_from_digits(k, std::move(digits)), false};
    }
    if (h == "iv") {
        if (!b.vfield) throw SortError("iv needs a bound valued structure");
        std::vector<FieldElem> digits;
        digits.reserve(t.texts.size());
        for (const auto& s : t.texts) digits.push_back(parse_field_elem(b.vfield, s));
        return {make_valued(std::stoll(t.text), witt_from_digits(b.vfield, std::move(digits))),
                false};
    }
    if (h == "gamma") return {GammaValue{false, std::stoll(t.text)}, false};
    if (h == "0A") return {witt_zero(bmodel(b, "0A").k, bmodel(b, "0A").m), false};
    if (h == "1A") return {witt_one(bmodel(b, "1A").k, bmodel(b, "1A").m), false};
    if (h == "pA") {
        const auto& m = bmodel(b, "pA");
        return {witt_times_p(witt_one(m.k, m.m)), false};
    }
    if (h == "0k") return {FieldElem::zero(bfield(b)), false};
    if (h == "1k") return {FieldElem::one(bfield(b)), false};
    if (h == "0G") return {GammaValue{false, 0}, false};
    if (h == "1G") return {GammaValue{false, 1}, false};
    if (h == "infG") return {GammaValue{true, 0}, false};
    if (h == "0K" || h == "1K" || h == "pK") {
        if (!b.vfield) throw SortError(h + " needs a bound valued structure");
        if (h == "0K") return {valued_zero(b.vfield, b.vprecision), false};
        if (h == "1K") return {valued_one(b.vfield, b.vprecision), false};
        return {make_valued(1, witt_one(b.vfield, b.vprecision)), false};
    }
    if (h == "+" || h == "-" || h == "*" || h == "div") {
        EvalResult xl = ev(b, t.args[0], asg);
        EvalResult xr = ev(b, t.args[1], asg);
        bool fl = xl.flagged || xr.flagged;
        if (xl.value.index() != xr.value.index()) throw SortError(h + ": mixed sorts");
        if (std::holds_alternative<WittVector>(xl.value)) {
            const auto& x = std::get<WittVector>(xl.value);
            const auto& y = std::get<WittVector>(xr.value);
            if (h == "+") return {witt_add(x, y), fl};
            if (h == "-") return {witt_sub(x, y), fl};
            if (h == "*") return {witt_mul(x, y), fl};
            throw SortError("div: not defined on the ring sort");
        }
        if (std::holds_alternative<FieldElem>(xl.value)) {
            const auto& x = std::get<FieldElem>(xl.value);
            const auto& y = std::get<FieldElem>(xr.value);
            if (h == "+") return {x + y, fl};
            if (h == "-") return {x - y, fl};
            if (h == "*") return {x * y, fl};
            if (y.is_zero()) return {FieldElem::zero(x.field()), true};
            return {x / y, fl};
        }
        if (std::holds_alternative<GammaValue>(xl.value)) {
            GammaValue x = std::get<GammaValue>(xl.value);
            GammaValue y = std::get<GammaValue>(xr.value);
            if (h == "*" || h == "div")
                throw SortError(h + ": the value group is additive");
            if (h == "-") {
                if (y.inf) return {GammaValue{false, 0}, true};
                y.v = -y.v;
            }
            if (x.inf || y.inf) return {GammaValue{true, 0}, fl};
            return {GammaValue{false, x.v + y.v}, fl};
        }
        const auto& x = std::get<ValuedElement>(xl.value);
        const auto& y = std::get<ValuedElement>(xr.value);
        if (h == "+") return {vadd(x, y), fl};
        if (h == "-") return {vsub(x, y), fl};
        if (h == "*") return {vmul(x, y), fl};
        if (y.zero) return {valued_zero(x.k, std::min(x.precision, y.precision)), true};
        return {vdiv(x, y), fl};
    }
    if (h == "neg") {
        EvalResult r = ev(b, t.args[0], asg);
        if (std::holds_alternative<WittVector>(r.value))
            return {witt_neg(std::get<WittVector>(r.value)), r.flagged};
        if (std::holds_alternative<FieldElem>(r.value))
            return {-std::get<FieldElem>(r.value), r.flagged};
        if (std::holds_alternative<GammaValue>(r.value)) {
            const auto& g = std::get<GammaValue>(r.value);
            if (g.inf) return {GammaValue{false, 0}, true};
            return {GammaValue{false, -g.v}, r.flagged};
        }
        return {vneg(std::get<ValuedElement>(r.value)), r.flagged};
    }
    if (h == "inv") {
        EvalResult r = ev(b, t.args[0], asg);
        if (std::holds_alternative<FieldElem>(r.value)) {
            const auto& x = std::get<FieldElem>(r.value);
            if (x.is_zero()) return {x, true};
            return {field_inv(x), r.flagged};
        }
        if (std::holds_alternative<ValuedElement>(r.value)) {
            const auto& x = std::get<ValuedElement>(r.value);
            if (x.zero) return {x, true};
            return {vdiv(valued_one(x.k, x.precision), x), r.flagged};
        }
        throw SortError("inv: defined on field sorts only");
    }
    if (h == "res") {
        EvalResult r = ev(b, t.args[0], asg);
        return {as_ring(r.value, "res").a[0], r.flagged};
    }
    if (h == "resn" || h == "ac") {
        EvalResult r = ev(b, t.args[0], asg);
        if (!std::holds_alternative<ValuedElement>(r.value))
            throw SortError(h + ": expected a valued argument");
        const auto& x = std::get<ValuedElement>(r.value);
        const u32 n = static_cast<u32>(std::stoul(t.text));
        if (h == "ac") return {ac_n(x, n), r.flagged};
        auto rn = residue_n(x, n);
        if (!rn) return {witt_zero(x.k, n), true};
        return {*rn, r.flagged};
    }
    if (h == "v") {
        EvalResult r = ev(b, t.args[0], asg);
        if (!std::holds_alternative<ValuedElement>(r.value))
            throw SortError("v: expected a valued argument");
        const auto& x = std::get<ValuedElement>(r.value);
        if (x.zero) return {GammaValue{true, 0}, r.flagged};
        return {GammaValue{false, x.val}, r.flagged};
    }
    if (h == "S") {
        const auto& m = bmodel(b, "S");
        bool fl = false;
        std::vector<WittVector> tuple;
        tuple.reserve(t.args.size() - 1);
        for (size_t i = 0; i + 1 < t.args.size(); ++i) {
            EvalResult r = ev(b, t.args[i], asg);
            fl = fl || r.flagged;
            tuple.push_back(as_ring(r.value, "S"));
        }
        EvalResult ra = ev(b, t.args.back(), asg);
        fl = fl || ra.flagged;
        const FieldElem& alpha = as_field(ra.value, "S");
        SpanRep rep = b.s_hook ? b.s_hook(tuple, alpha)
                               : lambda_rep_wrt(m.k, m.m, tuple, alpha);
        if (rep.status != SpanStatus::ok) return {witt_zero(m.k, m.m), true};
        return {rep.value, fl};
    }
    throw SortError("'" + h + "' is not a term");
}

}  // namespace

Term parse_term(const std::string& src) {
    std::vector<Tok> toks = lex(src);
    size_t pos = 0;
    if (toks.empty()) throw ParseError("empty input");
    Node n = read_node(toks, pos);
    if (pos != toks.size()) throw ParseError("trailing input after term");
    return build(n);
}

std::string to_string(const Term& t) {
    const std::string& h = t.head;
    if (h == "var" || h == "gamma") return t.text;
    if (t.args.empty() && t.text.empty() && t.texts.empty()) return h;
    std::ostringstream o;
    o << "(" << h;
    if (h == "fe") {
        o << " \"" << t.text << "\"";
    } else if (h == "wv" || h == "iv") {
        if (h == "iv") o << " " << t.text;
        for (const auto& s : t.texts) o << " \"" << s << "\"";
    } else {
        if (!t.text.empty()) o << " " << t.text;
        for (const auto& a : t.args) o << " " << to_string(a);
    }
    o << ")";
    return o.str();
}

StructureBinding bind_model(const CohenRingModel& m) {
    StructureBinding b;
    b.model = m;
    return b;
}

StructureBinding bind_valued(const FieldPtr& k, u32 precision) {
    if (!k) throw ModelMismatch("bind_valued: null field");
    if (precision == 0) throw LevelError("bind_valued: precision must be positive");
    StructureBinding b;
    b.vfield = k;
    b.vprecision = precision;
    return b;
}

EvalResult eval_term(const StructureBinding& b, const Term& t, const Assignment& asg) {
    return ev(b, t, asg);
}

QfResult eval_qf(const StructureBinding& b, const Term& f, const Assignment& asg) {
    const std::string& h = f.head;
    if (h == "true") return {true, false};
    if (h == "false") return {false, false};
    if (h == "not") {
        QfResult r = eval_qf(b, f.args[0], asg);
        return {!r.truth, r.flagged};
    }
    if (h == "and" || h == "or") {
        bool acc = h == "and";
        bool fl = false;
        for (const auto& a : f.args) {
            QfResult r = eval_qf(b, a, asg);
            fl = fl || r.flagged;
            acc = h == "and" ? (acc && r.truth) : (acc || r.truth);
        }
        return {acc, fl};
    }
    if (h == "=") {
        EvalResult xl = ev(b, f.args[0], asg);
        EvalResult xr = ev(b, f.args[1], asg);
        return {values_equal(xl.value, xr.value), xl.flagged || xr.flagged};
    }
    if (h == "le") {
        EvalResult xl = ev(b, f.args[0], asg);
        EvalResult xr = ev(b, f.args[1], asg);
        if (!std::holds_alternative<GammaValue>(xl.value) ||
            !std::holds_alternative<GammaValue>(xr.value))
            throw SortError("le: expected value-group arguments");
        const auto& x = std::get<GammaValue>(xl.value);
        const auto& y = std::get<GammaValue>(xr.value);
        bool truth = y.inf || (!x.inf && x.v <= y.v);
        return {truth, xl.flagged || xr.flagged};
    }
    if (h == "theta") {
        bool fl = false;
        std::vector<WittVector> tuple;
        tuple.reserve(f.args.size());
        for (const auto& a : f.args) {
            EvalResult r = ev(b, a, asg);
            fl = fl || r.flagged;
            tuple.push_back(as_ring(r.value, "theta"));
        }
        bool truth = b.theta_hook ? b.theta_hook(tuple) : default_theta(tuple);
        return {truth, fl};
    }
    throw SortError("'" + h + "' is not a formula");
}

// ---------------------------------------------------------------- audits

namespace {

struct Auditor {
    AuditReport rep;

    AxiomResult& begin(const std::string& name) {
        rep.axioms.push_back(AxiomResult{name, true, true, 0, ""});
        return rep.axioms.back();
    }
    void unauditable(const std::string& name, const std::string& why) {
        rep.axioms.push_back(AxiomResult{name, false, true, 0, why});
    }
    static void check(AxiomResult& ax, bool ok, const std::string& witness) {
        if (!ax.passed) return;
        ++ax.checked;
        if (!ok) {
            ax.passed = false;
            ax.witness = witness;
        }
    }
};

}  // namespace

bool AuditReport::all_passed() const {
    for (const auto& ax : axioms)
        if (ax.auditable && !ax.passed) return false;
    return true;
}

AuditReport audit_t2(const StructureBinding& b,
                     const std::vector<WittVector>& ring_samples,
                     const std::vector<FieldElem>& field_samples,
                     const std::vector<EnrichmentSample>& s_samples) {
    if (!b.model) throw ModelMismatch("audit_t2: no ring model bound");
    const CohenRingModel& M = *b.model;
    const FieldPtr& k = M.k;
    const u32 m = M.m;
    const WittVector one = witt_one(k, m);
    Auditor A;

    {
        auto& ax = A.begin("1-local-ring-maximal-ideal-p");
        for (const auto& x : ring_samples) {
            bool ok = is_member(M, x);
            if (ok) {
                if (!x.a[0].is_zero()) {
                    auto inv = witt_inverse(x);
                    ok = inv && witt_mul(x, *inv) == one && is_member(M, *inv);
                } else if (m > 1) {
                    auto q = witt_div_by_p(x);
                    ok = q && is_member(truncate_model(M, m - 1), *q);
                } else {
                    ok = x.is_zero();
                }
            }
            Auditor::check(ax, ok, render_wv(x));
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("2-residue-field-section");
        for (const auto& alpha : field_samples) {
            bool ok = true;
            try {
                WittVector s = lambda_representative(M, alpha);
                ok = s.a[0] == alpha && is_member(M, s);
            } catch (const NotInSpan&) {
                ok = false;
            }
            if (ok && !alpha.is_zero()) ok = alpha * field_inv(alpha) == FieldElem::one(k);
            Auditor::check(ax, ok, alpha.to_string());
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("3-res-epimorphism");
        Auditor::check(ax, one.a[0] == FieldElem::one(k), "res(1) != 1");
        for (size_t i = 0; i + 1 < ring_samples.size(); i += 2) {
            const auto& x = ring_samples[i];
            const auto& y = ring_samples[i + 1];
            bool ok = witt_add(x, y).a[0] == x.a[0] + y.a[0] &&
                      witt_mul(x, y).a[0] == x.a[0] * y.a[0];
            Auditor::check(ax, ok, render_wv(x) + " " + render_wv(y));
            if (!ax.passed) break;
        }
    }
    A.unauditable("4-residue-field-elementary-class",
                  "needs elementary equivalence of residue fields");
    {
        auto& ax = A.begin("5-characteristic");
        Auditor::check(ax, witt_times_p_pow(one, m).is_zero(), "p^n != 0");
        Auditor::check(ax, !witt_times_p_pow(one, m - 1).is_zero(), "p^(n-1) == 0");
    }
    {
        auto& ax = A.begin("6-theta-p-independence");
        for (const auto& s : s_samples) {
            bool ground, got;
            try {
                ground = default_theta(s.b);
                got = b.theta_hook ? b.theta_hook(s.b) : ground;
            } catch (const Error&) {
                Auditor::check(ax, false, render_tuple(s.b));
                break;
            }
            Auditor::check(ax, got == ground, render_tuple(s.b));
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("7-S-lambda-representatives");
        for (const auto& s : s_samples) {
            bool ok = true;
            std::string wit = render_tuple(s.b) + " ; " + s.alpha.to_string();
            try {
                SpanRep ground = lambda_rep_wrt(k, m, s.b, s.alpha);
                SpanRep got = b.s_hook ? b.s_hook(s.b, s.alpha) : ground;
                ok = got.status == ground.status &&
                     (ground.status != SpanStatus::ok || got.value == ground.value);
            } catch (const Error&) {
                ok = false;
            }
            Auditor::check(ax, ok, wit);
            if (!ax.passed) break;
        }
    }
    return A.rep;
}

namespace {

void audit_ac_items(Auditor& A, const FieldPtr& k, u32 M,
                    const std::vector<ValuedElement>& samples) {
    {
        auto& ax = A.begin("ac-1-zero-detection");
        for (const auto& x : samples) {
            const u32 top = x.zero ? M : x.precision;
            bool ok = true;
            for (u32 n = 1; n <= top && ok; ++n) ok = ac_n(x, n).is_zero() == x.zero;
            Auditor::check(ax, ok, render_valued(x));
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("ac-2-multiplicative");
        for (size_t i = 0; i + 1 < samples.size(); i += 2) {
            const auto& x = samples[i];
            const auto& y = samples[i + 1];
            ValuedElement z = vmul(x, y);
            const u32 top = std::min(std::min(x.zero ? M : x.precision,
                                              y.zero ? M : y.precision),
                                     z.zero ? M : z.precision);
            bool ok = true;
            for (u32 n = 1; n <= top && ok; ++n)
                ok = ac_n(z, n) == witt_mul(ac_n(x, n), ac_n(y, n));
            Auditor::check(ax, ok, render_valued(x) + " ; " + render_valued(y));
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("ac-3-residue-on-units");
        for (const auto& x : samples) {
            if (x.zero || x.val != 0) continue;
            bool ok = true;
            for (u32 n = 1; n <= x.precision && ok; ++n) {
                auto rn = residue_n(x, n);
                ok = rn && ac_n(x, n) == *rn;
            }
            Auditor::check(ax, ok, render_valued(x));
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("ac-4-system-compatibility");
        for (const auto& x : samples) {
            const u32 top = x.zero ? M : x.precision;
            bool ok = true;
            for (u32 n = 2; n <= top && ok; ++n)
                for (u32 l = 1; l < n && ok; ++l)
                    ok = witt_truncate(ac_n(x, n), l) == ac_n(x, l);
            Auditor::check(ax, ok, render_valued(x));
            if (!ax.passed) break;
        }
    }
}

}  // namespace

AuditReport audit_valued(ValuedAxiomSet which, const FieldPtr& k, u32 precision,
                         const std::vector<ValuedElement>& samples) {
    if (!k) throw ModelMismatch("audit_valued: null field");
    if (precision == 0) throw LevelError("audit_valued: precision must be positive");
    const u32 M = precision;
    for (const auto& x : samples) require_same_field(k, x.k, "audit_valued");
    Auditor A;

    if (which == ValuedAxiomSet::ac_axioms) {
        audit_ac_items(A, k, M, samples);
        return A.rep;
    }

    const ValuedElement one = valued_one(k, M);
    const ValuedElement pk = make_valued(1, witt_one(k, M));

    {
        auto& ax = A.begin("1-characteristic-zero");
        ValuedElement x = one;
        for (u32 j = 0; j <= M + 1; ++j) {
            Auditor::check(ax, !x.zero && x.val == static_cast<long long>(j),
                           "p^" + std::to_string(j));
            if (!ax.passed) break;
            x = vmul(x, pk);
        }
    }
    std::vector<long long> gammas = {-2, -1, 0, 1, 2};
    for (const auto& x : samples)
        if (!x.zero) gammas.push_back(x.val);
    {
        auto& ax = A.begin("2-value-group");
        for (size_t i = 0; i + 2 < gammas.size(); ++i) {
            long long g = gammas[i], d = gammas[i + 1], e = gammas[i + 2];
            bool ok = (g + d) + e == g + (d + e) && g + d == d + g && g + 0 == g &&
                      g + (-g) == 0 && (g <= d) == (g + e <= d + e) &&
                      (g <= d || d <= g);
            Auditor::check(ax, ok, std::to_string(g) + "," + std::to_string(d));
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("3-valuation-laws");
        for (long long g : gammas) {
            ValuedElement x = make_valued(g, witt_one(k, M));
            Auditor::check(ax, !x.zero && x.val == g, "surjectivity at " + std::to_string(g));
            if (!ax.passed) break;
        }
        for (size_t i = 0; ax.passed && i + 1 < samples.size(); i += 2) {
            const auto& x = samples[i];
            const auto& y = samples[i + 1];
            const std::string wit = render_valued(x) + " ; " + render_valued(y);
            ValuedElement pr = vmul(x, y);
            bool ok = pr.zero == (x.zero || y.zero) &&
                      (pr.zero || pr.val == x.val + y.val);
            Auditor::check(ax, ok, wit);
            if (!ax.passed) break;
            try {
                ValuedElement s = vadd(x, y);
                if (x.zero || y.zero) {
                    ok = s.zero == (x.zero && y.zero);
                } else if (s.zero) {
                    ok = true;
                } else {
                    ok = s.val >= std::min(x.val, y.val);
                    if (x.val != y.val) ok = ok && s.val == std::min(x.val, y.val);
                }
            } catch (const PrecisionExhausted&) {
                continue;
            }
            Auditor::check(ax, ok, wit);
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("4-valuation-ring-maximal-ideal");
        for (const auto& x : samples) {
            if (x.zero) continue;
            bool ok = true;
            std::string wit = render_valued(x);
            if (x.val == 0) {
                ValuedElement i = vdiv(valued_one(k, x.precision), x);
                ok = !i.zero && i.val == 0;
            } else if (x.val >= 1) {
                ValuedElement y = vdiv(x, pk);
                ok = !y.zero && y.val == x.val - 1 && y.val >= 0;
            }
            Auditor::check(ax, ok, wit);
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("5-residue-rings");
        for (size_t i = 0; i + 1 < samples.size(); i += 2) {
            const auto& x = samples[i];
            const auto& y = samples[i + 1];
            if ((!x.zero && x.val < 0) || (!y.zero && y.val < 0)) continue;
            const std::string wit = render_valued(x) + " ; " + render_valued(y);
            bool ok = true;
            for (u32 n = 1; n <= M && ok; ++n) {
                std::optional<WittVector> rx, ry;
                try {
                    rx = residue_n(x, n);
                    ry = residue_n(y, n);
                } catch (const PrecisionError&) {
                    break;
                }
                if (!rx || !ry) {
                    ok = false;
                    break;
                }
                ok = rx->is_zero() == (x.zero || x.val >= static_cast<long long>(n));
                if (!ok) break;
                try {
                    auto rs = residue_n(vadd(x, y), n);
                    ok = rs && *rs == witt_add(*rx, *ry);
                } catch (const PrecisionExhausted&) {
                } catch (const PrecisionError&) {
                }
                if (!ok) break;
                try {
                    auto rp = residue_n(vmul(x, y), n);
                    ok = rp && *rp == witt_mul(*rx, *ry);
                } catch (const PrecisionError&) {
                }
            }
            Auditor::check(ax, ok, wit);
            if (!ax.passed) break;
        }
    }
    {
        auto& ax = A.begin("6-residue-system");
        for (const auto& x : samples) {
            if (!x.zero && x.val < 0) continue;
            bool ok = true;
            for (u32 n = 2; n <= M && ok; ++n) {
                std::optional<WittVector> rn;
                try {
                    rn = residue_n(x, n);
                } catch (const PrecisionError&) {
                    break;
                }
                for (u32 l = 1; l < n && ok; ++l) {
                    auto rl = residue_n(x, l);
                    ok = rn && rl && witt_truncate(*rn, l) == *rl;
                }
            }
            Auditor::check(ax, ok, render_valued(x));
            if (!ax.passed) break;
        }
    }
    audit_ac_items(A, k, M, samples);
    {
        auto& ax = A.begin("10-residue-pair-models-T2");
        std::vector<WittVector> rs;
        std::vector<FieldElem> fs;
        for (const auto& x : samples) {
            if (!x.zero && (x.val < 0 || x.precision < M)) continue;
            try {
                auto r = residue_n(x, M);
                if (!r) continue;
                rs.push_back(*r);
                if (!r->a[0].is_zero()) fs.push_back(r->a[0]);
            } catch (const PrecisionError&) {
            }
        }
        fs.push_back(FieldElem::one(k));
        AuditReport sub = audit_t2(bind_model(make_model(k, M)), rs, fs, {});
        std::string failing;
        for (const auto& s : sub.axioms)
            if (s.auditable && !s.passed) failing = s.axiom + ": " + s.witness;
        Auditor::check(ax, sub.all_passed(), failing);
    }
    A.unauditable("VIII-residue-field-elementary-class",
                  "needs elementary equivalence of residue fields");
    A.unauditable("IX-value-group-elementary-class",
                  "needs elementary equivalence of ordered abelian groups");
    return A.rep;
}

PreservationReport check_morphism_preserves_qf(const CohenMorphism& phi,
                                               const std::vector<Term>& formulas,
                                               const std::vector<Assignment>& assignments) {
    StructureBinding src = bind_model(phi.source);
    StructureBinding dst = bind_model(phi.target);
    PreservationReport rep;
    for (size_t ai = 0; ai < assignments.size(); ++ai) {
        Assignment mapped;
        for (const auto& [name, val] : assignments[ai]) {
            if (std::holds_alternative<WittVector>(val))
                mapped[name] = apply(phi, std::get<WittVector>(val));
            else if (std::holds_alternative<FieldElem>(val))
                mapped[name] = apply(phi.residue_map, std::get<FieldElem>(val));
            else
                throw SortError("only ring and field values can be transported");
        }
        for (size_t fi = 0; fi < formulas.size(); ++fi) {
            QfResult s = eval_qf(src, formulas[fi], assignments[ai]);
            QfResult t = eval_qf(dst, formulas[fi], mapped);
            ++rep.checked;
            if (s.flagged || t.flagged) ++rep.flagged;
            if (s.truth != t.truth) rep.mismatches.emplace_back(fi, ai);
        }
    }
    return rep;
}

std::vector<Term> l2_battery() {
    static const char* fml[] = {
        "(= (+ x y) (+ y x))",
        "(= (* x y) (* y x))",
        "(= (* x (+ y z)) (+ (* x y) (* x z)))",
        "(= (+ (+ x y) z) (+ x (+ y z)))",
        "(= (+ x 0A) x)",
        "(= (* x 1A) x)",
        "(= (+ x (neg x)) 0A)",
        "(= (res (+ x y)) (+ (res x) (res y)))",
        "(= (res (* x y)) (* (res x) (res y)))",
        "(= (res 1A) 1k)",
        "(= (res (* pA x)) 0k)",
        "(not (= 1A 0A))",
        "(= x y)",
        "(= (res x) a)",
        "(= (* x x) y)",
        "(not (= x 0A))",
        "(= (- x y) pA)",
        "(or (= x y) (= (res x) a))",
        "(and (not (= x 0A)) (= (res (+ x y)) (+ a b)))",
        "(= (res (* x y)) (* a b))",
    };
    std::vector<Term> out;
    out.reserve(20);
    for (const char* f : fml) out.push_back(parse_term(f));
    return out;
}

}  // namespace cwr
