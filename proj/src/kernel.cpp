#include "gd/kernel.hpp"

#include <algorithm>
#include <cassert>

namespace gd {

namespace {

const std::vector<std::string>& rule_names() {
    static const std::vector<std::string> names = {
        "trueAx", "falseAx",
        "boolI1", "boolI2", "boolE",
        "judgTI", "judgTE",
        "negIE1", "negIE2",
        "defIE",
        "andI1", "andI2", "andI3", "andE1", "andE2", "andE3",
        "orI1", "orI2", "orI3", "orE1", "orE2", "orE3",
        "andIE", "orIE", "boolIE",
        "impIE", "iffIE", "iffTE1", "iffTE2",
        "forallI1", "forallI2", "forallE1", "forallE2",
        "existsI1", "existsI2", "existsE1", "existsE2",
        "forallIE", "existsIE", "forallTI", "existsTI",
        "eqR", "eqS", "eqT", "eqE", "eqTI", "eqTE1", "eqTE2",
        "neIE", "neS", "neTI", "neTE1", "neTE2",
        "zeroI", "succIE", "succEqIE", "succNeIE", "succNeZeroI",
        "natTI", "natTE", "ind",
        "case0IE", "caseSIE", "caseE",
        "iftrueIE", "iffalseIE",
        "boolEqI", "boolTI", "boolTE",
        "dtBoolNat1", "dtBoolNat2",
    };
    return names;
}

struct Checker {
    const DefEnv& env;
    const CheckConfig& cfg;
    const CheckOptions& opts;

    Judgment check(const Context& ctx, const ProofPtr& p) {
        switch (p->kind) {
            case ProofKind::Hyp: {
                const Judgment* j = ctx.find(p->name);
                if (!j)
                    throw Error(ErrorCode::HypothesisNotFound, "no hypothesis labeled '" + p->name + "' in scope",
                                p->span);
                return *j;
            }
            case ProofKind::Lemma: {
                if (!opts.lemmas)
                    throw Error(ErrorCode::UnknownLemma, "no lemma table in this checking context", p->span);
                auto it = opts.lemmas->find(p->name);
                if (it == opts.lemmas->end())
                    throw Error(ErrorCode::UnknownLemma, "no proven result named '" + p->name + "'", p->span);
                if (opts.lemma_deps) opts.lemma_deps->push_back(p->name);
                return it->second;
            }
            case ProofKind::UseDef:
                throw Error(ErrorCode::PremiseShapeMismatch,
                            "(usedef ...) is only meaningful as the first premise of defIE", p->span);
            case ProofKind::Rule:
                break;
        }
        if (is_primitive_rule(p->name)) return check_rule(ctx, *p);
        if (opts.extension && opts.extension->knows(p->name))
            return opts.extension->apply(env, cfg, ctx, *p,
                                         [this](const Context& c, const ProofPtr& q) { return check(c, q); });
        throw Error(ErrorCode::UnknownRule, "unknown rule '" + p->name + "'", p->span);
    }

    // ---- helpers ----

    [[noreturn]] void fail(ErrorCode code, const ProofNode& n, int premise, const std::string& msg) {
        throw Error(code, "rule " + n.name + ": " + msg, n.span, n.name, premise);
    }

    void need_subs(const ProofNode& n, size_t count) {
        if (n.subs.size() != count)
            fail(ErrorCode::PremiseShapeMismatch, n, -1,
                 "expects " + std::to_string(count) + " premise(s), got " + std::to_string(n.subs.size()));
    }

    const Template& need_tpl(const ProofNode& n) {
        if (!n.tpl) fail(ErrorCode::PremiseShapeMismatch, n, -1, "needs a (tpl ...) instantiation");
        return *n.tpl;
    }

    TermPtr need_term(const ProofNode& n, size_t i, const char* what) {
        if (n.terms.size() <= i)
            fail(ErrorCode::PremiseShapeMismatch, n, -1, std::string("needs (terms ...) giving ") + what);
        return n.terms[i];
    }

    Judgment plain(const Context& ctx, const ProofNode& n, size_t i) {
        const SubProof& s = n.subs[i];
        if (!s.intro.empty())
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must not introduce hypotheses");
        return check(ctx, s.proof);
    }

    // Typing premises (bool/obj/nat) get the dedicated error so paradox
    // rejections are attributable; true/false premises are plain shape errors.
    Judgment expect_kind(const ProofNode& n, size_t i, const Judgment& j, JudgKind k) {
        if (j.kind != k) {
            std::string msg = "premise " + std::to_string(i) + " must be a '" + judg_kind_name(k) +
                              "' judgment, found " + print_judgment(j);
            if (k == JudgKind::Bool || k == JudgKind::Obj || k == JudgKind::Nat) {
                Error e(ErrorCode::MissingTypingPremise, "rule " + n.name + ": " + msg, n.span, n.name,
                        static_cast<int>(i));
                e.expected_kind = judg_kind_name(k);
                throw e;
            }
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i), msg);
        }
        return j;
    }

    Judgment plain_kind(const Context& ctx, const ProofNode& n, size_t i, JudgKind k) {
        return expect_kind(n, i, plain(ctx, n, i), k);
    }

    TermPtr shape(const ProofNode& n, size_t i, const Judgment& j, TermKind k, const char* what) {
        if (j.subject->kind() != k)
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must be " + what + ", found " + print_judgment(j));
        return j.subject;
    }

    void match(const ProofNode& n, size_t i, const Judgment& found, const Judgment& expected) {
        if (!judgment_eq(found, expected))
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                 "premise " + std::to_string(i) + " expected " + print_judgment(expected) + ", found " +
                     print_judgment(found));
    }

    void fresh_ok(const Context& ctx, const ProofNode& n, const std::string& v) {
        if (ctx.ephemerals.count(v))
            fail(ErrorCode::VariableEscape, n, -1, "variable '" + v + "' is already ephemeral in scope");
        for (const auto& [label, j] : ctx.hyps)
            if (free_vars(j.subject).count(v))
                fail(ErrorCode::VariableEscape, n, -1,
                     "variable '" + v + "' is not fresh: it occurs in hypothesis '" + label + "'");
    }

    void no_escape(const ProofNode& n, const std::string& v, const Judgment& concl) {
        if (free_vars(concl.subject).count(v))
            fail(ErrorCode::VariableEscape, n, -1,
                 "ephemeral variable '" + v + "' escapes into the conclusion " + print_judgment(concl));
    }

    // Checks a hypothetical premise. The declared hypotheses must match
    // `expected` (labels are the script's choice); `ephemeral`, when given, is
    // added to the subproof's scope after a freshness check.
    Judgment hypothetical(const Context& ctx, const ProofNode& n, size_t i, const std::vector<Judgment>& expected,
                          const std::optional<std::string>& ephemeral = std::nullopt) {
        const SubProof& s = n.subs[i];
        if (s.intro.size() != expected.size())
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must introduce " + std::to_string(expected.size()) +
                     " hypothesis(es), got " + std::to_string(s.intro.size()));
        Context inner = ctx;
        if (ephemeral) {
            fresh_ok(ctx, n, *ephemeral);
            inner.ephemerals.insert(*ephemeral);
        }
        for (size_t h = 0; h < expected.size(); ++h) {
            const HypBinding& b = s.intro[h];
            if (!judgment_eq(b.judgment, expected[h]))
                fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                     "premise " + std::to_string(i) + " hypothesis " + std::to_string(h) + " expected " +
                         print_judgment(expected[h]) + ", declared " + print_judgment(b.judgment));
            if (inner.has_label(b.label))
                throw Error(ErrorCode::DuplicateLabel, "rule " + n.name + ": label '" + b.label + "' already in scope",
                            n.span, n.name, static_cast<int>(i));
            inner.hyps.emplace_back(b.label, b.judgment);
        }
        return check(inner, s.proof);
    }

    // Reads the fresh variable off a declared hypothesis of the form `x : k`.
    std::string declared_var(const ProofNode& n, size_t i, size_t h, JudgKind k) {
        const SubProof& s = n.subs[i];
        if (s.intro.size() <= h)
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must declare its hypotheses");
        const Judgment& j = s.intro[h].judgment;
        if (j.kind != k || j.subject->kind() != TermKind::Var)
            fail(ErrorCode::PremiseShapeMismatch, n, static_cast<int>(i),
                 "premise " + std::to_string(i) + " hypothesis " + std::to_string(h) + " must have the form 'x : " +
                     judg_kind_name(k) + "' with x a variable, declared " + print_judgment(j));
        return j.subject->name();
    }

    // ---- the primitive catalogue ----

    Judgment check_rule(const Context& ctx, const ProofNode& n) {
        const std::string& r = n.name;

        if (r == "trueAx") { need_subs(n, 0); return judg(mk_true(), JudgKind::True); }
        if (r == "falseAx") { need_subs(n, 0); return judg(mk_false(), JudgKind::False); }

        if (r == "boolI1") {
            need_subs(n, 1);
            return judg(plain_kind(ctx, n, 0, JudgKind::True).subject, JudgKind::Bool);
        }
        if (r == "boolI2") {
            need_subs(n, 1);
            return judg(plain_kind(ctx, n, 0, JudgKind::False).subject, JudgKind::Bool);
        }
        if (r == "boolE") {
            need_subs(n, 3);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Bool);
            Judgment c1 = hypothetical(ctx, n, 1, {judg(a.subject, JudgKind::True)});
            expect_kind(n, 1, c1, JudgKind::True);
            Judgment c2 = hypothetical(ctx, n, 2, {judg(a.subject, JudgKind::False)});
            match(n, 2, c2, c1);
            return c1;
        }

        if (r == "judgTI") {
            need_subs(n, 1);
            Judgment j = plain(ctx, n, 0);
            return judg(mk_has(j.subject, j.kind), JudgKind::True);
        }
        if (r == "judgTE") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr h = shape(n, 0, j, TermKind::Has, "a judgment-as-term '(t : k) : true'");
            return judg(h->kid(0), h->judg());
        }

        if (r == "negIE1") {
            need_subs(n, 1);
            if (!n.reverse) {
                Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
                return judg(mk_not(j.subject), JudgKind::False);
            }
            Judgment j = plain_kind(ctx, n, 0, JudgKind::False);
            TermPtr t = shape(n, 0, j, TermKind::Not, "a negation");
            return judg(t->kid(0), JudgKind::True);
        }
        if (r == "negIE2") {
            need_subs(n, 1);
            if (!n.reverse) {
                Judgment j = plain_kind(ctx, n, 0, JudgKind::False);
                return judg(mk_not(j.subject), JudgKind::True);
            }
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Not, "a negation");
            return judg(t->kid(0), JudgKind::False);
        }

        if (r == "defIE") {
            need_subs(n, 2);
            const SubProof& u = n.subs[0];
            if (u.proof->kind != ProofKind::UseDef || !u.intro.empty())
                fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must be a (usedef s) leaf");
            const std::string& sym = u.proof->name;
            if (!env.defined(sym))
                throw Error(ErrorCode::NotDefined, "defIE: no definition named '" + sym + "'", n.span, n.name, 0);
            const Template& p = need_tpl(n);
            TermPtr expansion = env.expand(sym, n.args);  // checks arity
            TermPtr applied = mk_app(sym, n.args);
            Judgment main = plain_kind(ctx, n, 1, JudgKind::True);
            TermPtr from = n.reverse ? applied : expansion;
            TermPtr to = n.reverse ? expansion : applied;
            match(n, 1, main, judg(instantiate(p, from), JudgKind::True));
            return judg(instantiate(p, to), JudgKind::True);
        }

        if (r == "andI1") {
            need_subs(n, 2);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::True);
            Judgment b = plain_kind(ctx, n, 1, JudgKind::True);
            return judg(mk_and(a.subject, b.subject), JudgKind::True);
        }
        if (r == "andI2") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::False);
            return judg(mk_and(a.subject, need_term(n, 0, "the right conjunct")), JudgKind::False);
        }
        if (r == "andI3") {
            need_subs(n, 1);
            Judgment b = plain_kind(ctx, n, 0, JudgKind::False);
            return judg(mk_and(need_term(n, 0, "the left conjunct"), b.subject), JudgKind::False);
        }
        if (r == "andE1" || r == "andE2") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::And, "a conjunction");
            return judg(t->kid(r == "andE1" ? 0 : 1), JudgKind::True);
        }
        if (r == "andE3") {
            need_subs(n, 3);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::False);
            TermPtr t = shape(n, 0, j, TermKind::And, "a conjunction");
            Judgment c1 = hypothetical(ctx, n, 1, {judg(t->kid(0), JudgKind::False)});
            expect_kind(n, 1, c1, JudgKind::True);
            Judgment c2 = hypothetical(ctx, n, 2, {judg(t->kid(1), JudgKind::False)});
            match(n, 2, c2, c1);
            return c1;
        }

        if (r == "orI1") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::True);
            return judg(mk_or(a.subject, need_term(n, 0, "the right disjunct")), JudgKind::True);
        }
        if (r == "orI2") {
            need_subs(n, 1);
            Judgment b = plain_kind(ctx, n, 0, JudgKind::True);
            return judg(mk_or(need_term(n, 0, "the left disjunct"), b.subject), JudgKind::True);
        }
        if (r == "orI3") {
            need_subs(n, 2);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::False);
            Judgment b = plain_kind(ctx, n, 1, JudgKind::False);
            return judg(mk_or(a.subject, b.subject), JudgKind::False);
        }
        if (r == "orE1") {
            need_subs(n, 3);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Or, "a disjunction");
            Judgment c1 = hypothetical(ctx, n, 1, {judg(t->kid(0), JudgKind::True)});
            expect_kind(n, 1, c1, JudgKind::True);
            Judgment c2 = hypothetical(ctx, n, 2, {judg(t->kid(1), JudgKind::True)});
            match(n, 2, c2, c1);
            return c1;
        }
        if (r == "orE2" || r == "orE3") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::False);
            TermPtr t = shape(n, 0, j, TermKind::Or, "a disjunction");
            return judg(t->kid(r == "orE2" ? 0 : 1), JudgKind::False);
        }

        // De Morgan equivalences: ¬(¬p ∨ ¬q) ⇔ p ∧ q and ¬(¬p ∧ ¬q) ⇔ p ∨ q.
        if (r == "andIE" || r == "orIE") {
            need_subs(n, 1);
            bool is_and = r == "andIE";
            TermKind inner_kind = is_and ? TermKind::Or : TermKind::And;
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            if (!n.reverse) {
                TermPtr neg = shape(n, 0, j, TermKind::Not, "a negated De Morgan form");
                TermPtr in = neg->kid(0);
                if (in->kind() != inner_kind || in->kid(0)->kind() != TermKind::Not ||
                    in->kid(1)->kind() != TermKind::Not)
                    fail(ErrorCode::PremiseShapeMismatch, n, 0,
                         "premise 0 must look like not (not p " + std::string(is_and ? "or" : "and") + " not q)");
                TermPtr p = in->kid(0)->kid(0), q = in->kid(1)->kid(0);
                return judg(is_and ? mk_and(p, q) : mk_or(p, q), JudgKind::True);
            }
            TermPtr t = shape(n, 0, j, is_and ? TermKind::And : TermKind::Or, "the De Morgan image");
            TermPtr body = is_and ? mk_or(mk_not(t->kid(0)), mk_not(t->kid(1)))
                                  : mk_and(mk_not(t->kid(0)), mk_not(t->kid(1)));
            return judg(mk_not(body), JudgKind::True);
        }

        if (r == "boolIE") {
            need_subs(n, 1);
            if (!n.reverse) {
                Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
                TermPtr t = shape(n, 0, j, TermKind::Or, "p or not p");
                if (t->kid(1)->kind() != TermKind::Not || !alpha_eq(t->kid(0), t->kid(1)->kid(0)))
                    fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must look like p or not p");
                return judg(t->kid(0), JudgKind::Bool);
            }
            Judgment j = plain_kind(ctx, n, 0, JudgKind::Bool);
            return judg(mk_or(j.subject, mk_not(j.subject)), JudgKind::True);
        }

        if (r == "impIE") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            if (!n.reverse) {
                TermPtr t = shape(n, 0, j, TermKind::Or, "not p or q");
                if (t->kid(0)->kind() != TermKind::Not)
                    fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must look like not p or q");
                return judg(mk_imp(t->kid(0)->kid(0), t->kid(1)), JudgKind::True);
            }
            TermPtr t = shape(n, 0, j, TermKind::Imp, "an implication");
            return judg(mk_or(mk_not(t->kid(0)), t->kid(1)), JudgKind::True);
        }

        if (r == "iffIE") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            if (!n.reverse) {
                TermPtr t = shape(n, 0, j, TermKind::And, "(p -> q) and (q -> p)");
                if (t->kid(0)->kind() != TermKind::Imp || t->kid(1)->kind() != TermKind::Imp ||
                    !alpha_eq(t->kid(0)->kid(0), t->kid(1)->kid(1)) ||
                    !alpha_eq(t->kid(0)->kid(1), t->kid(1)->kid(0)))
                    fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must look like (p -> q) and (q -> p)");
                return judg(mk_iff(t->kid(0)->kid(0), t->kid(0)->kid(1)), JudgKind::True);
            }
            TermPtr t = shape(n, 0, j, TermKind::Iff, "a biconditional");
            return judg(mk_and(mk_imp(t->kid(0), t->kid(1)), mk_imp(t->kid(1), t->kid(0))), JudgKind::True);
        }

        // A biconditional is boolean exactly when both sides are; stated as a
        // rule because the catalogue has no elimination for a false iff.
        if (r == "iffTE1" || r == "iffTE2") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::Bool);
            TermPtr t = shape(n, 0, j, TermKind::Iff, "a biconditional");
            return judg(t->kid(r == "iffTE1" ? 0 : 1), JudgKind::Bool);
        }

        if (r == "forallI1" || r == "forallTI" || r == "existsTI") {
            need_subs(n, 1);
            JudgKind concl_kind = r == "forallI1" ? JudgKind::True : JudgKind::Bool;
            std::string x = declared_var(n, 0, 0, JudgKind::Obj);
            Judgment body = hypothetical(ctx, n, 0, {judg(mk_var(x), JudgKind::Obj)}, x);
            expect_kind(n, 0, body, concl_kind);
            TermPtr q = r == "existsTI" ? mk_exists(x, body.subject) : mk_forall(x, body.subject);
            return judg(q, concl_kind);
        }
        if (r == "forallI2") {
            need_subs(n, 2);
            const Template& p = need_tpl(n);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Obj);
            Judgment inst = plain_kind(ctx, n, 1, JudgKind::False);
            match(n, 1, inst, judg(instantiate(p, a.subject), JudgKind::False));
            return judg(mk_forall(p.hole, p.body), JudgKind::False);
        }
        if (r == "forallE1") {
            need_subs(n, 2);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Forall, "a universal");
            Judgment a = plain_kind(ctx, n, 1, JudgKind::Obj);
            return judg(subst(t->kid(0), t->name(), a.subject), JudgKind::True);
        }
        if (r == "forallE2" || r == "existsE1") {
            need_subs(n, 2);
            bool is_forall = r == "forallE2";
            Judgment j = plain_kind(ctx, n, 0, is_forall ? JudgKind::False : JudgKind::True);
            TermPtr t = shape(n, 0, j, is_forall ? TermKind::Forall : TermKind::Exists, "a quantifier");
            std::string y = declared_var(n, 1, 0, JudgKind::Obj);
            Judgment inst = judg(subst(t->kid(0), t->name(), mk_var(y)), is_forall ? JudgKind::False : JudgKind::True);
            Judgment q = hypothetical(ctx, n, 1, {judg(mk_var(y), JudgKind::Obj), inst}, y);
            expect_kind(n, 1, q, JudgKind::True);
            no_escape(n, y, q);
            return q;
        }
        if (r == "existsI1") {
            need_subs(n, 2);
            const Template& p = need_tpl(n);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Obj);
            Judgment inst = plain_kind(ctx, n, 1, JudgKind::True);
            match(n, 1, inst, judg(instantiate(p, a.subject), JudgKind::True));
            return judg(mk_exists(p.hole, p.body), JudgKind::True);
        }
        if (r == "existsI2") {
            need_subs(n, 1);
            std::string x = declared_var(n, 0, 0, JudgKind::Obj);
            Judgment body = hypothetical(ctx, n, 0, {judg(mk_var(x), JudgKind::Obj)}, x);
            expect_kind(n, 0, body, JudgKind::False);
            return judg(mk_exists(x, body.subject), JudgKind::False);
        }
        if (r == "existsE2") {
            need_subs(n, 2);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::False);
            TermPtr t = shape(n, 0, j, TermKind::Exists, "an existential");
            Judgment a = plain_kind(ctx, n, 1, JudgKind::Obj);
            return judg(subst(t->kid(0), t->name(), a.subject), JudgKind::False);
        }

        // Quantifier dualities: ¬∃x.¬p ⇔ ∀x.p and ¬∀x.¬p ⇔ ∃x.p.
        if (r == "forallIE" || r == "existsIE") {
            need_subs(n, 1);
            bool to_forall = r == "forallIE";
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            if (!n.reverse) {
                TermPtr neg = shape(n, 0, j, TermKind::Not, "a negated dual quantifier");
                TermPtr q = neg->kid(0);
                if (q->kind() != (to_forall ? TermKind::Exists : TermKind::Forall) ||
                    q->kid(0)->kind() != TermKind::Not)
                    fail(ErrorCode::PremiseShapeMismatch, n, 0,
                         std::string("premise 0 must look like not ") + (to_forall ? "exists" : "forall") +
                             " x . not p");
                TermPtr body = q->kid(0)->kid(0);
                return judg(to_forall ? mk_forall(q->name(), body) : mk_exists(q->name(), body), JudgKind::True);
            }
            TermPtr q = shape(n, 0, j, to_forall ? TermKind::Forall : TermKind::Exists, "a quantifier");
            TermPtr dual = to_forall ? mk_exists(q->name(), mk_not(q->kid(0))) : mk_forall(q->name(), mk_not(q->kid(0)));
            return judg(mk_not(dual), JudgKind::True);
        }

        if (r == "eqR") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Obj);
            return judg(mk_eq(a.subject, a.subject), JudgKind::True);
        }
        if (r == "eqS") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Eq, "an equality");
            return judg(mk_eq(t->kid(1), t->kid(0)), JudgKind::True);
        }
        if (r == "eqT") {
            need_subs(n, 2);
            Judgment j1 = plain_kind(ctx, n, 0, JudgKind::True);
            Judgment j2 = plain_kind(ctx, n, 1, JudgKind::True);
            TermPtr t1 = shape(n, 0, j1, TermKind::Eq, "an equality");
            TermPtr t2 = shape(n, 1, j2, TermKind::Eq, "an equality");
            if (!alpha_eq(t1->kid(1), t2->kid(0)))
                fail(ErrorCode::PremiseShapeMismatch, n, 1, "transitivity needs a = b and b = c with matching b");
            return judg(mk_eq(t1->kid(0), t2->kid(1)), JudgKind::True);
        }
        if (r == "eqE") {
            need_subs(n, 2);
            const Template& p = need_tpl(n);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Eq, "an equality");
            Judgment main = plain_kind(ctx, n, 1, JudgKind::True);
            TermPtr from = n.reverse ? t->kid(1) : t->kid(0);
            TermPtr to = n.reverse ? t->kid(0) : t->kid(1);
            match(n, 1, main, judg(instantiate(p, from), JudgKind::True));
            return judg(instantiate(p, to), JudgKind::True);
        }
        if (r == "eqTI" || r == "neTI") {
            need_subs(n, 2);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Obj);
            Judgment b = plain_kind(ctx, n, 1, JudgKind::Obj);
            TermPtr t = r == "eqTI" ? mk_eq(a.subject, b.subject) : mk_ne(a.subject, b.subject);
            return judg(t, JudgKind::Bool);
        }
        if (r == "eqTE1" || r == "eqTE2" || r == "neTE1" || r == "neTE2") {
            need_subs(n, 1);
            bool is_eq = r[0] == 'e';
            Judgment j = plain_kind(ctx, n, 0, JudgKind::Bool);
            TermPtr t = shape(n, 0, j, is_eq ? TermKind::Eq : TermKind::Ne, is_eq ? "an equality" : "an inequality");
            return judg(t->kid(r.back() == '1' ? 0 : 1), JudgKind::Obj);
        }
        if (r == "neIE") {
            need_subs(n, 1);
            if (!n.reverse) {
                Judgment j = plain_kind(ctx, n, 0, JudgKind::False);
                TermPtr t = shape(n, 0, j, TermKind::Eq, "an equality");
                return judg(mk_ne(t->kid(0), t->kid(1)), JudgKind::True);
            }
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Ne, "an inequality");
            return judg(mk_eq(t->kid(0), t->kid(1)), JudgKind::False);
        }
        if (r == "neS") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Ne, "an inequality");
            return judg(mk_ne(t->kid(1), t->kid(0)), JudgKind::True);
        }

        if (r == "zeroI") { need_subs(n, 0); return judg(mk_zero(), JudgKind::Nat); }
        if (r == "succIE") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::Nat);
            if (!n.reverse) return judg(mk_succ(j.subject), JudgKind::Nat);
            TermPtr t = shape(n, 0, j, TermKind::Succ, "a successor");
            return judg(t->kid(0), JudgKind::Nat);
        }
        if (r == "succEqIE" || r == "succNeIE") {
            need_subs(n, 1);
            bool is_eq = r == "succEqIE";
            TermKind k = is_eq ? TermKind::Eq : TermKind::Ne;
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, k, is_eq ? "an equality" : "an inequality");
            auto rebuild = [&](TermPtr l, TermPtr rr) { return is_eq ? mk_eq(l, rr) : mk_ne(l, rr); };
            if (!n.reverse) return judg(rebuild(mk_succ(t->kid(0)), mk_succ(t->kid(1))), JudgKind::True);
            if (t->kid(0)->kind() != TermKind::Succ || t->kid(1)->kind() != TermKind::Succ)
                fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must relate two successors");
            return judg(rebuild(t->kid(0)->kid(0), t->kid(1)->kid(0)), JudgKind::True);
        }
        if (r == "succNeZeroI") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::Nat);
            return judg(mk_ne(mk_succ(j.subject), mk_zero()), JudgKind::True);
        }
        if (r == "natTI") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Obj);
            return judg(mk_has(a.subject, JudgKind::Nat), JudgKind::Bool);
        }
        if (r == "natTE") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Nat);
            return judg(a.subject, JudgKind::Obj);
        }

        if (r == "ind") {
            need_subs(n, 3);
            const Template& p = need_tpl(n);
            Judgment base = plain_kind(ctx, n, 0, JudgKind::True);
            match(n, 0, base, judg(instantiate(p, mk_zero()), JudgKind::True));
            std::string x = declared_var(n, 1, 0, JudgKind::Nat);
            Judgment step = hypothetical(
                ctx, n, 1,
                {judg(mk_var(x), JudgKind::Nat), judg(instantiate(p, mk_var(x)), JudgKind::True)}, x);
            match(n, 1, step, judg(instantiate(p, mk_succ(mk_var(x))), JudgKind::True));
            Judgment a = plain_kind(ctx, n, 2, JudgKind::Nat);
            Judgment concl = judg(instantiate(p, a.subject), JudgKind::True);
            no_escape(n, x, concl);
            return concl;
        }

        if (r == "case0IE" || r == "caseSIE") {
            need_subs(n, 2);
            const Template& c = need_tpl(n);
            if (!n.case_term || n.case_term->kind() != TermKind::Case)
                fail(ErrorCode::PremiseShapeMismatch, n, -1, "needs (caseterm case ... of { ... })");
            TermPtr ct = n.case_term;
            Judgment cond = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr eq = shape(n, 0, cond, TermKind::Eq, "an equality");
            if (!alpha_eq(eq->kid(0), ct->kid(0)))
                fail(ErrorCode::PremiseShapeMismatch, n, 0,
                     "premise 0 must equate the scrutinee " + print_term(ct->kid(0)));
            TermPtr branch;
            if (r == "case0IE") {
                if (eq->kid(1)->kind() != TermKind::Zero)
                    fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must have the form a = 0");
                branch = ct->kid(1);
            } else {
                if (eq->kid(1)->kind() != TermKind::Succ)
                    fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must have the form a = S(p)");
                branch = subst(ct->kid(2), ct->name(), eq->kid(1)->kid(0));
            }
            Judgment main = plain_kind(ctx, n, 1, JudgKind::True);
            TermPtr from = n.reverse ? ct : branch;
            TermPtr to = n.reverse ? branch : TermPtr(ct);
            match(n, 1, main, judg(instantiate(c, from), JudgKind::True));
            return judg(instantiate(c, to), JudgKind::True);
        }

        if (r == "caseE") {
            need_subs(n, 3);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr eq = shape(n, 0, j, TermKind::Eq, "an equality b = case ...");
            TermPtr b = eq->kid(0);
            TermPtr ct = eq->kid(1);
            if (ct->kind() != TermKind::Case)
                fail(ErrorCode::PremiseShapeMismatch, n, 0, "premise 0 must equate b with a case term");
            TermPtr a = ct->kid(0);
            Judgment c1 = hypothetical(ctx, n, 1,
                                       {judg(mk_eq(a, mk_zero()), JudgKind::True),
                                        judg(mk_eq(b, ct->kid(1)), JudgKind::True)});
            expect_kind(n, 1, c1, JudgKind::True);
            // the successor branch introduces an ephemeral predecessor
            const SubProof& s2 = n.subs[2];
            if (s2.intro.size() != 2)
                fail(ErrorCode::PremiseShapeMismatch, n, 2, "premise 2 must introduce two hypotheses");
            const Judgment& d0 = s2.intro[0].judgment;
            if (d0.kind != JudgKind::True || d0.subject->kind() != TermKind::Eq ||
                d0.subject->kid(1)->kind() != TermKind::Succ ||
                d0.subject->kid(1)->kid(0)->kind() != TermKind::Var)
                fail(ErrorCode::PremiseShapeMismatch, n, 2,
                     "premise 2 hypothesis 0 must have the form '(a = S(v)) : true'");
            std::string v = d0.subject->kid(1)->kid(0)->name();
            Judgment c2 = hypothetical(ctx, n, 2,
                                       {judg(mk_eq(a, mk_succ(mk_var(v))), JudgKind::True),
                                        judg(mk_eq(b, subst(ct->kid(2), ct->name(), mk_var(v))), JudgKind::True)},
                                       v);
            no_escape(n, v, c2);
            match(n, 2, c2, c1);
            return c1;
        }

        if (r == "iftrueIE" || r == "iffalseIE") {
            need_subs(n, 2);
            bool tru = r == "iftrueIE";
            const Template& q = need_tpl(n);
            if (!n.if_term || n.if_term->kind() != TermKind::If)
                fail(ErrorCode::PremiseShapeMismatch, n, -1, "needs (ifterm if ... then ... else ...)");
            TermPtr it = n.if_term;
            Judgment cond = plain_kind(ctx, n, 0, tru ? JudgKind::True : JudgKind::False);
            if (!alpha_eq(cond.subject, it->kid(0)))
                fail(ErrorCode::PremiseShapeMismatch, n, 0,
                     "premise 0 must judge the condition " + print_term(it->kid(0)));
            TermPtr branch = it->kid(tru ? 1 : 2);
            Judgment main = plain_kind(ctx, n, 1, JudgKind::True);
            TermPtr from = n.reverse ? it : branch;
            TermPtr to = n.reverse ? branch : TermPtr(it);
            match(n, 1, main, judg(instantiate(q, from), JudgKind::True));
            return judg(instantiate(q, to), JudgKind::True);
        }

        if (r == "boolEqI") {
            need_subs(n, 1);
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr t = shape(n, 0, j, TermKind::Iff, "a biconditional");
            return judg(mk_eq(t->kid(0), t->kid(1)), JudgKind::True);
        }
        if (r == "boolTI") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Obj);
            return judg(mk_has(a.subject, JudgKind::Bool), JudgKind::Bool);
        }
        if (r == "boolTE") {
            need_subs(n, 1);
            Judgment a = plain_kind(ctx, n, 0, JudgKind::Bool);
            return judg(a.subject, JudgKind::Obj);
        }

        if (r == "dtBoolNat1" || r == "dtBoolNat2") {
            if (cfg.discipline != Discipline::DT)
                throw Error(ErrorCode::DisciplineDisabled,
                            "rule " + r + " requires the disjoint-types discipline (running under " +
                                discipline_name(cfg.discipline) + ")",
                            n.span, r);
            need_subs(n, 1);
            JudgKind from = r == "dtBoolNat1" ? JudgKind::Bool : JudgKind::Nat;
            JudgKind to = r == "dtBoolNat1" ? JudgKind::Nat : JudgKind::Bool;
            Judgment j = plain_kind(ctx, n, 0, JudgKind::True);
            TermPtr h = shape(n, 0, j, TermKind::Has, "a judgment-as-term");
            if (h->judg() != from)
                fail(ErrorCode::PremiseShapeMismatch, n, 0,
                     std::string("premise 0 must have the form '(a : ") + judg_kind_name(from) + ") : true'");
            return judg(mk_has(h->kid(0), to), JudgKind::False);
        }

        throw Error(ErrorCode::UnknownRule, "unknown rule '" + r + "'", n.span);
    }
};

}  // namespace

bool is_primitive_rule(const std::string& name) {
    const auto& v = rule_names();
    return std::find(v.begin(), v.end(), name) != v.end();
}

const std::vector<std::string>& primitive_rule_names() { return rule_names(); }

Judgment check(const DefEnv& env, const CheckConfig& cfg, const Context& ctx, const ProofPtr& proof,
               const CheckOptions& opts) {
    Checker c{env, cfg, opts};
    return c.check(ctx, proof);
}

FileReport check_file(const DefEnv& env0, const CheckConfig& cfg0, const SourceFile& file,
                      const RuleExtension* extension) {
    FileReport report;
    DefEnv env = env0;
    CheckConfig cfg = cfg0;

    auto push_fail = [&](ItemVerdict v, const Error& e) {
        v.ok = false;
        v.message = e.what();
        v.error = e.code;
        if (e.premise_index >= 0) v.premise_index = e.premise_index;
        v.expected_kind = e.expected_kind;
        v.rule = e.rule;
        if (e.span.line) v.span = e.span;
        report.items.push_back(std::move(v));
        report.all_ok = false;
    };

    for (const auto& item : file.items) {
        if (const auto* d = std::get_if<DefItem>(&item)) {
            ItemVerdict v;
            v.kind = ItemVerdict::Kind::Def;
            v.name = d->def.symbol;
            v.span = d->span;
            try {
                env = env.add(d->def);
                v.ok = true;
                report.items.push_back(std::move(v));
            } catch (const Error& e) {
                push_fail(std::move(v), e);
            }
        } else if (const auto* t = std::get_if<TheoremItem>(&item)) {
            ItemVerdict v;
            v.kind = ItemVerdict::Kind::Theorem;
            v.name = t->name;
            v.goal = t->goal;
            v.span = t->span;
            try {
                env.check_apps(t->goal.subject);
                CheckOptions opts;
                opts.extension = extension;
                opts.lemmas = &report.lemmas;
                opts.lemma_deps = &v.deps;
                Judgment got = check(env, cfg, Context{}, t->proof, opts);
                if (!judgment_eq(got, t->goal))
                    throw Error(ErrorCode::ConclusionMismatch,
                                "proof concludes " + print_judgment(got) + " but the theorem claims " +
                                    print_judgment(t->goal),
                                t->span);
                v.ok = true;
                report.lemmas[t->name] = t->goal;
                report.items.push_back(std::move(v));
            } catch (const Error& e) {
                push_fail(std::move(v), e);
            }
        } else if (const auto* p = std::get_if<PragmaItem>(&item)) {
            ItemVerdict v;
            v.kind = ItemVerdict::Kind::Pragma;
            v.name = p->key + " " + p->value;
            v.span = p->span;
            if (p->key == "discipline") {
                auto d = discipline_from_name(p->value);
                if (d) {
                    cfg.discipline = *d;
                    v.ok = true;
                    report.items.push_back(std::move(v));
                } else {
                    push_fail(std::move(v),
                              Error(ErrorCode::SyntaxError, "unknown discipline '" + p->value + "'", p->span));
                }
            } else {
                push_fail(std::move(v), Error(ErrorCode::SyntaxError, "unknown pragma '" + p->key + "'", p->span));
            }
        }
    }

    // deferred symbol-reference check: mutual recursion is legal, dangling
    // references are not
    try {
        env.finalize();
    } catch (const Error& e) {
        ItemVerdict v;
        v.kind = ItemVerdict::Kind::Finalize;
        v.name = "(finalize)";
        push_fail(std::move(v), e);
    }

    report.final_env = env;
    report.final_discipline = cfg.discipline;
    return report;
}

}  // namespace gd
