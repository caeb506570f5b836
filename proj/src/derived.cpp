#include "gd/derived.hpp"

#include <functional>
#include <map>

namespace gd {

namespace {

// ---- proof-tree builders ----

SubProof S(ProofPtr p) { return SubProof{{}, std::move(p)}; }
SubProof H(std::vector<HypBinding> intro, ProofPtr p) { return SubProof{std::move(intro), std::move(p)}; }
HypBinding B(std::string label, Judgment j) { return HypBinding{std::move(label), std::move(j)}; }

ProofPtr R(std::string name, std::vector<SubProof> subs = {}, bool reverse = false) {
    auto n = std::make_shared<ProofNode>();
    n->name = std::move(name);
    n->subs = std::move(subs);
    n->reverse = reverse;
    return n;
}

ProofPtr with_terms(ProofPtr p, std::vector<TermPtr> terms) {
    auto n = std::make_shared<ProofNode>(*p);
    n->terms = std::move(terms);
    return n;
}

ProofPtr with_tpl(ProofPtr p, Template tpl) {
    auto n = std::make_shared<ProofNode>(*p);
    n->tpl = std::move(tpl);
    return n;
}

ProofPtr with_ifterm(ProofPtr p, TermPtr t) {
    auto n = std::make_shared<ProofNode>(*p);
    n->if_term = std::move(t);
    return n;
}

// Replaces every (hyp label) leaf with a replacement derivation. Valid
// subproofs never re-introduce a label already in scope, so no shadowing
// check is needed here.
ProofPtr graft(const ProofPtr& p, const std::string& label, const ProofPtr& replacement) {
    if (p->kind == ProofKind::Hyp) return p->name == label ? replacement : p;
    if (p->kind != ProofKind::Rule) return p;
    bool changed = false;
    std::vector<SubProof> subs;
    subs.reserve(p->subs.size());
    for (const auto& s : p->subs) {
        ProofPtr q = graft(s.proof, label, replacement);
        changed = changed || q != s.proof;
        subs.push_back(SubProof{s.intro, q});
    }
    if (!changed) return p;
    auto n = std::make_shared<ProofNode>(*p);
    n->subs = std::move(subs);
    return n;
}

// Explosion: from `a : true` and `a : false` any b follows, by introducing
// `if a then true else b` under the true condition and eliminating it under
// the false one.
ProofPtr explode(ProofPtr a_true, ProofPtr a_false, const TermPtr& a, const TermPtr& b) {
    TermPtr ifterm = mk_if(a, mk_true(), b);
    Template id{"#hole", mk_var("#hole")};
    ProofPtr intro = with_ifterm(with_tpl(R("iftrueIE", {S(std::move(a_true)), S(R("trueAx"))}), id), ifterm);
    return with_ifterm(with_tpl(R("iffalseIE", {S(std::move(a_false)), S(intro)}, /*reverse=*/true), id), ifterm);
}

// ---- orchestration ----

struct Deriver {
    const DefEnv& env;
    const CheckConfig& cfg;
    const Context& ctx;
    const ProofNode& n;
    const CheckFn& check;
    int counter = 0;

    std::string label() { return "#" + std::to_string(ctx.hyps.size()) + "_" + std::to_string(++counter); }

    [[noreturn]] void fail(ErrorCode code, int premise, const std::string& msg) {
        throw Error(code, "rule " + n.name + ": " + msg, n.span, n.name, premise);
    }

    void need_subs(size_t count) {
        if (n.subs.size() != count)
            fail(ErrorCode::PremiseShapeMismatch, -1,
                 "expects " + std::to_string(count) + " premise(s), got " + std::to_string(n.subs.size()));
    }

    Judgment plain(size_t i) {
        if (!n.subs[i].intro.empty())
            fail(ErrorCode::PremiseShapeMismatch, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must not introduce hypotheses");
        return check(ctx, n.subs[i].proof);
    }

    Judgment expect_kind(size_t i, const Judgment& j, JudgKind k) {
        if (j.kind != k) {
            std::string msg = "premise " + std::to_string(i) + " must be a '" + judg_kind_name(k) +
                              "' judgment, found " + print_judgment(j);
            if (k == JudgKind::Bool || k == JudgKind::Obj || k == JudgKind::Nat) {
                Error e(ErrorCode::MissingTypingPremise, "rule " + n.name + ": " + msg, n.span, n.name,
                        static_cast<int>(i));
                e.expected_kind = judg_kind_name(k);
                throw e;
            }
            fail(ErrorCode::PremiseShapeMismatch, static_cast<int>(i), msg);
        }
        return j;
    }

    Judgment plain_kind(size_t i, JudgKind k) { return expect_kind(i, plain(i), k); }

    TermPtr shape(size_t i, const Judgment& j, TermKind k, const char* what) {
        if (j.subject->kind() != k)
            fail(ErrorCode::PremiseShapeMismatch, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must be " + what + ", found " + print_judgment(j));
        return j.subject;
    }

    // Validates a declared hypothetical premise and returns its conclusion,
    // checking the subproof under the extended context.
    Judgment hypothetical(size_t i, const std::vector<Judgment>& expected) {
        const SubProof& s = n.subs[i];
        if (s.intro.size() != expected.size())
            fail(ErrorCode::PremiseShapeMismatch, static_cast<int>(i),
                 "premise " + std::to_string(i) + " must introduce " + std::to_string(expected.size()) +
                     " hypothesis(es)");
        Context inner = ctx;
        for (size_t h = 0; h < expected.size(); ++h) {
            if (!judgment_eq(s.intro[h].judgment, expected[h]))
                fail(ErrorCode::PremiseShapeMismatch, static_cast<int>(i),
                     "premise " + std::to_string(i) + " hypothesis " + std::to_string(h) + " expected " +
                         print_judgment(expected[h]) + ", declared " + print_judgment(s.intro[h].judgment));
            inner.hyps.emplace_back(s.intro[h].label, s.intro[h].judgment);
        }
        return check(inner, s.proof);
    }

    const std::string& hyp_label(size_t i, size_t h) const { return n.subs[i].intro[h].label; }
    ProofPtr user(size_t i) const { return n.subs[i].proof; }

    TermPtr need_term(size_t i, const char* what) {
        if (n.terms.size() <= i) fail(ErrorCode::ShapeMismatch, -1, std::string("needs (terms ...) giving ") + what);
        return n.terms[i];
    }

    const Template& need_tpl() {
        if (!n.tpl) fail(ErrorCode::ShapeMismatch, -1, "needs a (tpl ...) instantiation");
        return *n.tpl;
    }
};

using Handler = std::function<ProofPtr(Deriver&)>;

// boolE with the first branch trivial (c := a): proof by contradiction from
// the false hypothesis.
ProofPtr expand_contra(Deriver& d) {
    d.need_subs(2);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment c = d.hypothetical(1, {judg(a.subject, JudgKind::False)});
    d.expect_kind(1, c, JudgKind::True);
    if (!alpha_eq(c.subject, a.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "the hypothetical branch must conclude the scrutinee itself");
    std::string t = d.label();
    return R("boolE", {S(d.user(0)), H({B(t, judg(a.subject, JudgKind::True))}, mk_hyp(t)),
                       H({B(d.hyp_label(1, 0), judg(a.subject, JudgKind::False))}, d.user(1))});
}

// a bool; [not a : true ... a : true] => a : true
ProofPtr expand_contra_pos(Deriver& d) {
    d.need_subs(2);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment c = d.hypothetical(1, {judg(mk_not(a.subject), JudgKind::True)});
    d.expect_kind(1, c, JudgKind::True);
    if (!alpha_eq(c.subject, a.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "the hypothetical branch must conclude the scrutinee itself");
    std::string t = d.label(), f = d.label();
    ProofPtr branch = graft(d.user(1), d.hyp_label(1, 0), R("negIE2", {S(mk_hyp(f))}));
    return R("boolE", {S(d.user(0)), H({B(t, judg(a.subject, JudgKind::True))}, mk_hyp(t)),
                       H({B(f, judg(a.subject, JudgKind::False))}, branch)});
}

// a bool; [a : true ... not a : true] => not a : true
ProofPtr expand_neg_i(Deriver& d) {
    d.need_subs(2);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment c = d.hypothetical(1, {judg(a.subject, JudgKind::True)});
    d.expect_kind(1, c, JudgKind::True);
    if (c.subject->kind() != TermKind::Not || !alpha_eq(c.subject->kid(0), a.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "the hypothetical branch must conclude the negated scrutinee");
    std::string f = d.label();
    return R("boolE",
             {S(d.user(0)), H({B(d.hyp_label(1, 0), judg(a.subject, JudgKind::True))}, d.user(1)),
              H({B(f, judg(a.subject, JudgKind::False))}, R("negIE2", {S(mk_hyp(f))}))});
}

// not a : true, a : true => b : true for any term b
ProofPtr expand_neg_e(Deriver& d) {
    d.need_subs(2);
    Judgment na = d.plain_kind(0, JudgKind::True);
    TermPtr neg = d.shape(0, na, TermKind::Not, "a negation");
    Judgment a = d.plain_kind(1, JudgKind::True);
    if (!alpha_eq(neg->kid(0), a.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "premises must be 'not a : true' and 'a : true'");
    TermPtr b = d.need_term(0, "the conclusion term");
    ProofPtr a_false = R("negIE2", {S(d.user(0))}, /*reverse=*/true);
    return explode(d.user(1), a_false, a.subject, b);
}

ProofPtr expand_neg_tie(Deriver& d) {
    d.need_subs(1);
    Judgment j = d.plain_kind(0, JudgKind::Bool);
    std::string t = d.label(), f = d.label();
    if (!d.n.reverse) {
        const TermPtr& a = j.subject;
        return R("judgTE",
                 {S(R("boolE", {S(d.user(0)),
                                H({B(t, judg(a, JudgKind::True))},
                                  R("judgTI", {S(R("boolI2", {S(R("negIE1", {S(mk_hyp(t))}))}))})),
                                H({B(f, judg(a, JudgKind::False))},
                                  R("judgTI", {S(R("boolI1", {S(R("negIE2", {S(mk_hyp(f))}))}))}))}))});
    }
    TermPtr neg = d.shape(0, j, TermKind::Not, "a negation");
    return R("judgTE",
             {S(R("boolE", {S(d.user(0)),
                            H({B(t, judg(neg, JudgKind::True))},
                              R("judgTI", {S(R("boolI2", {S(R("negIE2", {S(mk_hyp(t))}, true))}))})),
                            H({B(f, judg(neg, JudgKind::False))},
                              R("judgTI", {S(R("boolI1", {S(R("negIE1", {S(mk_hyp(f))}, true))}))}))}))});
}

ProofPtr expand_dbl_neg(Deriver& d) {
    d.need_subs(1);
    Judgment j = d.plain_kind(0, JudgKind::True);
    if (!d.n.reverse) return R("negIE2", {S(R("negIE1", {S(d.user(0))}))});
    if (j.subject->kind() != TermKind::Not || j.subject->kid(0)->kind() != TermKind::Not)
        d.fail(ErrorCode::PremiseShapeMismatch, 0, "premise 0 must be a double negation");
    return R("negIE1", {S(R("negIE2", {S(d.user(0))}, true))}, true);
}

ProofPtr expand_and_ti(Deriver& d) {
    d.need_subs(2);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment b = d.plain_kind(1, JudgKind::Bool);
    const TermPtr &ta = a.subject, &tb = b.subject;
    std::string at = d.label(), af = d.label(), bt = d.label(), bf = d.label();
    ProofPtr both = R("boolE", {S(d.user(1)),
                                H({B(bt, judg(tb, JudgKind::True))},
                                  R("judgTI", {S(R("boolI1", {S(R("andI1", {S(mk_hyp(at)), S(mk_hyp(bt))}))}))})),
                                H({B(bf, judg(tb, JudgKind::False))},
                                  R("judgTI",
                                    {S(R("boolI2", {S(with_terms(R("andI3", {S(mk_hyp(bf))}), {ta}))}))}))});
    return R("judgTE",
             {S(R("boolE", {S(d.user(0)), H({B(at, judg(ta, JudgKind::True))}, both),
                            H({B(af, judg(ta, JudgKind::False))},
                              R("judgTI",
                                {S(R("boolI2", {S(with_terms(R("andI2", {S(mk_hyp(af))}), {tb}))}))}))}))});
}

ProofPtr expand_or_ti(Deriver& d) {
    d.need_subs(2);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment b = d.plain_kind(1, JudgKind::Bool);
    const TermPtr &ta = a.subject, &tb = b.subject;
    std::string at = d.label(), af = d.label(), bt = d.label(), bf = d.label();
    ProofPtr fcase = R("boolE", {S(d.user(1)),
                                 H({B(bt, judg(tb, JudgKind::True))},
                                   R("judgTI", {S(R("boolI1", {S(with_terms(R("orI2", {S(mk_hyp(bt))}), {ta}))}))})),
                                 H({B(bf, judg(tb, JudgKind::False))},
                                   R("judgTI", {S(R("boolI2", {S(R("orI3", {S(mk_hyp(af)), S(mk_hyp(bf))}))}))}))});
    return R("judgTE",
             {S(R("boolE", {S(d.user(0)),
                            H({B(at, judg(ta, JudgKind::True))},
                              R("judgTI", {S(R("boolI1", {S(with_terms(R("orI1", {S(mk_hyp(at))}), {tb}))}))})),
                            H({B(af, judg(ta, JudgKind::False))}, fcase)}))});
}

// a∧b bool; [a bool ... c true]; [b bool ... c true] => c true
ProofPtr expand_and_te(Deriver& d) {
    d.need_subs(3);
    Judgment j = d.plain_kind(0, JudgKind::Bool);
    TermPtr t = d.shape(0, j, TermKind::And, "a conjunction");
    Judgment c1 = d.hypothetical(1, {judg(t->kid(0), JudgKind::Bool)});
    d.expect_kind(1, c1, JudgKind::True);
    Judgment c2 = d.hypothetical(2, {judg(t->kid(1), JudgKind::Bool)});
    if (!judgment_eq(c1, c2))
        d.fail(ErrorCode::PremiseShapeMismatch, 2, "both hypothetical branches must conclude the same judgment");
    std::string tt = d.label(), ff = d.label(), fa = d.label(), fb = d.label();
    ProofPtr branch_t = graft(d.user(1), d.hyp_label(1, 0), R("boolI1", {S(R("andE1", {S(mk_hyp(tt))}))}));
    ProofPtr branch_f =
        R("andE3", {S(mk_hyp(ff)),
                    H({B(fa, judg(t->kid(0), JudgKind::False))},
                      graft(d.user(1), d.hyp_label(1, 0), R("boolI2", {S(mk_hyp(fa))}))),
                    H({B(fb, judg(t->kid(1), JudgKind::False))},
                      graft(d.user(2), d.hyp_label(2, 0), R("boolI2", {S(mk_hyp(fb))})))});
    return R("boolE", {S(d.user(0)), H({B(tt, judg(t, JudgKind::True))}, branch_t),
                       H({B(ff, judg(t, JudgKind::False))}, branch_f)});
}

ProofPtr expand_or_te(Deriver& d) {
    d.need_subs(3);
    Judgment j = d.plain_kind(0, JudgKind::Bool);
    TermPtr t = d.shape(0, j, TermKind::Or, "a disjunction");
    Judgment c1 = d.hypothetical(1, {judg(t->kid(0), JudgKind::Bool)});
    d.expect_kind(1, c1, JudgKind::True);
    Judgment c2 = d.hypothetical(2, {judg(t->kid(1), JudgKind::Bool)});
    if (!judgment_eq(c1, c2))
        d.fail(ErrorCode::PremiseShapeMismatch, 2, "both hypothetical branches must conclude the same judgment");
    std::string tt = d.label(), ff = d.label(), ta = d.label(), tb = d.label();
    ProofPtr branch_t =
        R("orE1", {S(mk_hyp(tt)),
                   H({B(ta, judg(t->kid(0), JudgKind::True))},
                     graft(d.user(1), d.hyp_label(1, 0), R("boolI1", {S(mk_hyp(ta))}))),
                   H({B(tb, judg(t->kid(1), JudgKind::True))},
                     graft(d.user(2), d.hyp_label(2, 0), R("boolI1", {S(mk_hyp(tb))})))});
    ProofPtr branch_f = graft(d.user(1), d.hyp_label(1, 0), R("boolI2", {S(R("orE2", {S(mk_hyp(ff))}))}));
    return R("boolE", {S(d.user(0)), H({B(tt, judg(t, JudgKind::True))}, branch_t),
                       H({B(ff, judg(t, JudgKind::False))}, branch_f)});
}

// a bool; [a true ... b true] => a -> b : true
ProofPtr expand_imp_i(Deriver& d) {
    d.need_subs(2);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment b = d.hypothetical(1, {judg(a.subject, JudgKind::True)});
    d.expect_kind(1, b, JudgKind::True);
    const TermPtr &ta = a.subject, &tb = b.subject;
    std::string f = d.label();
    ProofPtr disj =
        R("boolE", {S(d.user(0)),
                    H({B(d.hyp_label(1, 0), judg(ta, JudgKind::True))},
                      with_terms(R("orI2", {S(d.user(1))}), {mk_not(ta)})),
                    H({B(f, judg(ta, JudgKind::False))},
                      with_terms(R("orI1", {S(R("negIE2", {S(mk_hyp(f))}))}), {tb}))});
    return R("impIE", {S(disj)});
}

// modus ponens via the impIE equivalence and disjunction elimination
ProofPtr expand_imp_e(Deriver& d) {
    d.need_subs(2);
    Judgment j = d.plain_kind(0, JudgKind::True);
    TermPtr t = d.shape(0, j, TermKind::Imp, "an implication");
    Judgment a = d.plain_kind(1, JudgKind::True);
    if (!alpha_eq(t->kid(0), a.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "second premise must prove the antecedent");
    const TermPtr &ta = t->kid(0), &tb = t->kid(1);
    std::string l = d.label(), rr = d.label();
    ProofPtr disj = R("impIE", {S(d.user(0))}, /*reverse=*/true);
    ProofPtr left = explode(d.user(1), R("negIE2", {S(mk_hyp(l))}, true), ta, tb);
    return R("orE1", {S(disj), H({B(l, judg(mk_not(ta), JudgKind::True))}, left),
                      H({B(rr, judg(tb, JudgKind::True))}, mk_hyp(rr))});
}

ProofPtr expand_iff_i(Deriver& d) {
    d.need_subs(4);
    Judgment a = d.plain_kind(0, JudgKind::Bool);
    Judgment b = d.plain_kind(1, JudgKind::Bool);
    Judgment fwd = d.hypothetical(2, {judg(a.subject, JudgKind::True)});
    d.expect_kind(2, fwd, JudgKind::True);
    if (!alpha_eq(fwd.subject, b.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 2, "branch must conclude the right-hand side");
    Judgment rev = d.hypothetical(3, {judg(b.subject, JudgKind::True)});
    d.expect_kind(3, rev, JudgKind::True);
    if (!alpha_eq(rev.subject, a.subject))
        d.fail(ErrorCode::PremiseShapeMismatch, 3, "branch must conclude the left-hand side");
    ProofPtr ab = R("impI", {S(d.user(0)), H({B(d.hyp_label(2, 0), judg(a.subject, JudgKind::True))}, d.user(2))});
    ProofPtr ba = R("impI", {S(d.user(1)), H({B(d.hyp_label(3, 0), judg(b.subject, JudgKind::True))}, d.user(3))});
    return R("iffIE", {S(R("andI1", {S(ab), S(ba)}))});
}

ProofPtr expand_iff_e_dir(Deriver& d, bool use_left) {
    d.need_subs(2);
    Judgment j = d.plain_kind(0, JudgKind::True);
    TermPtr t = d.shape(0, j, TermKind::Iff, "a biconditional");
    Judgment p = d.plain_kind(1, JudgKind::True);
    if (!alpha_eq(p.subject, use_left ? t->kid(0) : t->kid(1)))
        d.fail(ErrorCode::PremiseShapeMismatch, 1,
               use_left ? "second premise must prove the left-hand side" : "second premise must prove the right-hand side");
    ProofPtr imp = R(use_left ? "andE1" : "andE2", {S(R("iffIE", {S(d.user(0))}, true))});
    return R("impE", {S(imp), S(d.user(1))});
}

ProofPtr expand_iff_e3e4(Deriver& d, bool forward_imp) {
    d.need_subs(1);
    Judgment j = d.plain_kind(0, JudgKind::True);
    d.shape(0, j, TermKind::Iff, "a biconditional");
    return R(forward_imp ? "andE1" : "andE2", {S(R("iffIE", {S(d.user(0))}, true))});
}

// Quantified induction: [p(0) true]; [x nat, p(x) true ... p(S(x)) true]
// => forall x . (x : nat) -> p(x) : true
ProofPtr expand_quant_ind(Deriver& d) {
    d.need_subs(2);
    const Template& p = d.need_tpl();
    Judgment base = d.plain_kind(0, JudgKind::True);
    if (!alpha_eq(base.subject, instantiate(p, mk_zero())))
        d.fail(ErrorCode::PremiseShapeMismatch, 0, "base premise must prove the template at 0");
    if (d.n.subs[1].intro.size() != 2 || d.n.subs[1].intro[0].judgment.subject->kind() != TermKind::Var)
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "step premise must introduce 'x : nat' and the template at x");
    std::string x = d.n.subs[1].intro[0].judgment.subject->name();
    Judgment step = d.hypothetical(
        1, {judg(mk_var(x), JudgKind::Nat), judg(instantiate(p, mk_var(x)), JudgKind::True)});
    if (!alpha_eq(step.subject, instantiate(p, mk_succ(mk_var(x)))))
        d.fail(ErrorCode::PremiseShapeMismatch, 1, "step premise must conclude the template at S(x)");

    // the quantified variable: fresh for the context and the template
    std::set<std::string> avoid = free_vars(p.body);
    avoid.insert(x);
    for (const auto& [l, j] : d.ctx.hyps) {
        auto fv = free_vars(j.subject);
        avoid.insert(fv.begin(), fv.end());
    }
    std::string y = avoid.count(p.hole) ? fresh_name(p.hole, avoid) : p.hole;
    std::string ho = d.label(), hn = d.label();

    ProofPtr induction = with_tpl(
        R("ind", {S(d.user(0)),
                  H({B(d.hyp_label(1, 0), judg(mk_var(x), JudgKind::Nat)),
                     B(d.hyp_label(1, 1), judg(instantiate(p, mk_var(x)), JudgKind::True))},
                    d.user(1)),
                  S(R("judgTE", {S(mk_hyp(hn))}))}),
        p);
    ProofPtr imp = R("impI", {S(R("natTI", {S(mk_hyp(ho))})),
                              H({B(hn, judg(mk_has(mk_var(y), JudgKind::Nat), JudgKind::True))}, induction)});
    return R("forallI1", {H({B(ho, judg(mk_var(y), JudgKind::Obj))}, imp)});
}

struct Rule {
    Handler handler;
    bool promoted = false;
};

struct RegistryData {
    std::map<std::string, Rule> rules;
    std::vector<DerivedRegistry::Entry> order;

    void add(const std::string& name, Handler h, bool promoted = false) {
        rules[name] = Rule{std::move(h), promoted};
        order.push_back({name, promoted});
    }
};

RegistryData build_registry() {
    RegistryData reg;

    reg.add("contra", expand_contra);
    reg.add("contraPos", expand_contra_pos);
    reg.add("negI", expand_neg_i);
    reg.add("negE", expand_neg_e);
    reg.add("negTIE", expand_neg_tie);
    reg.add("dblNegIE", expand_dbl_neg);
    reg.add("andTI", expand_and_ti);
    reg.add("orTI", expand_or_ti);
    reg.add("andTE", expand_and_te);
    reg.add("orTE", expand_or_te);
    reg.add("impI", expand_imp_i);
    reg.add("impE", expand_imp_e);
    reg.add("iffI", expand_iff_i);
    reg.add("iffE1", [](Deriver& d) { return expand_iff_e_dir(d, true); });
    reg.add("iffE2", [](Deriver& d) { return expand_iff_e_dir(d, false); });
    reg.add("iffE", [](Deriver& d) { return expand_iff_e_dir(d, !d.n.reverse); });
    reg.add("iffE3", [](Deriver& d) { return expand_iff_e3e4(d, true); });
    reg.add("iffE4", [](Deriver& d) { return expand_iff_e3e4(d, false); });
    reg.add("quantInd", expand_quant_ind);

    // The inequality typing rules and the iff typing eliminations cannot be
    // derived from the primitive catalogue (nothing eliminates a false
    // inequality or a false biconditional), so they are backed by primitives
    // of the same name. The expansion is the primitive application itself.
    auto promote = [&](const std::string& name) {
        reg.add(name,
                [name](Deriver& d) {
                    auto n = std::make_shared<ProofNode>(d.n);
                    return ProofPtr(n);
                },
                /*promoted=*/true);
    };
    promote("neTI");
    promote("neTE1");
    promote("neTE2");
    promote("iffTE1");
    promote("iffTE2");

    return reg;
}

}  // namespace

struct DerivedRegistry::Impl {
    RegistryData data;
};

DerivedRegistry::DerivedRegistry() {
    auto impl = std::make_shared<Impl>();
    impl->data = build_registry();
    order_ = impl->data.order;
    impl_ = impl;
}

bool DerivedRegistry::knows(const std::string& rule) const { return impl_->data.rules.count(rule) > 0; }

bool DerivedRegistry::is_promoted(const std::string& rule) const {
    auto it = impl_->data.rules.find(rule);
    return it != impl_->data.rules.end() && it->second.promoted;
}

ProofPtr DerivedRegistry::expand(const DefEnv& env, const CheckConfig& cfg, const Context& ctx,
                                 const ProofNode& node, const CheckFn& check) const {
    auto it = impl_->data.rules.find(node.name);
    if (it == impl_->data.rules.end())
        throw Error(ErrorCode::UnknownDerivedRule, "unknown derived rule '" + node.name + "'", node.span);
    Deriver d{env, cfg, ctx, node, check};
    return it->second.handler(d);
}

Judgment DerivedRegistry::apply(const DefEnv& env, const CheckConfig& cfg, const Context& ctx,
                                const ProofNode& node, const CheckFn& check) const {
    // Promoted rules carry primitive names, so the checker dispatches them
    // before consulting this registry; nothing to expand here.
    ProofPtr expansion = expand(env, cfg, ctx, node, check);
    return check(ctx, expansion);
}

const DerivedRegistry& derived_registry() {
    static const DerivedRegistry reg;
    return reg;
}

namespace {

// One schematic verification per registered rule: instantiate with atoms,
// supply placeholder subproofs backed by context hypotheses, check, compare
// with the declared conclusion.
DerivationResult verify_one(const std::string& name) {
    DerivationResult res;
    res.name = name;
    res.promoted = derived_registry().is_promoted(name);
    DefEnv env;
    CheckConfig cfg;
    CheckOptions opts;
    opts.extension = &derived_registry();

    TermPtr a = mk_var("a"), b = mk_var("b"), c = mk_var("c");
    Context ctx;
    auto hyp = [&](const std::string& l, TermPtr t, JudgKind k) { ctx.hyps.emplace_back(l, judg(t, k)); };

    ProofPtr node;
    Judgment expected = judg(a, JudgKind::True);

    try {
        if (name == "contra") {
            hyp("hb", a, JudgKind::Bool);
            hyp("k", a, JudgKind::True);
            node = R("contra", {S(mk_hyp("hb")), H({B("l", judg(a, JudgKind::False))}, mk_hyp("k"))});
            expected = judg(a, JudgKind::True);
        } else if (name == "contraPos") {
            hyp("hb", a, JudgKind::Bool);
            hyp("k", a, JudgKind::True);
            node = R("contraPos", {S(mk_hyp("hb")), H({B("l", judg(mk_not(a), JudgKind::True))}, mk_hyp("k"))});
            expected = judg(a, JudgKind::True);
        } else if (name == "negI") {
            hyp("hb", a, JudgKind::Bool);
            hyp("k", mk_not(a), JudgKind::True);
            node = R("negI", {S(mk_hyp("hb")), H({B("l", judg(a, JudgKind::True))}, mk_hyp("k"))});
            expected = judg(mk_not(a), JudgKind::True);
        } else if (name == "negE") {
            hyp("h1", mk_not(a), JudgKind::True);
            hyp("h2", a, JudgKind::True);
            node = with_terms(R("negE", {S(mk_hyp("h1")), S(mk_hyp("h2"))}), {b});
            expected = judg(b, JudgKind::True);
        } else if (name == "negTIE") {
            hyp("h", a, JudgKind::Bool);
            node = R("negTIE", {S(mk_hyp("h"))});
            expected = judg(mk_not(a), JudgKind::Bool);
        } else if (name == "dblNegIE") {
            hyp("h", a, JudgKind::True);
            node = R("dblNegIE", {S(mk_hyp("h"))});
            expected = judg(mk_not(mk_not(a)), JudgKind::True);
        } else if (name == "andTI" || name == "orTI") {
            hyp("ha", a, JudgKind::Bool);
            hyp("hb", b, JudgKind::Bool);
            node = R(name, {S(mk_hyp("ha")), S(mk_hyp("hb"))});
            expected = judg(name == "andTI" ? mk_and(a, b) : mk_or(a, b), JudgKind::Bool);
        } else if (name == "andTE" || name == "orTE") {
            TermPtr ab = name == "andTE" ? mk_and(a, b) : mk_or(a, b);
            hyp("h", ab, JudgKind::Bool);
            hyp("k", c, JudgKind::True);
            node = R(name, {S(mk_hyp("h")), H({B("l1", judg(a, JudgKind::Bool))}, mk_hyp("k")),
                            H({B("l2", judg(b, JudgKind::Bool))}, mk_hyp("k"))});
            expected = judg(c, JudgKind::True);
        } else if (name == "impI") {
            hyp("hb", a, JudgKind::Bool);
            hyp("k", b, JudgKind::True);
            node = R("impI", {S(mk_hyp("hb")), H({B("l", judg(a, JudgKind::True))}, mk_hyp("k"))});
            expected = judg(mk_imp(a, b), JudgKind::True);
        } else if (name == "impE") {
            hyp("h1", mk_imp(a, b), JudgKind::True);
            hyp("h2", a, JudgKind::True);
            node = R("impE", {S(mk_hyp("h1")), S(mk_hyp("h2"))});
            expected = judg(b, JudgKind::True);
        } else if (name == "iffI") {
            hyp("ha", a, JudgKind::Bool);
            hyp("hb", b, JudgKind::Bool);
            hyp("k1", b, JudgKind::True);
            hyp("k2", a, JudgKind::True);
            node = R("iffI", {S(mk_hyp("ha")), S(mk_hyp("hb")), H({B("l1", judg(a, JudgKind::True))}, mk_hyp("k1")),
                              H({B("l2", judg(b, JudgKind::True))}, mk_hyp("k2"))});
            expected = judg(mk_iff(a, b), JudgKind::True);
        } else if (name == "iffE1" || name == "iffE2" || name == "iffE") {
            hyp("h", mk_iff(a, b), JudgKind::True);
            bool left = name != "iffE2";
            hyp("hp", left ? a : b, JudgKind::True);
            node = R(name, {S(mk_hyp("h")), S(mk_hyp("hp"))});
            expected = judg(left ? b : a, JudgKind::True);
        } else if (name == "iffE3" || name == "iffE4") {
            hyp("h", mk_iff(a, b), JudgKind::True);
            node = R(name, {S(mk_hyp("h"))});
            expected = judg(name == "iffE3" ? mk_imp(a, b) : mk_imp(b, a), JudgKind::True);
        } else if (name == "quantInd") {
            // concrete schematic template: p[x] = (x : nat); base and step are
            // honestly provable, which exercises the whole expansion
            Template p{"x", mk_has(mk_var("x"), JudgKind::Nat)};
            ProofPtr base = R("judgTI", {S(R("zeroI"))});
            ProofPtr step = R("judgTI", {S(R("succIE", {S(R("judgTE", {S(mk_hyp("l2"))}))}))});
            node = with_tpl(R("quantInd", {S(base), H({B("l1", judg(mk_var("x"), JudgKind::Nat)),
                                                       B("l2", judg(mk_has(mk_var("x"), JudgKind::Nat),
                                                                    JudgKind::True))},
                                                      step)}),
                            p);
            expected = judg(mk_forall("x", mk_imp(mk_has(mk_var("x"), JudgKind::Nat),
                                                  mk_has(mk_var("x"), JudgKind::Nat))),
                            JudgKind::True);
        } else if (name == "neTI") {
            hyp("ha", a, JudgKind::Obj);
            hyp("hb", b, JudgKind::Obj);
            node = R("neTI", {S(mk_hyp("ha")), S(mk_hyp("hb"))});
            expected = judg(mk_ne(a, b), JudgKind::Bool);
        } else if (name == "neTE1" || name == "neTE2") {
            hyp("h", mk_ne(a, b), JudgKind::Bool);
            node = R(name, {S(mk_hyp("h"))});
            expected = judg(name == "neTE1" ? a : b, JudgKind::Obj);
        } else if (name == "iffTE1" || name == "iffTE2") {
            hyp("h", mk_iff(a, b), JudgKind::Bool);
            node = R(name, {S(mk_hyp("h"))});
            expected = judg(name == "iffTE1" ? a : b, JudgKind::Bool);
        } else {
            res.message = "no schematic verification registered";
            return res;
        }

        Judgment got = check(env, cfg, ctx, node, opts);
        if (!judgment_eq(got, expected)) {
            res.message = "concluded " + print_judgment(got) + ", expected " + print_judgment(expected);
            return res;
        }
        res.ok = true;
    } catch (const Error& e) {
        res.message = e.what();
    }
    return res;
}

}  // namespace

DerivationReport verify_all_derivations() {
    DerivationReport report;
    for (const auto& entry : derived_registry().entries()) {
        DerivationResult r = verify_one(entry.name);
        if (!r.ok) report.all_ok = false;
        report.results.push_back(std::move(r));
    }
    return report;
}

}  // namespace gd
