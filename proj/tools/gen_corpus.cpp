// Builds the arithmetic and Ackermann corpus files. The proof scripts are
// assembled as trees, self-checked against the kernel, then pretty-printed;
// the committed .gd files are this program's output.

#include <fstream>
#include <iostream>

#include "gd/derived.hpp"
#include "gd/kernel.hpp"
#include "gd/parser.hpp"

using namespace gd;

namespace {

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

ProofPtr with_tpl(ProofPtr p, Template tpl) {
    auto n = std::make_shared<ProofNode>(*p);
    n->tpl = std::move(tpl);
    return n;
}
ProofPtr with_args(ProofPtr p, std::vector<TermPtr> args) {
    auto n = std::make_shared<ProofNode>(*p);
    n->args = std::move(args);
    return n;
}
ProofPtr with_caseterm(ProofPtr p, TermPtr t) {
    auto n = std::make_shared<ProofNode>(*p);
    n->case_term = std::move(t);
    return n;
}
ProofPtr with_terms(ProofPtr p, std::vector<TermPtr> terms) {
    auto n = std::make_shared<ProofNode>(*p);
    n->terms = std::move(terms);
    return n;
}

TermPtr V(const char* n) { return mk_var(n); }

// numeral(n) : nat
ProofPtr nat_tower(unsigned n) {
    ProofPtr p = R("zeroI");
    for (unsigned i = 0; i < n; ++i) p = R("succIE", {S(p)});
    return p;
}

ProofPtr obj_of(ProofPtr nat_proof) { return R("natTE", {S(std::move(nat_proof))}); }
ProofPtr refl_of(ProofPtr obj_proof) { return R("eqR", {S(std::move(obj_proof))}); }

// (t : k) : true from t : k
ProofPtr as_true(ProofPtr p) { return R("judgTI", {S(std::move(p))}); }
// t : k from (t : k) : true
ProofPtr from_true(ProofPtr p) { return R("judgTE", {S(std::move(p))}); }

Template tpl_nat() { return Template{"w", mk_has(V("w"), JudgKind::Nat)}; }
Template tpl_id() { return Template{"w", V("w")}; }

// defIE forward: from W[expansion] to W[sym(args)]
ProofPtr def_intro(const std::string& sym, std::vector<TermPtr> args, Template w, ProofPtr main) {
    return with_args(with_tpl(R("defIE", {S(mk_usedef(sym)), S(std::move(main))}), std::move(w)), std::move(args));
}

// case0IE / caseSIE forward: from W[selected branch] to W[case term]
ProofPtr case_zero(Template w, TermPtr caseterm, ProofPtr cond, ProofPtr main) {
    return with_caseterm(with_tpl(R("case0IE", {S(std::move(cond)), S(std::move(main))}), std::move(w)),
                         std::move(caseterm));
}
ProofPtr case_succ(Template w, TermPtr caseterm, ProofPtr cond, ProofPtr main) {
    return with_caseterm(with_tpl(R("caseSIE", {S(std::move(cond)), S(std::move(main))}), std::move(w)),
                         std::move(caseterm));
}

// forall x . (x : nat) -> body, as a term
TermPtr nat_forall(const std::string& x, TermPtr body) {
    return mk_forall(x, mk_imp(mk_has(mk_var(x), JudgKind::Nat), std::move(body)));
}

// Applies a binary totality lemma `forall a . (a:nat) -> forall b . (b:nat)
// -> (sym(a,b):nat)` to two arguments given their nat-ness proofs.
ProofPtr apply_total2(const std::string& lemma, ProofPtr has1, ProofPtr has2) {
    ProofPtr obj1 = obj_of(from_true(has1));
    ProofPtr obj2 = obj_of(from_true(has2));
    ProofPtr e1 = R("forallE1", {S(mk_lemma(lemma)), S(std::move(obj1))});
    ProofPtr i1 = R("impE", {S(std::move(e1)), S(has1)});
    ProofPtr e2 = R("forallE1", {S(std::move(i1)), S(std::move(obj2))});
    return R("impE", {S(std::move(e2)), S(has2)});
}

struct Corpus {
    DefEnv env;
    SourceFile file;

    void def(const std::string& text) {
        SourceFile f = parse_file(text, "gen", {});
        for (auto& item : f.items) {
            const auto& d = std::get<DefItem>(item);
            // the shared environment grows across files, matching check order
            env = env.add(d.def);
            file.items.push_back(item);
        }
    }

    void theorem(const std::string& name, Judgment goal, ProofPtr proof) {
        TheoremItem t;
        t.name = name;
        t.goal = std::move(goal);
        t.proof = std::move(proof);
        file.items.push_back(std::move(t));
    }
};

// ---- plus totality: induction on the first argument ----

ProofPtr gen_plus_total(const DefEnv& env) {
    TermPtr a = V("a"), b = V("b"), x = V("x");
    Template ind_tpl{"w", mk_has(mk_app("plus", {V("w"), b}), JudgKind::Nat)};

    // base: plus(0,b) is b after one case step
    ProofPtr base =
        def_intro("plus", {mk_zero(), b}, tpl_nat(),
                  case_zero(tpl_nat(), env.expand("plus", {mk_zero(), b}), refl_of(obj_of(R("zeroI"))),
                            mk_hyp("hbn")));

    // step: plus(S(x),b) is S(plus(x,b))
    ProofPtr s_body = as_true(R("succIE", {S(from_true(mk_hyp("hp")))}));
    ProofPtr step =
        def_intro("plus", {mk_succ(x), b}, tpl_nat(),
                  case_succ(tpl_nat(), env.expand("plus", {mk_succ(x), b}),
                            refl_of(obj_of(R("succIE", {S(mk_hyp("hx"))}))), std::move(s_body)));

    ProofPtr induction = with_tpl(
        R("ind", {S(std::move(base)),
                  H({B("hx", judg(x, JudgKind::Nat)),
                     B("hp", judg(mk_has(mk_app("plus", {x, b}), JudgKind::Nat), JudgKind::True))},
                    std::move(step)),
                  S(from_true(mk_hyp("han")))}),
        ind_tpl);

    ProofPtr inner_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("hb"))})),
                   H({B("hbn", judg(mk_has(b, JudgKind::Nat), JudgKind::True))}, std::move(induction))});
    ProofPtr inner_all = R("forallI1", {H({B("hb", judg(b, JudgKind::Obj))}, std::move(inner_imp))});
    ProofPtr outer_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("ha"))})),
                   H({B("han", judg(mk_has(a, JudgKind::Nat), JudgKind::True))}, std::move(inner_all))});
    return R("forallI1", {H({B("ha", judg(a, JudgKind::Obj))}, std::move(outer_imp))});
}

// ---- times totality: same skeleton, the step leans on plus_total ----

ProofPtr gen_times_total(const DefEnv& env) {
    TermPtr a = V("a"), b = V("b"), x = V("x");
    Template ind_tpl{"w", mk_has(mk_app("times", {V("w"), b}), JudgKind::Nat)};

    ProofPtr base =
        def_intro("times", {mk_zero(), b}, tpl_nat(),
                  case_zero(tpl_nat(), env.expand("times", {mk_zero(), b}), refl_of(obj_of(R("zeroI"))),
                            as_true(R("zeroI"))));

    // step: times(S(x),b) is plus(times(x,b), b); nat-ness via plus_total
    ProofPtr sum_nat = apply_total2("plus_total", mk_hyp("hp"), mk_hyp("hbn"));
    ProofPtr step =
        def_intro("times", {mk_succ(x), b}, tpl_nat(),
                  case_succ(tpl_nat(), env.expand("times", {mk_succ(x), b}),
                            refl_of(obj_of(R("succIE", {S(mk_hyp("hx"))}))), std::move(sum_nat)));

    ProofPtr induction = with_tpl(
        R("ind", {S(std::move(base)),
                  H({B("hx", judg(x, JudgKind::Nat)),
                     B("hp", judg(mk_has(mk_app("times", {x, b}), JudgKind::Nat), JudgKind::True))},
                    std::move(step)),
                  S(from_true(mk_hyp("han")))}),
        ind_tpl);

    ProofPtr inner_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("hb"))})),
                   H({B("hbn", judg(mk_has(b, JudgKind::Nat), JudgKind::True))}, std::move(induction))});
    ProofPtr inner_all = R("forallI1", {H({B("hb", judg(b, JudgKind::Obj))}, std::move(inner_imp))});
    ProofPtr outer_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("ha"))})),
                   H({B("han", judg(mk_has(a, JudgKind::Nat), JudgKind::True))}, std::move(inner_all))});
    return R("forallI1", {H({B("ha", judg(a, JudgKind::Obj))}, std::move(outer_imp))});
}

// ---- exponent totality: induction on the exponent ----

ProofPtr gen_exp_total(const DefEnv& env) {
    TermPtr a = V("a"), b = V("b"), y = V("y");
    Template ind_tpl{"w", mk_has(mk_app("exp", {a, V("w")}), JudgKind::Nat)};

    ProofPtr base =
        def_intro("exp", {a, mk_zero()}, tpl_nat(),
                  case_zero(tpl_nat(), env.expand("exp", {a, mk_zero()}), refl_of(obj_of(R("zeroI"))),
                            as_true(R("succIE", {S(R("zeroI"))}))));

    // step: exp(a,S(y)) is times(a, exp(a,y))
    ProofPtr prod_nat = apply_total2("times_total", mk_hyp("han"), mk_hyp("hp"));
    ProofPtr step =
        def_intro("exp", {a, mk_succ(y)}, tpl_nat(),
                  case_succ(tpl_nat(), env.expand("exp", {a, mk_succ(y)}),
                            refl_of(obj_of(R("succIE", {S(mk_hyp("hy"))}))), std::move(prod_nat)));

    ProofPtr induction = with_tpl(
        R("ind", {S(std::move(base)),
                  H({B("hy", judg(y, JudgKind::Nat)),
                     B("hp", judg(mk_has(mk_app("exp", {a, y}), JudgKind::Nat), JudgKind::True))},
                    std::move(step)),
                  S(from_true(mk_hyp("hbn")))}),
        ind_tpl);

    ProofPtr inner_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("hb"))})),
                   H({B("hbn", judg(mk_has(b, JudgKind::Nat), JudgKind::True))}, std::move(induction))});
    ProofPtr inner_all = R("forallI1", {H({B("hb", judg(b, JudgKind::Obj))}, std::move(inner_imp))});
    ProofPtr outer_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("ha"))})),
                   H({B("han", judg(mk_has(a, JudgKind::Nat), JudgKind::True))}, std::move(inner_all))});
    return R("forallI1", {H({B("ha", judg(a, JudgKind::Obj))}, std::move(outer_imp))});
}

// ---- equational spot checks: plus(m, n) = numeral(m+n) ----

ProofPtr gen_plus_eq(const DefEnv& env, unsigned m, unsigned n) {
    TermPtr lhs = mk_app("plus", {mk_numeral(m), mk_numeral(n)});

    // plus(m,n) : nat via plus_total
    ProofPtr has = apply_total2("plus_total", as_true(nat_tower(m)), as_true(nat_tower(n)));
    ProofPtr start = refl_of(obj_of(from_true(std::move(has))));  // plus(m,n) = plus(m,n) : true

    // rewrite the right-hand occurrence downward, peeling one S per step
    ProofPtr proof = std::move(start);
    for (unsigned k = 0; k <= m; ++k) {
        unsigned rest = m - k;  // first argument still to consume
        // wrapper: plus(m,n) = S^k(hole)
        TermPtr wrap = V("w");
        for (unsigned i = 0; i < k; ++i) wrap = mk_succ(wrap);
        Template w{"w", mk_eq(lhs, wrap)};
        TermPtr args0 = mk_numeral(rest);
        ProofPtr unfolded = with_args(
            with_tpl(R("defIE", {S(mk_usedef("plus")), S(std::move(proof))}, /*reverse=*/true), w),
            {args0, mk_numeral(n)});
        TermPtr caseterm = env.expand("plus", {mk_numeral(rest), mk_numeral(n)});
        if (rest == 0) {
            proof = with_caseterm(
                with_tpl(R("case0IE", {S(refl_of(obj_of(R("zeroI")))), S(std::move(unfolded))},
                           /*reverse=*/true),
                         w),
                caseterm);
        } else {
            proof = with_caseterm(
                with_tpl(R("caseSIE", {S(refl_of(obj_of(nat_tower(rest)))), S(std::move(unfolded))},
                           /*reverse=*/true),
                         w),
                caseterm);
        }
    }
    return proof;
}

// ---- Ackermann totality: nested induction ----

ProofPtr gen_ack_total(const DefEnv& env) {
    TermPtr x = V("x"), y = V("y"), i = V("i"), j = V("j");
    auto ack = [](TermPtr u, TermPtr v) { return mk_app("ack", {std::move(u), std::move(v)}); };

    // outer template: p[w] = forall y . (y:nat) -> (ack(w,y):nat)
    Template outer_tpl{"w", nat_forall("y", mk_has(ack(V("w"), y), JudgKind::Nat))};

    // ---- outer base: forall y . (y:nat) -> (ack(0,y):nat) ----
    ProofPtr base_body =
        def_intro("ack", {mk_zero(), y}, tpl_nat(),
                  case_zero(tpl_nat(), env.expand("ack", {mk_zero(), y}), refl_of(obj_of(R("zeroI"))),
                            as_true(R("succIE", {S(from_true(mk_hyp("hyn")))}))));
    ProofPtr outer_base = R(
        "forallI1",
        {H({B("hy", judg(y, JudgKind::Obj))},
           R("impI", {S(R("natTI", {S(mk_hyp("hy"))})),
                      H({B("hyn", judg(mk_has(y, JudgKind::Nat), JudgKind::True))}, std::move(base_body))}))});

    // ---- outer step: from p[i] derive p[S(i)] by an inner induction on y ----
    Template inner_tpl{"v", mk_has(ack(mk_succ(i), V("v")), JudgKind::Nat)};

    // inner base: ack(S(i),0) unfolds through both case layers to ack(i,S(0))
    ProofPtr u1 = R("impE", {S(R("forallE1", {S(mk_hyp("hIH")), S(obj_of(R("succIE", {S(R("zeroI"))})))})),
                             S(as_true(R("succIE", {S(R("zeroI"))})))});
    TermPtr outer_case0 = env.expand("ack", {mk_succ(i), mk_zero()});
    TermPtr inner_case0 = subst(outer_case0->kid(2), outer_case0->name(), i);
    ProofPtr c_in = case_zero(tpl_nat(), inner_case0, refl_of(obj_of(R("zeroI"))), std::move(u1));
    ProofPtr c_out = case_succ(tpl_nat(), outer_case0, refl_of(obj_of(R("succIE", {S(mk_hyp("hi"))}))),
                               std::move(c_in));
    ProofPtr inner_base = def_intro("ack", {mk_succ(i), mk_zero()}, tpl_nat(), std::move(c_out));

    // inner step: ack(S(i),S(j)) unfolds to ack(i, ack(S(i),j))
    ProofPtr u2 = R("impE", {S(R("forallE1", {S(mk_hyp("hIH")), S(obj_of(from_true(mk_hyp("hQ"))))})),
                             S(mk_hyp("hQ"))});
    TermPtr outer_caseS = env.expand("ack", {mk_succ(i), mk_succ(j)});
    TermPtr inner_caseS = subst(outer_caseS->kid(2), outer_caseS->name(), i);
    ProofPtr c_in2 = case_succ(tpl_nat(), inner_caseS, refl_of(obj_of(R("succIE", {S(mk_hyp("hj"))}))),
                               std::move(u2));
    ProofPtr c_out2 = case_succ(tpl_nat(), outer_caseS, refl_of(obj_of(R("succIE", {S(mk_hyp("hi"))}))),
                                std::move(c_in2));
    ProofPtr inner_step = def_intro("ack", {mk_succ(i), mk_succ(j)}, tpl_nat(), std::move(c_out2));

    ProofPtr inner_ind = with_tpl(
        R("ind", {S(std::move(inner_base)),
                  H({B("hj", judg(j, JudgKind::Nat)),
                     B("hQ", judg(mk_has(ack(mk_succ(i), j), JudgKind::Nat), JudgKind::True))},
                    std::move(inner_step)),
                  S(from_true(mk_hyp("hyn")))}),
        inner_tpl);

    ProofPtr outer_step_body = R(
        "forallI1",
        {H({B("hy", judg(y, JudgKind::Obj))},
           R("impI", {S(R("natTI", {S(mk_hyp("hy"))})),
                      H({B("hyn", judg(mk_has(y, JudgKind::Nat), JudgKind::True))}, std::move(inner_ind))}))});

    ProofPtr outer_ind = with_tpl(
        R("ind", {S(std::move(outer_base)),
                  H({B("hi", judg(i, JudgKind::Nat)),
                     B("hIH", judg(instantiate(outer_tpl, i), JudgKind::True))},
                    std::move(outer_step_body)),
                  S(from_true(mk_hyp("hxn")))}),
        outer_tpl);

    ProofPtr outer_imp =
        R("impI", {S(R("natTI", {S(mk_hyp("hx"))})),
                   H({B("hxn", judg(mk_has(x, JudgKind::Nat), JudgKind::True))}, std::move(outer_ind))});
    return R("forallI1", {H({B("hx", judg(x, JudgKind::Obj))}, std::move(outer_imp))});
}

// ---- small order/predecessor facts ----

ProofPtr gen_le_0_1(const DefEnv& env) {
    TermPtr one = mk_numeral(1);
    return def_intro("le", {mk_zero(), one}, tpl_id(),
                     case_zero(tpl_id(), env.expand("le", {mk_zero(), one}), refl_of(obj_of(R("zeroI"))),
                               R("trueAx")));
}

ProofPtr gen_lt_0_1(const DefEnv& env) {
    TermPtr one = mk_numeral(1);
    // lt(0,1) unfolds to le(0,1) and 0 != S(0)
    ProofPtr ne = R("neS", {S(R("succNeZeroI", {S(R("zeroI"))}))});
    ProofPtr conj = R("andI1", {S(mk_lemma("le_0_1")), S(std::move(ne))});
    (void)env;
    return def_intro("lt", {mk_zero(), one}, tpl_id(), std::move(conj));
}

ProofPtr gen_pred_s1(const DefEnv& env) {
    // pred(S(0)) = 0
    TermPtr one = mk_numeral(1);
    Template w{"w", mk_eq(V("w"), mk_zero())};
    ProofPtr start = refl_of(obj_of(R("zeroI")));  // 0 = 0
    ProofPtr cased = case_succ(w, env.expand("pred", {one}), refl_of(obj_of(nat_tower(1))), std::move(start));
    return def_intro("pred", {one}, w, std::move(cased));
}

void write_file(const std::string& path, const SourceFile& f, const std::string& header) {
    std::ofstream out(path, std::ios::binary);
    out << header;
    out << print_file(f);
    std::cout << "wrote " << path << "\n";
}

// every theorem in the file must check before we commit it to disk
void self_check(const Corpus& c, const DefEnv& base) {
    FileReport r = check_file(base, CheckConfig{}, c.file, &derived_registry());
    for (const auto& item : r.items) {
        if (!item.ok) {
            std::cerr << "generation bug: " << item.name << ": " << item.message << "\n";
            std::exit(1);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::string outdir = argc > 1 ? argv[1] : "corpus";

    // ---- arith.gd ----
    Corpus arith;
    arith.def("def plus(a, b) := case a of { 0 => b | S(ap) => S(plus(ap, b)) }\n");
    arith.def("def times(a, b) := case a of { 0 => 0 | S(ap) => plus(times(ap, b), b) }\n");
    arith.def("def exp(a, b) := case b of { 0 => S(0) | S(bp) => times(a, exp(a, bp)) }\n");
    arith.def("def le(a, b) := case a of { 0 => true | S(ap) => ap != b and le(ap, b) }\n");
    arith.def("def lt(a, b) := le(a, b) and a != b\n");
    arith.def("def ge(a, b) := not lt(a, b)\n");
    arith.def("def gt(a, b) := not le(a, b)\n");
    arith.def("def pred(a) := case a of { 0 => 0 | S(ap) => ap }\n");
    arith.def("def one := S(0)\n");
    arith.def("def two := S(S(0))\n");

    TermPtr a = V("a"), b = V("b");
    auto total_goal = [&](const char* sym) {
        return judg(nat_forall("a", nat_forall("b", mk_has(mk_app(sym, {a, b}), JudgKind::Nat))),
                    JudgKind::True);
    };

    arith.theorem("one_nat", judg(mk_app("one", {}), JudgKind::Nat),
                  from_true(def_intro("one", {}, tpl_nat(), as_true(nat_tower(1)))));
    arith.theorem("two_nat", judg(mk_app("two", {}), JudgKind::Nat),
                  from_true(def_intro("two", {}, tpl_nat(), as_true(nat_tower(2)))));
    arith.theorem("plus_total", total_goal("plus"), gen_plus_total(arith.env));
    arith.theorem("times_total", total_goal("times"), gen_times_total(arith.env));
    arith.theorem("exp_total", total_goal("exp"), gen_exp_total(arith.env));
    arith.theorem("plus_1_1",
                  judg(mk_eq(mk_app("plus", {mk_numeral(1), mk_numeral(1)}), mk_numeral(2)), JudgKind::True),
                  gen_plus_eq(arith.env, 1, 1));
    arith.theorem("plus_2_2",
                  judg(mk_eq(mk_app("plus", {mk_numeral(2), mk_numeral(2)}), mk_numeral(4)), JudgKind::True),
                  gen_plus_eq(arith.env, 2, 2));
    arith.theorem("one_ne_zero", judg(mk_ne(mk_numeral(1), mk_zero()), JudgKind::True),
                  R("succNeZeroI", {S(R("zeroI"))}));
    arith.theorem("le_0_1", judg(mk_app("le", {mk_zero(), mk_numeral(1)}), JudgKind::True),
                  gen_le_0_1(arith.env));
    arith.theorem("lt_0_1", judg(mk_app("lt", {mk_zero(), mk_numeral(1)}), JudgKind::True),
                  gen_lt_0_1(arith.env));
    arith.theorem("pred_s1", judg(mk_eq(mk_app("pred", {mk_numeral(1)}), mk_zero()), JudgKind::True),
                  gen_pred_s1(arith.env));

    self_check(arith, DefEnv{});
    write_file(outdir + "/arith.gd", arith.file,
               "# Arithmetic development: recursive definitions with totality proofs.\n"
               "# Generated by gd-gen-corpus; edit that tool, not this file.\n\n");

    // ---- ack.gd ----
    Corpus ack_only;
    ack_only.def(
        "def ack(x, y) := case x of { 0 => S(y) | S(xp) => case y of { 0 => ack(xp, S(0)) | S(yp) => ack(xp, "
        "ack(x, yp)) } }\n");
    TermPtr x = V("x"), y = V("y");
    Judgment ack_goal =
        judg(nat_forall("x", nat_forall("y", mk_has(mk_app("ack", {x, y}), JudgKind::Nat))), JudgKind::True);
    ack_only.theorem("ack_total", ack_goal, gen_ack_total(ack_only.env));
    self_check(ack_only, DefEnv{});
    write_file(outdir + "/ack.gd", ack_only.file,
               "# Ackermann's function: admitted by unrestricted recursion, proven total\n"
               "# by a nested induction. Generated by gd-gen-corpus.\n\n");

    return 0;
}
