#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gd/parser.hpp"

using namespace gd;

TEST_CASE("term parsing basics") {
    SymbolSet syms = {"L", "plus"};
    CHECK(alpha_eq(parse_term("not L", syms), mk_not(mk_app("L", {}))));
    CHECK(alpha_eq(parse_term("S(S(0))"), mk_succ(mk_succ(mk_zero()))));
    CHECK(alpha_eq(parse_term("plus(0, x)", syms), mk_app("plus", {mk_zero(), mk_var("x")})));
    CHECK(alpha_eq(parse_term("case a of { 0 => 0 | S(p) => p }"),
                   mk_case(mk_var("a"), mk_zero(), "p", mk_var("p"))));
    CHECK(alpha_eq(parse_term("if c then 0 else S(0)"),
                   mk_if(mk_var("c"), mk_zero(), mk_succ(mk_zero()))));
}

TEST_CASE("typed quantifiers desugar at parse time") {
    TermPtr got = parse_term("forall x : nat . x = x");
    TermPtr want = mk_forall("x", mk_imp(mk_has(mk_var("x"), JudgKind::Nat), mk_eq(mk_var("x"), mk_var("x"))));
    CHECK(alpha_eq(got, want));
    TermPtr got2 = parse_term("exists x : nat . x = 0");
    TermPtr want2 = mk_exists("x", mk_imp(mk_has(mk_var("x"), JudgKind::Nat), mk_eq(mk_var("x"), mk_zero())));
    CHECK(alpha_eq(got2, want2));
}

TEST_CASE("precedence: not < and < or < -> < <->, ascription tight, body maximal") {
    CHECK(alpha_eq(parse_term("a and b or c"), mk_or(mk_and(mk_var("a"), mk_var("b")), mk_var("c"))));
    CHECK(alpha_eq(parse_term("not a and b"), mk_and(mk_not(mk_var("a")), mk_var("b"))));
    CHECK(alpha_eq(parse_term("a -> b -> c"), mk_imp(mk_var("a"), mk_imp(mk_var("b"), mk_var("c")))));
    CHECK(alpha_eq(parse_term("a -> b <-> c"), mk_iff(mk_imp(mk_var("a"), mk_var("b")), mk_var("c"))));
    CHECK(alpha_eq(parse_term("x : nat -> p"), mk_imp(mk_has(mk_var("x"), JudgKind::Nat), mk_var("p"))));
    CHECK(alpha_eq(parse_term("a = b : bool"), mk_has(mk_eq(mk_var("a"), mk_var("b")), JudgKind::Bool)));
    CHECK(alpha_eq(parse_term("not x = y"), mk_not(mk_eq(mk_var("x"), mk_var("y")))));
    // quantifier body extends to the end
    CHECK(alpha_eq(parse_term("forall x . x = x and p"),
                   mk_forall("x", mk_and(mk_eq(mk_var("x"), mk_var("x")), mk_var("p")))));
    // unicode aliases
    CHECK(alpha_eq(parse_term("¬(a ∧ b)"), mk_not(mk_and(mk_var("a"), mk_var("b")))));
}

TEST_CASE("judgment parsing uses the last ascription") {
    Judgment j = parse_judgment("L : bool", {"L"});
    CHECK(j.kind == JudgKind::Bool);
    CHECK(alpha_eq(j.subject, mk_app("L", {})));
    Judgment j2 = parse_judgment("x : nat : true");
    CHECK(j2.kind == JudgKind::True);
    CHECK(alpha_eq(j2.subject, mk_has(mk_var("x"), JudgKind::Nat)));
    CHECK_THROWS_AS(parse_judgment("x and y"), Error);
}

TEST_CASE("binder shadowing beats symbol resolution") {
    SymbolSet syms = {"L"};
    TermPtr t = parse_term("forall L . L = L", syms);
    CHECK(alpha_eq(t, mk_forall("v", mk_eq(mk_var("v"), mk_var("v")))));
}

TEST_CASE("syntax errors carry spans inside the text") {
    try {
        parse_term("a and (b or )");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::SyntaxError);
        CHECK(e.span.line == 1);
        CHECK(e.span.col >= 1);
        CHECK(e.span.col <= 14);
    }
    try {
        parse_term("forall 0 . x");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::SyntaxError);
    }
    // reserved words cannot be identifiers
    CHECK_THROWS_AS(parse_term("forall case . x"), Error);
    // numerals other than 0 are not in the grammar
    CHECK_THROWS_AS(parse_term("S(12)"), Error);
}

TEST_CASE("file items parse: def, theorem, pragma") {
    std::string text =
        "# bundled example\n"
        "def L := not L\n"
        "def plus(a, b) := case a of { 0 => b | S(ap) => S(plus(ap, b)) }\n"
        "pragma discipline dt\n"
        "theorem zero_nat : 0 : nat :=\n"
        "  (rule zeroI)\n";
    SourceFile f = parse_file(text, "t.gd");
    REQUIRE(f.items.size() == 4);
    const auto& d = std::get<DefItem>(f.items[0]);
    CHECK(d.def.symbol == "L");
    CHECK(alpha_eq(d.def.body, mk_not(mk_app("L", {}))));
    const auto& p = std::get<DefItem>(f.items[1]);
    CHECK(p.def.params == std::vector<std::string>{"a", "b"});
    const auto& pr = std::get<PragmaItem>(f.items[2]);
    CHECK(pr.key == "discipline");
    CHECK(pr.value == "dt");
    const auto& th = std::get<TheoremItem>(f.items[3]);
    CHECK(th.name == "zero_nat");
    CHECK(th.goal.kind == JudgKind::Nat);
    CHECK(th.proof->kind == ProofKind::Rule);
    CHECK(th.proof->name == "zeroI");
}

TEST_CASE("forward references resolve to applications") {
    std::string text =
        "def a := b\n"
        "def b := a\n";
    SourceFile f = parse_file(text, "t.gd");
    const auto& d = std::get<DefItem>(f.items[0]);
    CHECK(d.def.body->kind() == TermKind::App);
}

TEST_CASE("duplicate theorem names are rejected") {
    std::string text =
        "theorem t : 0 : nat := (rule zeroI)\n"
        "theorem t : 0 : nat := (rule zeroI)\n";
    try {
        parse_file(text, "t.gd");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::DuplicateProofName);
    }
}

TEST_CASE("proof s-expressions parse with all clause kinds") {
    SymbolSet syms = {"plus"};
    std::string text =
        "(rule defIE (dir reverse) (tpl y  y : nat) (args 0 0)\n"
        "  (sub (usedef plus))\n"
        "  (sub (hyp h)))";
    ProofPtr p = parse_proof(text, syms);
    CHECK(p->name == "defIE");
    CHECK(p->reverse);
    REQUIRE(p->tpl.has_value());
    CHECK(p->tpl->hole == "y");
    CHECK(p->args.size() == 2);
    REQUIRE(p->subs.size() == 2);
    CHECK(p->subs[0].proof->kind == ProofKind::UseDef);
    CHECK(p->subs[1].proof->kind == ProofKind::Hyp);

    std::string text2 =
        "(rule boolE\n"
        "  (sub (hyp hb))\n"
        "  (case ((ht L : true)) (hyp k))\n"
        "  (case ((hf L : false)) (lemma other)))";
    ProofPtr q = parse_proof(text2, {"L"});
    REQUIRE(q->subs.size() == 3);
    CHECK(q->subs[1].intro.size() == 1);
    CHECK(q->subs[1].intro[0].label == "ht");
    CHECK(q->subs[1].intro[0].judgment.kind == JudgKind::True);
    CHECK(q->subs[2].proof->kind == ProofKind::Lemma);
}

namespace {

TermPtr random_ast(std::mt19937_64& rng, int depth, const SymbolSet& syms, std::vector<std::string>& bound) {
    std::uniform_int_distribution<int> pick(0, depth <= 1 ? 4 : 15);
    static const char* vars[] = {"x", "y", "z"};
    switch (pick(rng)) {
        case 0: return bound.empty() ? mk_var(vars[rng() % 3]) : mk_var(bound[rng() % bound.size()]);
        case 1: return mk_zero();
        case 2: return mk_true();
        case 3: return mk_false();
        case 4: return mk_app("c0", {});
        case 5: return mk_not(random_ast(rng, depth - 1, syms, bound));
        case 6: return mk_and(random_ast(rng, depth - 1, syms, bound), random_ast(rng, depth - 1, syms, bound));
        case 7: return mk_or(random_ast(rng, depth - 1, syms, bound), random_ast(rng, depth - 1, syms, bound));
        case 8: return mk_imp(random_ast(rng, depth - 1, syms, bound), random_ast(rng, depth - 1, syms, bound));
        case 9: return mk_iff(random_ast(rng, depth - 1, syms, bound), random_ast(rng, depth - 1, syms, bound));
        case 10: {
            std::string v = vars[rng() % 3];
            bound.push_back(v);
            TermPtr body = random_ast(rng, depth - 1, syms, bound);
            bound.pop_back();
            return rng() % 2 ? mk_forall(v, body) : mk_exists(v, body);
        }
        case 11: return mk_eq(random_ast(rng, depth - 1, syms, bound), random_ast(rng, depth - 1, syms, bound));
        case 12: return mk_succ(random_ast(rng, depth - 1, syms, bound));
        case 13: return mk_if(random_ast(rng, depth - 1, syms, bound), random_ast(rng, depth - 1, syms, bound),
                              random_ast(rng, depth - 1, syms, bound));
        case 14: {
            std::string v = vars[rng() % 3];
            TermPtr scr = random_ast(rng, depth - 1, syms, bound);
            TermPtr zb = random_ast(rng, depth - 1, syms, bound);
            bound.push_back(v);
            TermPtr sb = random_ast(rng, depth - 1, syms, bound);
            bound.pop_back();
            return mk_case(scr, zb, v, sb);
        }
        default: {
            TermPtr arg = random_ast(rng, depth - 1, syms, bound);
            return mk_has(mk_app("f1", {arg}), rng() % 2 ? JudgKind::Nat : JudgKind::Bool);
        }
    }
}

}  // namespace

TEST_CASE("print/parse round trip on random ASTs") {
    SymbolSet syms = {"c0", "f1"};
    std::mt19937_64 rng(123456);
    for (int i = 0; i < 500; ++i) {
        std::vector<std::string> bound;
        TermPtr t = random_ast(rng, 5, syms, bound);
        std::string s = print_term(t);
        CAPTURE(s);
        TermPtr back = parse_term(s, syms);
        REQUIRE(alpha_eq(t, back));
    }
}

TEST_CASE("proof printing round trips") {
    SymbolSet syms = {"L"};
    std::string text =
        "(rule boolE (sub (hyp hb)) (case ((ht L : true)) (hyp ht)) (case ((hf L : false)) (hyp ht)))";
    ProofPtr p = parse_proof(text, syms);
    std::string printed = print_proof(p);
    ProofPtr q = parse_proof(printed, syms);
    CHECK(q->name == "boolE");
    REQUIRE(q->subs.size() == 3);
    CHECK(q->subs[1].intro[0].label == "ht");
    CHECK(judgment_eq(q->subs[1].intro[0].judgment, p->subs[1].intro[0].judgment));
}
