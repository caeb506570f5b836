#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gd/derived.hpp"
#include "gd/parser.hpp"

using namespace gd;

namespace {

Judgment chk(const Context& ctx, const std::string& proof, const SymbolSet& syms = {},
             const DefEnv& env = DefEnv{}) {
    CheckOptions opts;
    opts.extension = &derived_registry();
    return check(env, CheckConfig{}, ctx, parse_proof(proof, syms), opts);
}

Context ctx_of(std::initializer_list<std::pair<std::string, std::string>> hyps, const SymbolSet& syms = {}) {
    Context ctx;
    for (const auto& [label, j] : hyps) ctx.hyps.emplace_back(label, parse_judgment(j, syms));
    return ctx;
}

}  // namespace

TEST_CASE("every registered derivation verifies against the kernel") {
    DerivationReport r = verify_all_derivations();
    for (const auto& res : r.results) {
        CAPTURE(res.name);
        CAPTURE(res.message);
        CHECK(res.ok);
    }
    CHECK(r.all_ok);
    CHECK(r.results.size() >= 20);
}

TEST_CASE("the registry contains the expected rule set") {
    std::set<std::string> names;
    int promoted = 0;
    for (const auto& e : derived_registry().entries()) {
        names.insert(e.name);
        if (e.promoted) ++promoted;
    }
    for (const char* required :
         {"contra", "contraPos", "negI", "negE", "negTIE", "dblNegIE", "andTI", "orTI", "andTE", "orTE", "impI",
          "impE", "iffI", "iffE1", "iffE2", "iffE", "iffE3", "iffE4", "quantInd", "neTI", "neTE1", "neTE2",
          "iffTE1", "iffTE2"})
        CHECK(names.count(required) == 1);
    CHECK(promoted == 5);
}

TEST_CASE("impI demands the antecedent's booleanness first") {
    // well-typed use: true -> true
    Judgment j = chk({}, "(rule impI (sub (rule boolI1 (sub (rule trueAx)))) "
                         "(case ((h true : true)) (hyp h)))");
    CHECK(judgment_eq(j, parse_judgment("(true -> true) : true")));

    // the Curry-style failure: a 'true' premise where 'bool' is required
    try {
        chk({}, "(rule impI (sub (rule trueAx)) (case ((h true : true)) (hyp h)))");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::MissingTypingPremise);
        CHECK(e.premise_index == 0);
        CHECK(e.expected_kind == "bool");
        CHECK(e.rule == "impI");
    }
}

TEST_CASE("modus ponens and the biconditional eliminations") {
    Context ctx = ctx_of({{"hi", "(a -> b) : true"}, {"ha", "a : true"}});
    CHECK(judgment_eq(chk(ctx, "(rule impE (sub (hyp hi)) (sub (hyp ha)))"), parse_judgment("b : true")));

    Context ctx2 = ctx_of({{"h", "(a <-> b) : true"}, {"ha", "a : true"}, {"hb", "b : true"}});
    CHECK(judgment_eq(chk(ctx2, "(rule iffE1 (sub (hyp h)) (sub (hyp ha)))"), parse_judgment("b : true")));
    CHECK(judgment_eq(chk(ctx2, "(rule iffE2 (sub (hyp h)) (sub (hyp hb)))"), parse_judgment("a : true")));
    CHECK(judgment_eq(chk(ctx2, "(rule iffE (sub (hyp h)) (sub (hyp ha)))"), parse_judgment("b : true")));
    CHECK(judgment_eq(chk(ctx2, "(rule iffE (dir reverse) (sub (hyp h)) (sub (hyp hb)))"),
                      parse_judgment("a : true")));
    CHECK(judgment_eq(chk(ctx2, "(rule iffE3 (sub (hyp h)))"), parse_judgment("(a -> b) : true")));
    CHECK(judgment_eq(chk(ctx2, "(rule iffE4 (sub (hyp h)))"), parse_judgment("(b -> a) : true")));
}

TEST_CASE("iffI composes the two implications") {
    Context ctx = ctx_of({{"ha", "a : bool"}, {"hb", "b : bool"}, {"k1", "b : true"}, {"k2", "a : true"}});
    Judgment j = chk(ctx, "(rule iffI (sub (hyp ha)) (sub (hyp hb)) "
                          "(case ((l1 a : true)) (hyp k1)) (case ((l2 b : true)) (hyp k2)))");
    CHECK(judgment_eq(j, parse_judgment("(a <-> b) : true")));
}

TEST_CASE("contradiction family") {
    Context ctx = ctx_of({{"hb", "a : bool"}, {"k", "a : true"}});
    CHECK(judgment_eq(chk(ctx, "(rule contra (sub (hyp hb)) (case ((l a : false)) (hyp k)))"),
                      parse_judgment("a : true")));
    CHECK(judgment_eq(chk(ctx, "(rule contraPos (sub (hyp hb)) (case ((l (not a) : true)) (hyp k)))"),
                      parse_judgment("a : true")));
    Context ctx2 = ctx_of({{"hb", "a : bool"}, {"k", "(not a) : true"}});
    CHECK(judgment_eq(chk(ctx2, "(rule negI (sub (hyp hb)) (case ((l a : true)) (hyp k)))"),
                      parse_judgment("(not a) : true")));
    // explosion
    Context ctx3 = ctx_of({{"hn", "(not a) : true"}, {"ht", "a : true"}});
    CHECK(judgment_eq(chk(ctx3, "(rule negE (terms b) (sub (hyp hn)) (sub (hyp ht)))"),
                      parse_judgment("b : true")));
}

TEST_CASE("double negation and the negation typing equivalence") {
    Context ctx = ctx_of({{"h", "a : true"}});
    Judgment dn = chk(ctx, "(rule dblNegIE (sub (hyp h)))");
    CHECK(judgment_eq(dn, parse_judgment("(not (not a)) : true")));
    Context ctx2;
    ctx2.hyps.emplace_back("h", dn);
    CHECK(judgment_eq(chk(ctx2, "(rule dblNegIE (dir reverse) (sub (hyp h)))"), parse_judgment("a : true")));

    Context ctx3 = ctx_of({{"h", "a : bool"}});
    Judgment nb = chk(ctx3, "(rule negTIE (sub (hyp h)))");
    CHECK(judgment_eq(nb, parse_judgment("(not a) : bool")));
    Context ctx4;
    ctx4.hyps.emplace_back("h", nb);
    CHECK(judgment_eq(chk(ctx4, "(rule negTIE (dir reverse) (sub (hyp h)))"), parse_judgment("a : bool")));
}

TEST_CASE("connective typing rules") {
    Context ctx = ctx_of({{"ha", "a : bool"}, {"hb", "b : bool"}});
    CHECK(judgment_eq(chk(ctx, "(rule andTI (sub (hyp ha)) (sub (hyp hb)))"),
                      parse_judgment("(a and b) : bool")));
    CHECK(judgment_eq(chk(ctx, "(rule orTI (sub (hyp ha)) (sub (hyp hb)))"),
                      parse_judgment("(a or b) : bool")));

    Context ctx2 = ctx_of({{"h", "(a and b) : bool"}, {"k", "c : true"}});
    CHECK(judgment_eq(chk(ctx2, "(rule andTE (sub (hyp h)) (case ((l1 a : bool)) (hyp k)) "
                                "(case ((l2 b : bool)) (hyp k)))"),
                      parse_judgment("c : true")));
    Context ctx3 = ctx_of({{"h", "(a or b) : bool"}, {"k", "c : true"}});
    CHECK(judgment_eq(chk(ctx3, "(rule orTE (sub (hyp h)) (case ((l1 a : bool)) (hyp k)) "
                                "(case ((l2 b : bool)) (hyp k)))"),
                      parse_judgment("c : true")));
}

TEST_CASE("quantified induction composes ind, natTI and forallI1") {
    // forall n . (n : nat) -> (S(n) : nat), by quantified induction on n
    Judgment j = chk({}, "(rule quantInd (tpl x  S(x) : nat)"
                         " (sub (rule judgTI (sub (rule succIE (sub (rule zeroI))))))"
                         " (case ((hx x : nat) (hp S(x) : nat : true))"
                         "   (rule judgTI (sub (rule succIE (sub (rule judgTE (sub (hyp hp)))))))))");
    CHECK(judgment_eq(j, parse_judgment("(forall x . x : nat -> S(x) : nat) : true")));
}

TEST_CASE("promoted rules answer through their primitives") {
    Context ctx = ctx_of({{"ha", "a : obj"}, {"hb", "b : obj"}});
    CHECK(judgment_eq(chk(ctx, "(rule neTI (sub (hyp ha)) (sub (hyp hb)))"), parse_judgment("a != b : bool")));
    Context ctx2 = ctx_of({{"h", "(a <-> b) : bool"}});
    CHECK(judgment_eq(chk(ctx2, "(rule iffTE1 (sub (hyp h)))"), parse_judgment("a : bool")));
    CHECK(judgment_eq(chk(ctx2, "(rule iffTE2 (sub (hyp h)))"), parse_judgment("b : bool")));
    CHECK(derived_registry().is_promoted("neTI"));
    CHECK_FALSE(derived_registry().is_promoted("impI"));
}

TEST_CASE("expansion is deterministic") {
    Context ctx = ctx_of({{"hi", "(a -> b) : true"}, {"ha", "a : true"}});
    ProofPtr node = parse_proof("(rule impE (sub (hyp hi)) (sub (hyp ha)))");
    CheckOptions opts;
    opts.extension = &derived_registry();
    CheckFn fn = [&](const Context& c, const ProofPtr& q) {
        return check(DefEnv{}, CheckConfig{}, c, q, opts);
    };
    ProofPtr e1 = derived_registry().expand(DefEnv{}, CheckConfig{}, ctx, *node, fn);
    ProofPtr e2 = derived_registry().expand(DefEnv{}, CheckConfig{}, ctx, *node, fn);
    CHECK(print_proof(e1) == print_proof(e2));
    // the expansion is pure primitive
    std::function<void(const ProofPtr&)> assert_primitive = [&](const ProofPtr& p) {
        if (p->kind == ProofKind::Rule) CHECK(is_primitive_rule(p->name));
        for (const auto& s : p->subs) assert_primitive(s.proof);
    };
    assert_primitive(e1);
}

TEST_CASE("unknown derived rules are reported") {
    try {
        chk({}, "(rule noSuchRule)");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == ErrorCode::UnknownRule);
    }
}
