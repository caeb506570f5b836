// Acceptance suite: runs every acceptance criterion end to end against the
// bundled corpus and prints one verdict line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "gd/corpus.hpp"
#include "gd/derived.hpp"
#include "gd/eval.hpp"
#include "gd/kernel.hpp"
#include "gd/parser.hpp"

using namespace gd;

namespace {

int failures = 0;

void report(const char* name, bool ok, double seconds, const std::string& detail = "") {
    std::printf("%-34s %s  (%.2fs)%s%s\n", name, ok ? "PASS" : "FAIL", seconds,
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

void run(const char* name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(name, ok, secs, ok ? "" : detail);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FileReport check_corpus_file(const std::string& name, SourceFile* src = nullptr) {
    std::string path = bundled_corpus_dir() + "/" + name;
    SourceFile f = parse_file(slurp(path), path);
    if (src) *src = f;
    return check_file(DefEnv{}, CheckConfig{}, f, &derived_registry());
}

// ---- criterion 1: paradox resistance ----
bool paradox_resistance(std::string& detail) {
    FileReport r = check_corpus_file("paradox.gd");
    bool ok = true;
    int seen = 0;
    for (const auto& item : r.items) {
        if (item.name == "liar_bool" || item.name == "curry_pigs") {
            ++seen;
            bool rejected = !item.ok && item.error == ErrorCode::MissingTypingPremise &&
                            item.premise_index == 0 && item.expected_kind == "bool";
            if (!rejected) {
                ok = false;
                detail += item.name + ": " + (item.ok ? "unexpectedly checked" : item.message) + "; ";
            }
        }
    }
    if (seen != 2) {
        detail += "expected both classical paradox scripts in paradox.gd";
        ok = false;
    }
    return ok;
}

// ---- criterion 2: groundedness oracle ----
bool groundedness_oracle(std::string& detail) {
    SourceFile src;
    FileReport r = check_corpus_file("paradox.gd", &src);
    const DefEnv& env = r.final_env;
    SymbolSet syms;
    for (const auto& s : env.symbols()) syms.insert(s);
    auto ev = [&](const char* t, long long fuel) {
        EvalConfig cfg;
        cfg.fuel = fuel;
        return eval(env, cfg, parse_term(t, syms));
    };
    bool ok = true;
    for (long long fuel : {1LL, 10LL, 100LL, 1000LL, 10000LL}) {
        if (!(ev("L", fuel) == v_unknown())) { ok = false; detail += "L not unknown; "; }
        if (!(ev("C", fuel) == v_unknown())) { ok = false; detail += "C not unknown; "; }
    }
    if (!(ev("S2", 10000) == v_true())) { ok = false; detail += "S2 not true; "; }
    if (!(ev("S3", 10000) == v_unknown())) { ok = false; detail += "S3 not unknown; "; }
    return ok;
}

// ---- criterion 3: Kleene truth-table conformance ----
// The oracle tables are spelled out independently of the evaluator: T=0, F=1,
// U=2, and the strong-Kleene connectives as matrices.
bool kleene_conformance(std::string& detail) {
    const int NOT[3] = {1, 0, 2};
    const int AND[3][3] = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
    const int OR[3][3] = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    auto IMP = [&](int p, int q) { return OR[NOT[p]][q]; };
    auto IFF = [&](int p, int q) { return AND[IMP(p, q)][IMP(q, p)]; };

    DefEnv env = DefEnv{}.add(Definition{"U", {}, mk_not(mk_app("U", {}))});
    TermPtr atoms[3] = {mk_true(), mk_false(), mk_app("U", {})};
    EvalConfig cfg;
    auto to3 = [](const Value& v) {
        return v.kind == Value::Kind::True ? 0 : v.kind == Value::Kind::False ? 1 : 2;
    };

    bool ok = true;
    int cases = 0;
    for (int a = 0; a < 3; ++a) {
        if (to3(eval(env, cfg, mk_not(atoms[a]))) != NOT[a]) { ok = false; detail += "not; "; }
        ++cases;
        for (int b = 0; b < 3; ++b) {
            if (to3(eval(env, cfg, mk_and(atoms[a], atoms[b]))) != AND[a][b]) { ok = false; detail += "and; "; }
            if (to3(eval(env, cfg, mk_or(atoms[a], atoms[b]))) != OR[a][b]) { ok = false; detail += "or; "; }
            if (to3(eval(env, cfg, mk_imp(atoms[a], atoms[b]))) != IMP(a, b)) { ok = false; detail += "imp; "; }
            if (to3(eval(env, cfg, mk_iff(atoms[a], atoms[b]))) != IFF(a, b)) { ok = false; detail += "iff; "; }
            cases += 4;
        }
    }
    if (cases != 39) { ok = false; detail += "case count off; "; }
    return ok;
}

// ---- criterion 4: De Morgan, semantic and deductive ----
bool de_morgan(std::string& detail) {
    DefEnv env = DefEnv{}.add(Definition{"U", {}, mk_not(mk_app("U", {}))});
    TermPtr atoms[3] = {mk_true(), mk_false(), mk_app("U", {})};
    EvalConfig cfg;
    bool ok = true;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            Value lhs = eval(env, cfg, mk_not(mk_and(mk_not(atoms[a]), mk_not(atoms[b]))));
            Value rhs = eval(env, cfg, mk_or(atoms[a], atoms[b]));
            if (!(lhs == rhs)) { ok = false; detail += "semantic pair; "; }
        }

    // deductive round trip of the equivalence rules on schematic atoms
    for (const char* rule : {"andIE", "orIE"}) {
        std::string inner = std::string(rule) == "andIE" ? "or" : "and";
        Context ctx;
        ctx.hyps.emplace_back("h", parse_judgment("(not (not a " + inner + " not b)) : true"));
        Judgment mid = check(DefEnv{}, CheckConfig{}, ctx, parse_proof(std::string("(rule ") + rule + " (sub (hyp h)))"));
        Context ctx2;
        ctx2.hyps.emplace_back("h", mid);
        Judgment back = check(DefEnv{}, CheckConfig{}, ctx2,
                              parse_proof(std::string("(rule ") + rule + " (dir reverse) (sub (hyp h)))"));
        if (!judgment_eq(back, ctx.hyps[0].second)) { ok = false; detail += std::string(rule) + " round trip; "; }
    }
    return ok;
}

// ---- criterion 5: derived-rule suite ----
bool derived_suite(std::string& detail) {
    DerivationReport r = verify_all_derivations();
    if (r.results.size() < 20) {
        detail = "only " + std::to_string(r.results.size()) + " derived rules";
        return false;
    }
    for (const auto& res : r.results)
        if (!res.ok) detail += res.name + ": " + res.message + "; ";
    return r.all_ok;
}

// ---- criterion 6: arithmetic development ----
bool arithmetic(std::string& detail) {
    FileReport r = check_corpus_file("arith.gd");
    bool ok = true;
    for (const auto& item : r.items)
        if (!item.ok) { ok = false; detail += item.name + ": " + item.message + "; "; }
    bool saw_plus_total = r.lemmas.count("plus_total") > 0;
    if (!saw_plus_total) { ok = false; detail += "plus_total missing; "; }
    if (!ok) return false;

    const DefEnv& env = r.final_env;
    auto num = [](unsigned long long n) { return mk_numeral(n); };
    EvalConfig cfg;
    cfg.fuel = 300000000LL;

    std::mt19937_64 rng(424242);
    auto rnd = [&](unsigned long long lo, unsigned long long hi) {
        return lo + rng() % (hi - lo + 1);
    };

    // big-integer oracle (values stay far below 2^64 at these bounds)
    for (int i = 0; i < 200 && ok; ++i) {
        unsigned long long a = rnd(0, 50), b = rnd(0, 50);
        if (!(eval(env, cfg, mk_app("plus", {num(a), num(b)})) == v_nat(a + b))) {
            ok = false;
            detail += "plus(" + std::to_string(a) + "," + std::to_string(b) + "); ";
        }
        if (!(eval(env, cfg, mk_app("times", {num(a), num(b)})) == v_nat(a * b))) {
            ok = false;
            detail += "times(" + std::to_string(a) + "," + std::to_string(b) + "); ";
        }
    }
    // exponentiation, capped at 8; evaluate each distinct pair once
    std::map<std::pair<unsigned long long, unsigned long long>, bool> done;
    for (int i = 0; i < 200 && ok; ++i) {
        unsigned long long a = rnd(0, 8), b = rnd(0, 8);
        if (done.count({a, b})) continue;
        done[{a, b}] = true;
        unsigned long long want = 1;
        for (unsigned long long k = 0; k < b; ++k) want *= a;
        if (!(eval(env, cfg, mk_app("exp", {num(a), num(b)})) == v_nat(want))) {
            ok = false;
            detail += "exp(" + std::to_string(a) + "," + std::to_string(b) + "); ";
        }
    }
    // orderings
    for (int i = 0; i < 200 && ok; ++i) {
        unsigned long long a = rnd(0, 50), b = rnd(0, 50);
        struct {
            const char* sym;
            bool want;
        } cases[] = {{"le", a <= b}, {"lt", a < b}, {"ge", a >= b}, {"gt", a > b}};
        for (const auto& c : cases) {
            Value got = eval(env, cfg, mk_app(c.sym, {num(a), num(b)}));
            if (!(got == (c.want ? v_true() : v_false()))) {
                ok = false;
                detail += std::string(c.sym) + "(" + std::to_string(a) + "," + std::to_string(b) + ") -> " +
                          value_to_string(got) + "; ";
            }
        }
    }
    return ok;
}

// ---- criterion 7: Ackermann ----
unsigned long long ack_oracle(unsigned long long x, unsigned long long y,
                              std::map<std::pair<unsigned long long, unsigned long long>, unsigned long long>& memo) {
    if (x == 0) return y + 1;
    auto key = std::make_pair(x, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    unsigned long long v = y == 0 ? ack_oracle(x - 1, 1, memo) : ack_oracle(x - 1, ack_oracle(x, y - 1, memo), memo);
    memo[key] = v;
    return v;
}

bool ackermann(std::string& detail) {
    FileReport r = check_corpus_file("ack.gd");
    bool ok = true;
    for (const auto& item : r.items)
        if (!item.ok) { ok = false; detail += item.name + ": " + item.message + "; "; }
    if (r.lemmas.count("ack_total") == 0) { ok = false; detail += "ack_total missing; "; }
    if (!ok) return false;

    std::map<std::pair<unsigned long long, unsigned long long>, unsigned long long> memo;
    EvalConfig cfg;
    cfg.fuel = 1000000;
    for (unsigned long long x = 0; x <= 3 && ok; ++x)
        for (unsigned long long y = 0; y <= 10 && ok; ++y) {
            Value got = eval(r.final_env, cfg, mk_app("ack", {mk_numeral(x), mk_numeral(y)}));
            unsigned long long want = ack_oracle(x, y, memo);
            if (!(got == v_nat(want))) {
                ok = false;
                detail += "ack(" + std::to_string(x) + "," + std::to_string(y) + ") -> " + value_to_string(got) +
                          " wanted " + std::to_string(want) + "; ";
            }
        }
    if (ok && !(ack_oracle(2, 3, memo) == 9 && ack_oracle(3, 3, memo) == 61)) {
        ok = false;
        detail += "oracle sanity (A(2,3)=9, A(3,3)=61) violated; ";
    }
    return ok;
}

// ---- criterion 8: fuel monotonicity ----
struct RandomProgram {
    DefEnv env;
    TermPtr term;
};

TermPtr random_closed_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars_in_scope,
                           int n_defs) {
    auto sym = [&](unsigned long long k) { return "d" + std::to_string(k % n_defs); };
    std::uniform_int_distribution<int> pick(0, depth <= 1 ? 4 : 12);
    switch (pick(rng)) {
        case 0: return mk_true();
        case 1: return mk_false();
        case 2: return mk_zero();
        case 3:
            if (!vars_in_scope.empty()) return mk_var(vars_in_scope[rng() % vars_in_scope.size()]);
            return mk_zero();
        case 4: return mk_app(sym(rng()), {});
        case 5: return mk_not(random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        case 6:
            return mk_and(random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                          random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        case 7:
            return mk_or(random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                         random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        case 8:
            return mk_imp(random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                          random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        case 9:
            return mk_eq(random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                         random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        case 10: return mk_succ(random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        case 11:
            return mk_if(random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                         random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                         random_closed_term(rng, depth - 1, vars_in_scope, n_defs));
        default: {
            std::vector<std::string> inner = vars_in_scope;
            inner.push_back("p");
            return mk_case(random_closed_term(rng, depth - 1, vars_in_scope, n_defs),
                           random_closed_term(rng, depth - 1, vars_in_scope, n_defs), "p",
                           random_closed_term(rng, depth - 1, inner, n_defs));
        }
    }
}

RandomProgram random_program(std::mt19937_64& rng) {
    RandomProgram p;
    int n_defs = 3;
    for (int k = 0; k < n_defs; ++k) {
        // bodies may reference any d0..d2, giving recursion and mutual cycles
        TermPtr body = random_closed_term(rng, 3, {}, n_defs);
        p.env = p.env.add(Definition{"d" + std::to_string(k), {}, body});
    }
    p.term = random_closed_term(rng, 4, {}, n_defs);
    return p;
}

bool fuel_monotonicity(std::string& detail) {
    std::mt19937_64 rng(987654321);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        RandomProgram p = random_program(rng);
        Value settled = v_unknown();
        bool determinate = false;
        for (long long fuel = 1; fuel <= 64; ++fuel) {
            EvalConfig cfg;
            cfg.fuel = fuel;
            cfg.quant_bound = 8;
            Value v = eval(p.env, cfg, p.term);
            if (determinate) {
                if (!(v == settled)) {
                    ++violations;
                    detail += "instance " + std::to_string(i) + " changed after settling; ";
                    break;
                }
            } else if (v.determinate()) {
                determinate = true;
                settled = v;
            }
        }
    }
    return violations == 0;
}

// ---- criterion 9: differential soundness ----
bool quantifier_free(const TermPtr& t) {
    if (t->kind() == TermKind::Forall || t->kind() == TermKind::Exists) return false;
    for (const auto& k : t->kids())
        if (!quantifier_free(k)) return false;
    return true;
}

bool differential_soundness(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (const char* name : {"paradox.gd", "derived.gd", "arith.gd", "ack.gd", "bool.gd"}) {
        FileReport r = check_corpus_file(name);
        EvalConfig cfg;
        cfg.fuel = 100000;
        cfg.discipline = r.final_discipline;
        for (const auto& item : r.items) {
            if (!item.ok || item.kind != ItemVerdict::Kind::Theorem || !item.goal) continue;
            const Judgment& g = *item.goal;
            if (g.kind != JudgKind::True && g.kind != JudgKind::False) continue;
            if (!free_vars(g.subject).empty() || !quantifier_free(g.subject)) continue;
            Value v = eval(r.final_env, cfg, g.subject);
            Value want = g.kind == JudgKind::True ? v_true() : v_false();
            ++checked;
            if (!(v == want)) {
                ok = false;
                detail += std::string(name) + "/" + item.name + " proved " + print_judgment(g) +
                          " but evaluates to " + value_to_string(v) + "; ";
            }
        }
    }
    if (checked < 5) {
        ok = false;
        detail += "too few closed quantifier-free theorems (" + std::to_string(checked) + "); ";
    }
    return ok;
}

// ---- criterion 10: parse/print round trip ----
TermPtr fuzz_ast(std::mt19937_64& rng, int depth, std::vector<std::string>& bound) {
    std::uniform_int_distribution<int> pick(0, depth <= 1 ? 4 : 16);
    static const char* vars[] = {"x", "y", "z"};
    switch (pick(rng)) {
        case 0: return bound.empty() ? mk_var(vars[rng() % 3]) : mk_var(bound[rng() % bound.size()]);
        case 1: return mk_zero();
        case 2: return mk_true();
        case 3: return mk_false();
        case 4: return mk_app("c0", {});
        case 5: return mk_not(fuzz_ast(rng, depth - 1, bound));
        case 6: return mk_and(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound));
        case 7: return mk_or(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound));
        case 8: return mk_imp(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound));
        case 9: return mk_iff(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound));
        case 10: {
            std::string v = vars[rng() % 3];
            bound.push_back(v);
            TermPtr body = fuzz_ast(rng, depth - 1, bound);
            bound.pop_back();
            return rng() % 2 ? mk_forall(v, body) : mk_exists(v, body);
        }
        case 11: return mk_eq(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound));
        case 12: return mk_ne(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound));
        case 13: return mk_succ(fuzz_ast(rng, depth - 1, bound));
        case 14:
            return mk_if(fuzz_ast(rng, depth - 1, bound), fuzz_ast(rng, depth - 1, bound),
                         fuzz_ast(rng, depth - 1, bound));
        case 15: {
            std::string v = vars[rng() % 3];
            TermPtr scr = fuzz_ast(rng, depth - 1, bound);
            TermPtr zb = fuzz_ast(rng, depth - 1, bound);
            bound.push_back(v);
            TermPtr sb = fuzz_ast(rng, depth - 1, bound);
            bound.pop_back();
            return mk_case(scr, zb, v, sb);
        }
        default:
            return mk_has(mk_app("f1", {fuzz_ast(rng, depth - 1, bound)}),
                          rng() % 2 ? JudgKind::Nat : JudgKind::Bool);
    }
}

bool round_trip(std::string& detail) {
    bool ok = true;
    // every corpus file reparses to an alpha-equal AST
    for (const char* name : {"paradox.gd", "derived.gd", "arith.gd", "ack.gd", "bool.gd"}) {
        std::string path = bundled_corpus_dir() + "/" + std::string(name);
        SourceFile f = parse_file(slurp(path), path);
        SourceFile g = parse_file(print_file(f), path);
        if (f.items.size() != g.items.size()) {
            ok = false;
            detail += std::string(name) + " item count changed; ";
            continue;
        }
        for (size_t i = 0; i < f.items.size(); ++i) {
            const auto* d1 = std::get_if<DefItem>(&f.items[i]);
            const auto* d2 = std::get_if<DefItem>(&g.items[i]);
            if (d1 && d2 && !alpha_eq(d1->def.body, d2->def.body)) {
                ok = false;
                detail += std::string(name) + "/" + d1->def.symbol + "; ";
            }
            const auto* t1 = std::get_if<TheoremItem>(&f.items[i]);
            const auto* t2 = std::get_if<TheoremItem>(&g.items[i]);
            if (t1 && t2 &&
                (!judgment_eq(t1->goal, t2->goal) || print_proof(t1->proof) != print_proof(t2->proof))) {
                ok = false;
                detail += std::string(name) + "/" + t1->name + "; ";
            }
        }
    }
    // 1000 fuzzed ASTs
    SymbolSet syms = {"c0", "f1"};
    std::mt19937_64 rng(20250101);
    for (int i = 0; i < 1000; ++i) {
        std::vector<std::string> bound;
        TermPtr t = fuzz_ast(rng, 5, bound);
        TermPtr back;
        try {
            back = parse_term(print_term(t), syms);
        } catch (const Error& e) {
            ok = false;
            detail += "fuzz " + std::to_string(i) + " failed to reparse: " + e.what() + "; ";
            break;
        }
        if (!alpha_eq(t, back)) {
            ok = false;
            detail += "fuzz " + std::to_string(i) + " not alpha-equal: " + print_term(t) + "; ";
            break;
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::printf("acceptance suite (corpus: %s)\n", bundled_corpus_dir().c_str());
    run("1 paradox-resistance", paradox_resistance);
    run("2 groundedness-oracle", groundedness_oracle);
    run("3 kleene-conformance", kleene_conformance);
    run("4 de-morgan", de_morgan);
    run("5 derived-rule-suite", derived_suite);
    run("6 arithmetic-development", arithmetic);
    run("7 ackermann", ackermann);
    run("8 fuel-monotonicity", fuel_monotonicity);
    run("9 differential-soundness", differential_soundness);
    run("10 round-trip", round_trip);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
