#include "gd/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace gd {

ProofPtr mk_hyp(std::string label) {
    auto n = std::make_shared<ProofNode>();
    n->kind = ProofKind::Hyp;
    n->name = std::move(label);
    return n;
}
ProofPtr mk_usedef(std::string symbol) {
    auto n = std::make_shared<ProofNode>();
    n->kind = ProofKind::UseDef;
    n->name = std::move(symbol);
    return n;
}
ProofPtr mk_lemma(std::string name) {
    auto n = std::make_shared<ProofNode>();
    n->kind = ProofKind::Lemma;
    n->name = std::move(name);
    return n;
}
ProofPtr mk_rule(std::string name, std::vector<SubProof> subs) {
    auto n = std::make_shared<ProofNode>();
    n->kind = ProofKind::Rule;
    n->name = std::move(name);
    n->subs = std::move(subs);
    return n;
}

namespace {

enum class Tok {
    Ident,
    Zero,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Dot,
    Comma,
    Colon,
    Assign,    // :=
    FatArrow,  // =>
    Bar,
    Eq,
    Ne,
    Arrow,   // ->
    IffOp,   // <->
    End,
};

struct Token {
    Tok kind;
    std::string text;  // identifier / keyword spelling
    Span span;
};

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> r = {"not",  "and",  "or",   "forall", "exists", "if",    "then",
                                            "else", "case", "of",   "true",   "false",  "S",     "def",
                                            "theorem", "pragma", "bool", "obj", "nat"};
    return r;
}

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;
    std::vector<Token> toks;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(const std::string& msg, Span sp) { throw Error(ErrorCode::SyntaxError, msg, sp); }

    bool match(const char* s) {
        size_t n = std::char_traits<char>::length(s);
        if (src.compare(pos, n, s) != 0) return false;
        pos += n;
        col += static_cast<int>(n);
        return true;
    }

    void push(Tok k, std::string text, Span sp) { toks.push_back({k, std::move(text), sp}); }

    void run() {
        while (pos < src.size()) {
            char c = src[pos];
            Span sp{line, col};
            if (c == '\n') {
                ++pos;
                ++line;
                col = 1;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
                ++col;
                continue;
            }
            if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') ++pos, ++col;
                continue;
            }
            // Unicode aliases for the usual logical notation.
            if (match("¬")) { push(Tok::Ident, "not", sp); continue; }        // ¬
            if (match("∧")) { push(Tok::Ident, "and", sp); continue; }        // ∧
            if (match("∨")) { push(Tok::Ident, "or", sp); continue; }         // ∨
            if (match("→")) { push(Tok::Arrow, "", sp); continue; }           // →
            if (match("↔")) { push(Tok::IffOp, "", sp); continue; }           // ↔
            if (match("∀")) { push(Tok::Ident, "forall", sp); continue; }     // ∀
            if (match("∃")) { push(Tok::Ident, "exists", sp); continue; }     // ∃
            if (match("≠")) { push(Tok::Ne, "", sp); continue; }              // ≠
            if (match("≡")) { push(Tok::Assign, "", sp); continue; }          // ≡
            switch (c) {
                case '(': push(Tok::LParen, "", sp); ++pos; ++col; continue;
                case ')': push(Tok::RParen, "", sp); ++pos; ++col; continue;
                case '{': push(Tok::LBrace, "", sp); ++pos; ++col; continue;
                case '}': push(Tok::RBrace, "", sp); ++pos; ++col; continue;
                case '.': push(Tok::Dot, "", sp); ++pos; ++col; continue;
                case ',': push(Tok::Comma, "", sp); ++pos; ++col; continue;
                case '|': push(Tok::Bar, "", sp); ++pos; ++col; continue;
            }
            if (match(":=")) { push(Tok::Assign, "", sp); continue; }
            if (c == ':') { push(Tok::Colon, "", sp); ++pos; ++col; continue; }
            if (match("=>")) { push(Tok::FatArrow, "", sp); continue; }
            if (c == '=') { push(Tok::Eq, "", sp); ++pos; ++col; continue; }
            if (match("!=")) { push(Tok::Ne, "", sp); continue; }
            if (match("->")) { push(Tok::Arrow, "", sp); continue; }
            if (match("<->")) { push(Tok::IffOp, "", sp); continue; }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos, ++col;
                std::string num = src.substr(start, pos - start);
                if (num == "0") { push(Tok::Zero, num, sp); continue; }
                fail("numeral '" + num + "' is not part of the grammar (only 0 and S(..))", sp);
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos;
                while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
                                            src[pos] == '\''))
                    ++pos, ++col;
                push(Tok::Ident, src.substr(start, pos - start), sp);
                continue;
            }
            fail(std::string("unexpected character '") + c + "'", sp);
        }
        push(Tok::End, "", Span{line, col});
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t at = 0;
    const SymbolSet* symbols;
    std::vector<std::string> bound;  // binder stack

    Parser(const std::string& text, const SymbolSet& syms) : symbols(&syms) {
        Lexer lx(text);
        lx.run();
        toks = std::move(lx.toks);
    }

    const Token& peek() const { return toks[at]; }
    const Token& next() { return toks[at++]; }
    bool at_end() const { return peek().kind == Tok::End; }

    [[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::SyntaxError, msg, peek().span); }

    bool is_kw(const Token& t, const char* kw) const { return t.kind == Tok::Ident && t.text == kw; }
    bool peek_kw(const char* kw) const { return is_kw(peek(), kw); }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++at;
    }
    void expect_kw(const char* kw) {
        if (!peek_kw(kw)) fail(std::string("expected '") + kw + "'");
        ++at;
    }

    std::string expect_ident(const char* what) {
        if (peek().kind != Tok::Ident) fail(std::string("expected ") + what);
        std::string s = next().text;
        if (reserved_words().count(s))
            throw Error(ErrorCode::ReservedWord, "'" + s + "' is reserved", toks[at - 1].span);
        return s;
    }

    bool is_bound(const std::string& name) const {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            if (*it == name) return true;
        return false;
    }

    std::optional<JudgKind> kind_of(const std::string& s) const {
        if (s == "true") return JudgKind::True;
        if (s == "false") return JudgKind::False;
        if (s == "bool") return JudgKind::Bool;
        if (s == "obj") return JudgKind::Obj;
        if (s == "nat") return JudgKind::Nat;
        return std::nullopt;
    }

    JudgKind expect_kind() {
        if (peek().kind != Tok::Ident) fail("expected a kind (true/false/bool/obj/nat)");
        auto k = kind_of(peek().text);
        if (!k) fail("expected a kind (true/false/bool/obj/nat)");
        ++at;
        return *k;
    }

    // term := iff
    TermPtr term() { return iff(); }

    TermPtr iff() {
        TermPtr l = imp();
        if (peek().kind == Tok::IffOp) {
            ++at;
            return mk_iff(l, iff());
        }
        return l;
    }

    TermPtr imp() {
        TermPtr l = or_();
        if (peek().kind == Tok::Arrow) {
            ++at;
            return mk_imp(l, imp());
        }
        return l;
    }

    TermPtr or_() {
        TermPtr l = and_();
        while (peek_kw("or")) {
            ++at;
            l = mk_or(l, and_());
        }
        return l;
    }

    TermPtr and_() {
        TermPtr l = unary();
        while (peek_kw("and")) {
            ++at;
            l = mk_and(l, unary());
        }
        return l;
    }

    TermPtr unary() {
        if (peek_kw("not")) {
            ++at;
            return mk_not(unary());
        }
        if (peek_kw("forall") || peek_kw("exists")) return quantifier();
        if (peek_kw("if")) return if_term();
        return ascription();
    }

    TermPtr quantifier() {
        bool is_forall = next().text == "forall";
        std::string x = expect_ident("a bound variable");
        std::optional<JudgKind> ann;
        if (peek().kind == Tok::Colon) {
            ++at;
            ann = expect_kind();
        }
        expect(Tok::Dot, "'.' after quantifier binder");
        bound.push_back(x);
        TermPtr body = term();  // body is maximal
        bound.pop_back();
        return desugar_typed_quantifier(is_forall, x, ann, body);
    }

    TermPtr if_term() {
        expect_kw("if");
        TermPtr c = term();
        expect_kw("then");
        TermPtr a = term();
        expect_kw("else");
        TermPtr b = term();
        return mk_if(c, a, b);
    }

    // ascription binds tighter than the connectives: `x : nat -> p` is
    // Imp(Has(x,nat), p).
    TermPtr ascription() {
        TermPtr t = equality();
        while (peek().kind == Tok::Colon) {
            ++at;
            t = mk_has(t, expect_kind());
        }
        return t;
    }

    TermPtr equality() {
        TermPtr l = core();
        if (peek().kind == Tok::Eq) {
            ++at;
            return mk_eq(l, core());
        }
        if (peek().kind == Tok::Ne) {
            ++at;
            return mk_ne(l, core());
        }
        return l;
    }

    TermPtr core() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Zero:
                ++at;
                return mk_zero();
            case Tok::LParen: {
                ++at;
                TermPtr inner = term();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::Ident:
                break;
            default:
                fail("expected a term");
        }
        if (t.text == "true") { ++at; return mk_true(); }
        if (t.text == "false") { ++at; return mk_false(); }
        if (t.text == "S") {
            ++at;
            expect(Tok::LParen, "'(' after S");
            TermPtr inner = term();
            expect(Tok::RParen, "')'");
            return mk_succ(inner);
        }
        if (t.text == "case") return case_term();
        if (reserved_words().count(t.text)) fail("unexpected '" + t.text + "'");
        std::string name = next().text;
        if (peek().kind == Tok::LParen) {
            ++at;
            std::vector<TermPtr> args;
            if (peek().kind != Tok::RParen) {
                args.push_back(term());
                while (peek().kind == Tok::Comma) {
                    ++at;
                    args.push_back(term());
                }
            }
            expect(Tok::RParen, "')'");
            return mk_app(name, std::move(args));
        }
        if (!is_bound(name) && symbols->count(name)) return mk_app(name, {});
        return mk_var(name);
    }

    TermPtr case_term() {
        expect_kw("case");
        TermPtr scr = term();
        expect_kw("of");
        expect(Tok::LBrace, "'{'");
        expect(Tok::Zero, "'0' pattern");
        expect(Tok::FatArrow, "'=>'");
        TermPtr zb = term();
        expect(Tok::Bar, "'|'");
        expect_kw("S");
        expect(Tok::LParen, "'('");
        std::string pv = expect_ident("the predecessor variable");
        expect(Tok::RParen, "')'");
        expect(Tok::FatArrow, "'=>'");
        bound.push_back(pv);
        TermPtr sb = term();
        bound.pop_back();
        expect(Tok::RBrace, "'}'");
        return mk_case(scr, zb, pv, sb);
    }

    // A judgment is a term whose outermost node is an ascription; the last
    // `:` separates subject from kind.
    Judgment judgment() {
        Span sp = peek().span;
        TermPtr t = term();
        if (t->kind() != TermKind::Has)
            throw Error(ErrorCode::SyntaxError, "expected a judgment 'term : kind'", sp);
        return judg(t->kid(0), t->judg());
    }

    // ---- proof s-expressions ----

    ProofPtr proof() {
        Span sp = peek().span;
        expect(Tok::LParen, "'(' starting a proof");
        if (peek().kind != Tok::Ident) fail("expected hyp/usedef/lemma/rule");
        std::string head = next().text;
        ProofPtr out;
        if (head == "hyp") {
            out = mk_hyp(expect_ident("a hypothesis label"));
        } else if (head == "usedef") {
            out = mk_usedef(expect_ident("a defined symbol"));
        } else if (head == "lemma") {
            out = mk_lemma(expect_ident("a lemma name"));
        } else if (head == "rule") {
            out = rule_body(sp);
        } else {
            fail("expected hyp/usedef/lemma/rule, got '" + head + "'");
        }
        expect(Tok::RParen, "')'");
        const_cast<ProofNode&>(*out).span = sp;
        return out;
    }

    ProofPtr rule_body(Span sp) {
        auto n = std::make_shared<ProofNode>();
        n->span = sp;
        if (peek().kind != Tok::Ident) fail("expected a rule name");
        n->name = next().text;
        while (peek().kind == Tok::LParen) {
            ++at;
            if (peek().kind != Tok::Ident) fail("expected a rule clause");
            std::string clause = next().text;
            if (clause == "dir") {
                if (peek().kind != Tok::Ident) fail("expected forward/reverse");
                std::string d = next().text;
                if (d == "reverse") n->reverse = true;
                else if (d != "forward") fail("expected forward/reverse");
            } else if (clause == "tpl") {
                std::string hole = expect_ident("the template hole variable");
                bound.push_back(hole);
                TermPtr body = term();
                bound.pop_back();
                n->tpl = Template{hole, body};
            } else if (clause == "terms") {
                while (peek().kind != Tok::RParen) n->terms.push_back(term());
            } else if (clause == "args") {
                while (peek().kind != Tok::RParen) n->args.push_back(term());
            } else if (clause == "caseterm") {
                n->case_term = term();
            } else if (clause == "ifterm") {
                n->if_term = term();
            } else if (clause == "sub") {
                n->subs.push_back(SubProof{{}, proof()});
            } else if (clause == "case") {
                SubProof sub;
                expect(Tok::LParen, "'(' starting hypothesis bindings");
                while (peek().kind == Tok::LParen) {
                    ++at;
                    std::string label = expect_ident("a hypothesis label");
                    sub.intro.push_back(HypBinding{label, judgment()});
                    expect(Tok::RParen, "')'");
                }
                expect(Tok::RParen, "')' ending hypothesis bindings");
                sub.proof = proof();
                n->subs.push_back(std::move(sub));
            } else {
                fail("unknown rule clause '" + clause + "'");
            }
            expect(Tok::RParen, "')'");
        }
        return n;
    }

    // ---- file items ----

    SourceFile file(const std::string& path) {
        SourceFile f;
        f.path = path;
        std::set<std::string> proof_names;
        while (!at_end()) {
            Span sp = peek().span;
            if (peek_kw("def")) {
                ++at;
                DefItem item;
                item.span = sp;
                item.def.symbol = expect_ident("a symbol name");
                if (peek().kind == Tok::LParen) {
                    ++at;
                    if (peek().kind != Tok::RParen) {
                        item.def.params.push_back(expect_ident("a parameter"));
                        while (peek().kind == Tok::Comma) {
                            ++at;
                            item.def.params.push_back(expect_ident("a parameter"));
                        }
                    }
                    expect(Tok::RParen, "')'");
                }
                expect(Tok::Assign, "':='");
                for (const auto& p : item.def.params) bound.push_back(p);
                item.def.body = term();
                for (size_t i = 0; i < item.def.params.size(); ++i) bound.pop_back();
                f.items.push_back(std::move(item));
            } else if (peek_kw("theorem")) {
                ++at;
                TheoremItem item;
                item.span = sp;
                item.name = expect_ident("a theorem name");
                if (!proof_names.insert(item.name).second)
                    throw Error(ErrorCode::DuplicateProofName, "theorem '" + item.name + "' is declared twice", sp);
                expect(Tok::Colon, "':'");
                item.goal = judgment();
                expect(Tok::Assign, "':='");
                item.proof = proof();
                f.items.push_back(std::move(item));
            } else if (peek_kw("pragma")) {
                ++at;
                PragmaItem item;
                item.span = sp;
                if (peek().kind != Tok::Ident) fail("expected a pragma key");
                item.key = next().text;
                if (peek().kind != Tok::Ident) fail("expected a pragma value");
                item.value = next().text;
                f.items.push_back(std::move(item));
            } else {
                fail("expected def, theorem or pragma");
            }
        }
        return f;
    }
};

}  // namespace

SymbolSet scan_defined_symbols(const std::string& text) {
    Lexer lx(text);
    lx.run();
    SymbolSet out;
    for (size_t i = 0; i + 1 < lx.toks.size(); ++i)
        if (lx.toks[i].kind == Tok::Ident && lx.toks[i].text == "def" && lx.toks[i + 1].kind == Tok::Ident)
            out.insert(lx.toks[i + 1].text);
    return out;
}

TermPtr parse_term(const std::string& text, const SymbolSet& symbols) {
    Parser p(text, symbols);
    TermPtr t = p.term();
    if (!p.at_end()) p.fail("trailing input after term");
    return t;
}

Judgment parse_judgment(const std::string& text, const SymbolSet& symbols) {
    Parser p(text, symbols);
    Judgment j = p.judgment();
    if (!p.at_end()) p.fail("trailing input after judgment");
    return j;
}

ProofPtr parse_proof(const std::string& text, const SymbolSet& symbols) {
    Parser p(text, symbols);
    ProofPtr pr = p.proof();
    if (!p.at_end()) p.fail("trailing input after proof");
    return pr;
}

SourceFile parse_file(const std::string& text, const std::string& path, const SymbolSet& pre_defined) {
    SymbolSet syms = scan_defined_symbols(text);
    syms.insert(pre_defined.begin(), pre_defined.end());
    Parser p(text, syms);
    return p.file(path);
}

// ---- printing ----

namespace {

// Precedence levels, loosest to tightest: 0 iff, 1 imp, 2 or, 3 and,
// 4 prefix (not/quantifier/if), 5 ascription, 6 eq/ne, 7 atoms.
// `tail` is true when the term extends to a natural delimiter, which lets
// maximal-body constructs print without parentheses.
void print_rec(std::ostringstream& os, const TermPtr& t, int min_prec, bool tail);

void wrapped(std::ostringstream& os, const TermPtr& t, int prec, int min_prec, bool tail,
             const std::function<void(bool)>& body) {
    bool parens = prec < min_prec || ((t->kind() == TermKind::Forall || t->kind() == TermKind::Exists ||
                                       t->kind() == TermKind::If) &&
                                      !tail);
    if (parens) os << '(';
    body(parens ? true : tail);
    if (parens) os << ')';
}

void print_rec(std::ostringstream& os, const TermPtr& t, int min_prec, bool tail) {
    switch (t->kind()) {
        case TermKind::Var:
            os << t->name();
            return;
        case TermKind::LitTrue:
            os << "true";
            return;
        case TermKind::LitFalse:
            os << "false";
            return;
        case TermKind::Zero:
            os << '0';
            return;
        case TermKind::Succ:
            os << "S(";
            print_rec(os, t->kid(0), 0, true);
            os << ')';
            return;
        case TermKind::App:
            os << t->name();
            if (t->arity() > 0) {
                os << '(';
                for (size_t i = 0; i < t->arity(); ++i) {
                    if (i) os << ", ";
                    print_rec(os, t->kid(i), 0, true);
                }
                os << ')';
            }
            return;
        case TermKind::Case:
            os << "case ";
            print_rec(os, t->kid(0), 0, false);
            os << " of { 0 => ";
            print_rec(os, t->kid(1), 0, false);
            os << " | S(" << t->name() << ") => ";
            print_rec(os, t->kid(2), 0, false);
            os << " }";
            return;
        case TermKind::Not:
            wrapped(os, t, 4, min_prec, tail, [&](bool inner_tail) {
                os << "not ";
                print_rec(os, t->kid(0), 5, inner_tail);
            });
            return;
        case TermKind::Forall:
        case TermKind::Exists:
            wrapped(os, t, 4, min_prec, tail, [&](bool inner_tail) {
                os << (t->kind() == TermKind::Forall ? "forall " : "exists ") << t->name() << " . ";
                print_rec(os, t->kid(0), 0, inner_tail);
            });
            return;
        case TermKind::If:
            wrapped(os, t, 4, min_prec, tail, [&](bool inner_tail) {
                os << "if ";
                print_rec(os, t->kid(0), 0, false);
                os << " then ";
                print_rec(os, t->kid(1), 0, false);
                os << " else ";
                print_rec(os, t->kid(2), 0, inner_tail);
            });
            return;
        case TermKind::Has:
            wrapped(os, t, 5, min_prec, tail, [&](bool) {
                print_rec(os, t->kid(0), 6, false);
                os << " : " << judg_kind_name(t->judg());
            });
            return;
        case TermKind::Eq:
        case TermKind::Ne:
            wrapped(os, t, 6, min_prec, tail, [&](bool) {
                print_rec(os, t->kid(0), 7, false);
                os << (t->kind() == TermKind::Eq ? " = " : " != ");
                print_rec(os, t->kid(1), 7, false);
            });
            return;
        case TermKind::And:
        case TermKind::Or: {
            int prec = t->kind() == TermKind::And ? 3 : 2;
            const char* op = t->kind() == TermKind::And ? " and " : " or ";
            wrapped(os, t, prec, min_prec, tail, [&](bool inner_tail) {
                print_rec(os, t->kid(0), prec, false);
                os << op;
                print_rec(os, t->kid(1), prec + 1, inner_tail);
            });
            return;
        }
        case TermKind::Imp:
        case TermKind::Iff: {
            int prec = t->kind() == TermKind::Imp ? 1 : 0;
            const char* op = t->kind() == TermKind::Imp ? " -> " : " <-> ";
            wrapped(os, t, prec, min_prec, tail, [&](bool inner_tail) {
                print_rec(os, t->kid(0), prec + 1, false);
                os << op;
                print_rec(os, t->kid(1), prec, inner_tail);
            });
            return;
        }
    }
}

void print_judgment_subject(std::ostringstream& os, const Judgment& j) {
    // The subject sits to the left of the judgment's own ':', so it prints at
    // ascription precedence.
    print_rec(os, j.subject, 5, false);
    os << " : " << judg_kind_name(j.kind);
}

void print_proof_rec(std::ostringstream& os, const ProofPtr& p, int indent) {
    std::string pad(indent, ' ');
    switch (p->kind) {
        case ProofKind::Hyp:
            os << pad << "(hyp " << p->name << ")";
            return;
        case ProofKind::UseDef:
            os << pad << "(usedef " << p->name << ")";
            return;
        case ProofKind::Lemma:
            os << pad << "(lemma " << p->name << ")";
            return;
        case ProofKind::Rule:
            break;
    }
    os << pad << "(rule " << p->name;
    if (p->reverse) os << " (dir reverse)";
    if (p->tpl) {
        os << " (tpl " << p->tpl->hole << " ";
        print_rec(os, p->tpl->body, 0, true);
        os << ")";
    }
    if (!p->terms.empty()) {
        os << " (terms";
        for (const auto& t : p->terms) {
            os << ' ';
            print_rec(os, t, 7, false);  // each term self-delimiting: atoms or parenthesized
        }
        os << ')';
    }
    if (!p->args.empty()) {
        os << " (args";
        for (const auto& t : p->args) {
            os << ' ';
            print_rec(os, t, 7, false);
        }
        os << ')';
    }
    if (p->case_term) {
        os << " (caseterm ";
        print_rec(os, p->case_term, 0, true);
        os << ')';
    }
    if (p->if_term) {
        os << " (ifterm ";
        print_rec(os, p->if_term, 0, true);
        os << ')';
    }
    for (const auto& s : p->subs) {
        os << '\n';
        std::string spad(indent + 2, ' ');
        if (s.intro.empty()) {
            os << spad << "(sub\n";
            print_proof_rec(os, s.proof, indent + 4);
            os << ")";
        } else {
            os << spad << "(case (";
            for (size_t i = 0; i < s.intro.size(); ++i) {
                if (i) os << ' ';
                os << '(' << s.intro[i].label << ' ';
                print_judgment_subject(os, s.intro[i].judgment);
                os << ')';
            }
            os << ")\n";
            print_proof_rec(os, s.proof, indent + 4);
            os << ")";
        }
    }
    os << ")";
}

}  // namespace

std::string print_term(const TermPtr& t) {
    std::ostringstream os;
    print_rec(os, t, 0, true);
    return os.str();
}

std::string print_judgment(const Judgment& j) {
    std::ostringstream os;
    print_judgment_subject(os, j);
    return os.str();
}

std::string print_proof(const ProofPtr& p, int indent) {
    std::ostringstream os;
    print_proof_rec(os, p, indent);
    return os.str();
}

std::string print_item(const SourceItem& item) {
    std::ostringstream os;
    if (const auto* d = std::get_if<DefItem>(&item)) {
        os << "def " << d->def.symbol;
        if (!d->def.params.empty()) {
            os << '(';
            for (size_t i = 0; i < d->def.params.size(); ++i) {
                if (i) os << ", ";
                os << d->def.params[i];
            }
            os << ')';
        }
        os << " := " << print_term(d->def.body) << '\n';
    } else if (const auto* t = std::get_if<TheoremItem>(&item)) {
        os << "theorem " << t->name << " : " << print_judgment(t->goal) << " :=\n";
        os << print_proof(t->proof, 2) << '\n';
    } else if (const auto* p = std::get_if<PragmaItem>(&item)) {
        os << "pragma " << p->key << ' ' << p->value << '\n';
    }
    return os.str();
}

std::string print_file(const SourceFile& f) {
    std::ostringstream os;
    for (const auto& item : f.items) os << print_item(item) << '\n';
    return os.str();
}

}  // namespace gd
