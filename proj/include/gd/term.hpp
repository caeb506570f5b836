#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace gd {

// Kind tag for type judgments `t : kind` and for judgment-as-term nodes.
enum class JudgKind { True, False, Bool, Obj, Nat };

const char* judg_kind_name(JudgKind k);

enum class TermKind {
    Var,
    LitTrue,
    LitFalse,
    Not,
    And,
    Or,
    Imp,
    Iff,
    Forall,
    Exists,
    Eq,
    Ne,
    Zero,
    Succ,
    App,   // application of a defined symbol; arity checked against the DefEnv
    If,
    Case,  // case t of { 0 => z | S(p) => s }, binds the predecessor variable in s
    Has,   // judgment used as a term: `t : kind`
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term node. Shape by kind:
//   Var         name
//   Forall/Exists  name = bound variable, kid(0) = body
//   App         name = symbol, kids = arguments
//   Case        kid(0) = scrutinee, kid(1) = zero branch, name = predecessor
//               variable, kid(2) = successor branch
//   If          kid(0) = condition, kid(1) = then, kid(2) = else
//   Has         kid(0) = subject, judg = kind
// Binary connectives and Eq/Ne use kid(0), kid(1); Not/Succ use kid(0).
class Term {
public:
    Term(TermKind kind, std::string name, JudgKind judg, std::vector<TermPtr> kids)
        : kind_(kind), name_(std::move(name)), judg_(judg), kids_(std::move(kids)) {}

    TermKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    JudgKind judg() const { return judg_; }
    const std::vector<TermPtr>& kids() const { return kids_; }
    const TermPtr& kid(size_t i) const { return kids_[i]; }
    size_t arity() const { return kids_.size(); }

private:
    TermKind kind_;
    std::string name_;
    JudgKind judg_;
    std::vector<TermPtr> kids_;
};

// Constructors.
TermPtr mk_var(std::string name);
TermPtr mk_true();
TermPtr mk_false();
TermPtr mk_not(TermPtr t);
TermPtr mk_and(TermPtr l, TermPtr r);
TermPtr mk_or(TermPtr l, TermPtr r);
TermPtr mk_imp(TermPtr l, TermPtr r);
TermPtr mk_iff(TermPtr l, TermPtr r);
TermPtr mk_forall(std::string x, TermPtr body);
TermPtr mk_exists(std::string x, TermPtr body);
TermPtr mk_eq(TermPtr l, TermPtr r);
TermPtr mk_ne(TermPtr l, TermPtr r);
TermPtr mk_zero();
TermPtr mk_succ(TermPtr t);
TermPtr mk_app(std::string symbol, std::vector<TermPtr> args);
TermPtr mk_if(TermPtr cond, TermPtr then_t, TermPtr else_t);
TermPtr mk_case(TermPtr scrutinee, TermPtr zero_branch, std::string pred_var, TermPtr succ_branch);
TermPtr mk_has(TermPtr t, JudgKind kind);

// Builds S(S(...S(0)...)) with n applications of S.
TermPtr mk_numeral(unsigned long long n);

// Variables with a free occurrence in t.
std::set<std::string> free_vars(const TermPtr& t);

// Capture-avoiding substitution of s for free occurrences of x in t.
// Binders are renamed deterministically: strip any trailing digits from the
// bound name and append the smallest positive numeric suffix avoiding the
// variables in scope.
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& s);

// Simultaneous capture-avoiding substitution (used for definition expansion).
TermPtr subst_parallel(const TermPtr& t, const std::vector<std::pair<std::string, TermPtr>>& map);

// Structural equality up to consistent renaming of bound variables.
bool alpha_eq(const TermPtr& a, const TermPtr& b);

// Single-hole syntactic template: the hole variable may occur any number of
// times (including zero) free in body.
struct Template {
    std::string hole;
    TermPtr body;
};

// Replaces every free occurrence of tpl.hole in tpl.body with filler.
TermPtr instantiate(const Template& tpl, const TermPtr& filler);

// Picks base{1,2,...} (after stripping trailing digits from base) not in avoid.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

}  // namespace gd
