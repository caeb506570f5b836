#include "gd/term.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>

namespace gd {

const char* judg_kind_name(JudgKind k) {
    switch (k) {
        case JudgKind::True: return "true";
        case JudgKind::False: return "false";
        case JudgKind::Bool: return "bool";
        case JudgKind::Obj: return "obj";
        case JudgKind::Nat: return "nat";
    }
    return "?";
}

namespace {
TermPtr node(TermKind k, std::string name, JudgKind j, std::vector<TermPtr> kids) {
    return std::make_shared<const Term>(k, std::move(name), j, std::move(kids));
}
}  // namespace

TermPtr mk_var(std::string name) { return node(TermKind::Var, std::move(name), JudgKind::True, {}); }
TermPtr mk_true() { return node(TermKind::LitTrue, "", JudgKind::True, {}); }
TermPtr mk_false() { return node(TermKind::LitFalse, "", JudgKind::True, {}); }
TermPtr mk_not(TermPtr t) { return node(TermKind::Not, "", JudgKind::True, {std::move(t)}); }
TermPtr mk_and(TermPtr l, TermPtr r) { return node(TermKind::And, "", JudgKind::True, {std::move(l), std::move(r)}); }
TermPtr mk_or(TermPtr l, TermPtr r) { return node(TermKind::Or, "", JudgKind::True, {std::move(l), std::move(r)}); }
TermPtr mk_imp(TermPtr l, TermPtr r) { return node(TermKind::Imp, "", JudgKind::True, {std::move(l), std::move(r)}); }
TermPtr mk_iff(TermPtr l, TermPtr r) { return node(TermKind::Iff, "", JudgKind::True, {std::move(l), std::move(r)}); }
TermPtr mk_forall(std::string x, TermPtr body) {
    return node(TermKind::Forall, std::move(x), JudgKind::True, {std::move(body)});
}
TermPtr mk_exists(std::string x, TermPtr body) {
    return node(TermKind::Exists, std::move(x), JudgKind::True, {std::move(body)});
}
TermPtr mk_eq(TermPtr l, TermPtr r) { return node(TermKind::Eq, "", JudgKind::True, {std::move(l), std::move(r)}); }
TermPtr mk_ne(TermPtr l, TermPtr r) { return node(TermKind::Ne, "", JudgKind::True, {std::move(l), std::move(r)}); }
TermPtr mk_zero() { return node(TermKind::Zero, "", JudgKind::True, {}); }
TermPtr mk_succ(TermPtr t) { return node(TermKind::Succ, "", JudgKind::True, {std::move(t)}); }
TermPtr mk_app(std::string symbol, std::vector<TermPtr> args) {
    return node(TermKind::App, std::move(symbol), JudgKind::True, std::move(args));
}
TermPtr mk_if(TermPtr cond, TermPtr then_t, TermPtr else_t) {
    return node(TermKind::If, "", JudgKind::True, {std::move(cond), std::move(then_t), std::move(else_t)});
}
TermPtr mk_case(TermPtr scrutinee, TermPtr zero_branch, std::string pred_var, TermPtr succ_branch) {
    return node(TermKind::Case, std::move(pred_var), JudgKind::True,
                {std::move(scrutinee), std::move(zero_branch), std::move(succ_branch)});
}
TermPtr mk_has(TermPtr t, JudgKind kind) { return node(TermKind::Has, "", kind, {std::move(t)}); }

TermPtr mk_numeral(unsigned long long n) {
    TermPtr t = mk_zero();
    for (unsigned long long i = 0; i < n; ++i) t = mk_succ(t);
    return t;
}

namespace {

void free_vars_rec(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (t->kind()) {
        case TermKind::Var:
            if (!bound.count(t->name())) out.insert(t->name());
            return;
        case TermKind::Forall:
        case TermKind::Exists: {
            bool was = bound.count(t->name()) > 0;
            bound.insert(t->name());
            free_vars_rec(t->kid(0), bound, out);
            if (!was) bound.erase(t->name());
            return;
        }
        case TermKind::Case: {
            free_vars_rec(t->kid(0), bound, out);
            free_vars_rec(t->kid(1), bound, out);
            bool was = bound.count(t->name()) > 0;
            bound.insert(t->name());
            free_vars_rec(t->kid(2), bound, out);
            if (!was) bound.erase(t->name());
            return;
        }
        default:
            for (const auto& k : t->kids()) free_vars_rec(k, bound, out);
            return;
    }
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
    std::set<std::string> bound, out;
    free_vars_rec(t, bound, out);
    return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    std::string stem = base;
    while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    if (stem.empty()) stem = "v";
    for (unsigned long long i = 1;; ++i) {
        std::string cand = stem + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

namespace {

using Subst = std::map<std::string, TermPtr>;

std::set<std::string> range_free_vars(const Subst& m) {
    std::set<std::string> out;
    for (const auto& [k, v] : m) {
        auto fv = free_vars(v);
        out.insert(fv.begin(), fv.end());
    }
    return out;
}

TermPtr subst_rec(const TermPtr& t, const Subst& m);

// Handles one binder: drops the bound variable from the map and renames it
// when it would capture a free variable of some replacement term.
std::pair<std::string, TermPtr> subst_binder(const std::string& bv, const TermPtr& body, const Subst& m) {
    Subst inner = m;
    inner.erase(bv);
    if (inner.empty()) return {bv, body};

    // Does any replacement that can actually fire inside the body capture bv?
    auto body_fv = free_vars(body);
    bool relevant = false;
    std::set<std::string> incoming;
    for (const auto& [k, v] : inner) {
        if (body_fv.count(k)) {
            relevant = true;
            auto fv = free_vars(v);
            incoming.insert(fv.begin(), fv.end());
        }
    }
    if (!relevant) return {bv, body};
    if (!incoming.count(bv)) return {bv, subst_rec(body, inner)};

    std::set<std::string> avoid = body_fv;
    avoid.insert(incoming.begin(), incoming.end());
    std::string nv = fresh_name(bv, avoid);
    inner[bv] = mk_var(nv);
    return {nv, subst_rec(body, inner)};
}

TermPtr subst_rec(const TermPtr& t, const Subst& m) {
    if (m.empty()) return t;
    switch (t->kind()) {
        case TermKind::Var: {
            auto it = m.find(t->name());
            return it == m.end() ? t : it->second;
        }
        case TermKind::Forall:
        case TermKind::Exists: {
            auto [nv, nb] = subst_binder(t->name(), t->kid(0), m);
            if (nv == t->name() && nb == t->kid(0)) return t;
            return t->kind() == TermKind::Forall ? mk_forall(nv, nb) : mk_exists(nv, nb);
        }
        case TermKind::Case: {
            TermPtr scr = subst_rec(t->kid(0), m);
            TermPtr zb = subst_rec(t->kid(1), m);
            auto [nv, nb] = subst_binder(t->name(), t->kid(2), m);
            return mk_case(scr, zb, nv, nb);
        }
        case TermKind::LitTrue:
        case TermKind::LitFalse:
        case TermKind::Zero:
            return t;
        default: {
            std::vector<TermPtr> kids;
            kids.reserve(t->arity());
            bool changed = false;
            for (const auto& k : t->kids()) {
                kids.push_back(subst_rec(k, m));
                changed = changed || kids.back() != k;
            }
            if (!changed) return t;
            return std::make_shared<const Term>(t->kind(), t->name(), t->judg(), std::move(kids));
        }
    }
}

}  // namespace

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& s) {
    Subst m;
    m[x] = s;
    return subst_rec(t, m);
}

TermPtr subst_parallel(const TermPtr& t, const std::vector<std::pair<std::string, TermPtr>>& map) {
    Subst m;
    for (const auto& [k, v] : map) m[k] = v;
    return subst_rec(t, m);
}

namespace {

// Bound variables are compared positionally via per-side depth maps.
bool alpha_rec(const TermPtr& a, const TermPtr& b, std::map<std::string, int>& da, std::map<std::string, int>& db,
               int depth) {
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case TermKind::Var: {
            auto ia = da.find(a->name());
            auto ib = db.find(b->name());
            if (ia == da.end() && ib == db.end()) return a->name() == b->name();
            if (ia == da.end() || ib == db.end()) return false;
            return ia->second == ib->second;
        }
        case TermKind::App:
            if (a->name() != b->name() || a->arity() != b->arity()) return false;
            break;
        case TermKind::Has:
            if (a->judg() != b->judg()) return false;
            break;
        default:
            break;
    }

    auto with_binder = [&](const std::string& na, const std::string& nb, const TermPtr& ba, const TermPtr& bb) {
        auto oa = da.find(na) == da.end() ? std::optional<int>() : std::optional<int>(da[na]);
        auto ob = db.find(nb) == db.end() ? std::optional<int>() : std::optional<int>(db[nb]);
        da[na] = depth;
        db[nb] = depth;
        bool ok = alpha_rec(ba, bb, da, db, depth + 1);
        if (oa) da[na] = *oa; else da.erase(na);
        if (ob) db[nb] = *ob; else db.erase(nb);
        return ok;
    };

    switch (a->kind()) {
        case TermKind::Forall:
        case TermKind::Exists:
            return with_binder(a->name(), b->name(), a->kid(0), b->kid(0));
        case TermKind::Case:
            return alpha_rec(a->kid(0), b->kid(0), da, db, depth) &&
                   alpha_rec(a->kid(1), b->kid(1), da, db, depth) &&
                   with_binder(a->name(), b->name(), a->kid(2), b->kid(2));
        default:
            for (size_t i = 0; i < a->arity(); ++i)
                if (!alpha_rec(a->kid(i), b->kid(i), da, db, depth)) return false;
            return true;
    }
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    std::map<std::string, int> da, db;
    return alpha_rec(a, b, da, db, 0);
}

TermPtr instantiate(const Template& tpl, const TermPtr& filler) { return subst(tpl.body, tpl.hole, filler); }

}  // namespace gd
