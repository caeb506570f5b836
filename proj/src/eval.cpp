#include "gd/eval.hpp"

#include <boost/container/small_vector.hpp>
#include <cassert>
#include <deque>
#include <unordered_map>
#include <variant>

namespace gd {

Value v_true() { return Value{Value::Kind::True, 0}; }
Value v_false() { return Value{Value::Kind::False, 0}; }
Value v_nat(Natural n) { return Value{Value::Kind::Nat, std::move(n)}; }
Value v_unknown() { return Value{Value::Kind::Unknown, 0}; }

std::string value_to_string(const Value& v) {
    switch (v.kind) {
        case Value::Kind::True: return "true";
        case Value::Kind::False: return "false";
        case Value::Kind::Nat: return "nat " + v.nat.str();
        case Value::Kind::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// Strong-Kleene connective helpers. A determinate non-boolean operand is
// stuck and behaves like Unknown.
bool is_t(const Value& v) { return v.kind == Value::Kind::True; }
bool is_f(const Value& v) { return v.kind == Value::Kind::False; }

Value k_not(const Value& v) { return is_t(v) ? v_false() : is_f(v) ? v_true() : v_unknown(); }
Value k_and(const Value& a, const Value& b) {
    if (is_f(a) || is_f(b)) return v_false();
    if (is_t(a) && is_t(b)) return v_true();
    return v_unknown();
}
Value k_or(const Value& a, const Value& b) {
    if (is_t(a) || is_t(b)) return v_true();
    if (is_f(a) && is_f(b)) return v_false();
    return v_unknown();
}
Value k_imp(const Value& a, const Value& b) { return k_or(k_not(a), b); }

bool boolish(const Value& v) { return is_t(v) || is_f(v); }

// Equality on determinate values; the disciplines differ only across types.
Value eq_val(const Value& a, const Value& b, Discipline d) {
    if (!a.determinate() || !b.determinate()) return v_unknown();
    if (a.kind == Value::Kind::Nat && b.kind == Value::Kind::Nat) return a.nat == b.nat ? v_true() : v_false();
    if (boolish(a) && boolish(b)) return a.kind == b.kind ? v_true() : v_false();
    // mixed bool/nat
    switch (d) {
        case Discipline::AT: return v_unknown();
        case Discipline::CT: {
            const Value& n = a.kind == Value::Kind::Nat ? a : b;
            const Value& t = a.kind == Value::Kind::Nat ? b : a;
            return n.nat == (is_t(t) ? 1 : 0) ? v_true() : v_false();
        }
        case Discipline::DT: return v_false();
    }
    return v_unknown();
}

// Dynamic kind-membership test, the computational reading of the natTI/boolTI
// rules. Cross-type answers follow the discipline; under CT the codes of the
// two booleans are 1 and 0.
Value has_val(const Value& v, JudgKind k, Discipline d) {
    if (!v.determinate()) return v_unknown();
    switch (k) {
        case JudgKind::Obj:
            return v_true();
        case JudgKind::Nat:
            if (v.kind == Value::Kind::Nat) return v_true();
            return d == Discipline::AT ? v_unknown() : d == Discipline::CT ? v_true() : v_false();
        case JudgKind::Bool:
            if (boolish(v)) return v_true();
            return d == Discipline::AT ? v_unknown()
                                       : d == Discipline::CT ? (v.nat <= 1 ? v_true() : v_false()) : v_false();
        case JudgKind::True:
            if (boolish(v)) return is_t(v) ? v_true() : v_false();
            return d == Discipline::AT ? v_unknown()
                                       : d == Discipline::CT ? (v.nat == 1 ? v_true() : v_false()) : v_false();
        case JudgKind::False:
            if (boolish(v)) return is_f(v) ? v_true() : v_false();
            return d == Discipline::AT ? v_unknown()
                                       : d == Discipline::CT ? (v.nat == 0 ? v_true() : v_false()) : v_false();
    }
    return v_unknown();
}

// One binding node per call/branch/witness. Terms, definitions and their
// parameter names outlive the evaluation, so only raw pointers are stored.
// Nodes are recycled through a freelist; evaluation is single-threaded per
// machine, so the reference counts need not be atomic.
struct Binding {
    boost::container::small_vector<std::pair<const std::string*, Value>, 2> slots;
    Binding* next = nullptr;  // parent scope (one reference held)
    int rc = 0;
};

class BindPool {
public:
    Binding* acquire(Binding* parent) {  // takes over the caller's reference to parent
        Binding* b;
        if (free_) {
            b = free_;
            free_ = b->next;
            b->slots.clear();
        } else {
            storage_.emplace_back();
            b = &storage_.back();
        }
        b->next = parent;
        b->rc = 1;
        return b;
    }
    void retain(Binding* b) {
        if (b) ++b->rc;
    }
    void release(Binding* b) {
        while (b && --b->rc == 0) {
            Binding* parent = b->next;
            b->next = free_;
            free_ = b;
            b = parent;
        }
    }

private:
    std::deque<Binding> storage_;
    Binding* free_ = nullptr;
};

// RAII handle; copying retains, moving steals.
class BindPtr {
public:
    BindPtr() = default;
    BindPtr(Binding* b, BindPool* pool) : b_(b), pool_(pool) {}
    BindPtr(const BindPtr& o) : b_(o.b_), pool_(o.pool_) {
        if (pool_) pool_->retain(b_);
    }
    BindPtr(BindPtr&& o) noexcept : b_(o.b_), pool_(o.pool_) { o.b_ = nullptr; }
    BindPtr& operator=(const BindPtr& o) {
        if (this != &o) {
            if (o.pool_) o.pool_->retain(o.b_);
            if (pool_) pool_->release(b_);
            b_ = o.b_;
            pool_ = o.pool_;
        }
        return *this;
    }
    BindPtr& operator=(BindPtr&& o) noexcept {
        if (this != &o) {
            if (pool_) pool_->release(b_);
            b_ = o.b_;
            pool_ = o.pool_;
            o.b_ = nullptr;
        }
        return *this;
    }
    ~BindPtr() {
        if (pool_) pool_->release(b_);
    }
    Binding* get() const { return b_; }
    Binding* steal() {
        Binding* b = b_;
        b_ = nullptr;
        return b;
    }

private:
    Binding* b_ = nullptr;
    BindPool* pool_ = nullptr;
};

const Value* lookup(const Binding* env, const std::string& name) {
    for (const Binding* b = env; b; b = b->next)
        for (const auto& [n, v] : b->slots)
            if (*n == name) return &v;
    return nullptr;
}

size_t hash_value(const Value& v) {
    size_t h = static_cast<size_t>(v.kind) + 0x9e3779b97f4a7c15ULL;
    if (v.kind == Value::Kind::Nat) {
        const auto& b = v.nat.backend();
        for (unsigned i = 0; i < b.size(); ++i) h = h * 1099511628211ULL ^ b.limbs()[i];
    }
    return h;
}

struct MemoKey {
    const Definition* def;
    boost::container::small_vector<Value, 2> vals;
    size_t hash;

    void rehash() {
        hash = std::hash<const void*>()(def);
        for (const auto& v : vals) hash = hash * 1000003u ^ hash_value(v);
    }
    bool operator==(const MemoKey& o) const {
        if (def != o.def || vals.size() != o.vals.size()) return false;
        for (size_t i = 0; i < vals.size(); ++i)
            if (!(vals[i] == o.vals[i])) return false;
        return true;
    }
};

struct MemoHash {
    size_t operator()(const MemoKey& k) const { return k.hash; }
};

// Continuation frames for the explicit-stack machine. Recursion depth in
// evaluated programs (e.g. plus on large numbers) must not consume native
// stack, and the frames must stay small because millions can be live.
struct KNot {};
struct KSucc { unsigned long long count; };
struct KBin { TermKind op; const Term* rhs; BindPtr env; };  // awaiting left operand
struct KBin2 { TermKind op; Value left; };                   // awaiting right operand
struct KHas { JudgKind kind; };
struct KIf { const Term* node; BindPtr env; };
struct KCase { const Term* node; BindPtr env; };
struct KArgs {
    const Definition* def;
    const Term* app;
    unsigned next;
    BindPtr env;
    boost::container::small_vector<Value, 2> vals;
};
struct KRet { MemoKey key; long long poison_snapshot; };
struct KQuant { const Term* node; BindPtr env; int n; };

using Frame = std::variant<KNot, KSucc, KBin, KBin2, KHas, KIf, KCase, KArgs, KRet, KQuant>;

struct Machine {
    const DefEnv& env;
    const EvalConfig& cfg;
    long long fuel;
    long long poison_hits = 0;
    std::unordered_map<MemoKey, std::optional<Value>, MemoHash> memo;
    std::vector<Frame> stack;
    BindPool pool;

    const Term* ct = nullptr;
    BindPtr cenv;
    Value val;
    bool delivering = false;

    Machine(const DefEnv& e, const EvalConfig& c) : env(e), cfg(c), fuel(c.fuel) {}

    void deliver(Value v) {
        val = std::move(v);
        delivering = true;
    }
    void evaluate(const Term* t, BindPtr e) {
        ct = t;
        cenv = std::move(e);
        delivering = false;
    }

    void do_call(const Definition* def, boost::container::small_vector<Value, 2>&& vals) {
        // Once the memo table is full no new results can be recorded, so the
        // probe is skipped as well: a repeat call just unfolds again, paying
        // fuel for it. All recording happens below the cap.
        bool track = memo.size() < cfg.memo_limit;
        if (track) {
            MemoKey key{def, std::move(vals), 0};
            key.rehash();
            auto it = memo.find(key);
            if (it != memo.end()) {
                if (it->second) {
                    deliver(*it->second);
                } else {
                    // hit a call already being evaluated: circular at this stage
                    ++poison_hits;
                    deliver(v_unknown());
                }
                return;
            }
            if (fuel <= 0) {
                deliver(v_unknown());
                return;
            }
            --fuel;
            Binding* benv = pool.acquire(nullptr);
            for (size_t i = 0; i < def->params.size(); ++i)
                benv->slots.emplace_back(&def->params[i], key.vals[i]);
            memo.emplace(key, std::nullopt);
            stack.push_back(KRet{std::move(key), poison_hits});
            evaluate(def->body.get(), BindPtr(benv, &pool));
            return;
        }
        if (fuel <= 0) {
            deliver(v_unknown());
            return;
        }
        --fuel;
        Binding* benv = pool.acquire(nullptr);
        for (size_t i = 0; i < def->params.size(); ++i)
            benv->slots.emplace_back(&def->params[i], std::move(vals[i]));
        evaluate(def->body.get(), BindPtr(benv, &pool));
    }

    BindPtr bind_one(const std::string* name, Value v, BindPtr next) {
        Binding* b = pool.acquire(next.steal());
        b->slots.emplace_back(name, std::move(v));
        return BindPtr(b, &pool);
    }

    void step_eval() {
        switch (ct->kind()) {
            case TermKind::Var: {
                const Value* v = lookup(cenv.get(), ct->name());
                if (!v) throw Error(ErrorCode::OpenTerm, "free variable '" + ct->name() + "' in evaluated term");
                deliver(*v);
                return;
            }
            case TermKind::LitTrue: deliver(v_true()); return;
            case TermKind::LitFalse: deliver(v_false()); return;
            case TermKind::Zero: deliver(v_nat(0)); return;
            case TermKind::Succ:
                if (!stack.empty() && std::holds_alternative<KSucc>(stack.back()))
                    ++std::get<KSucc>(stack.back()).count;
                else
                    stack.push_back(KSucc{1});
                ct = ct->kid(0).get();
                return;
            case TermKind::Not:
                stack.push_back(KNot{});
                ct = ct->kid(0).get();
                return;
            case TermKind::And:
            case TermKind::Or:
            case TermKind::Imp:
            case TermKind::Iff:
            case TermKind::Eq:
            case TermKind::Ne:
                stack.push_back(KBin{ct->kind(), ct->kid(1).get(), cenv});
                ct = ct->kid(0).get();
                return;
            case TermKind::Has:
                stack.push_back(KHas{ct->judg()});
                ct = ct->kid(0).get();
                return;
            case TermKind::If:
                stack.push_back(KIf{ct, cenv});
                ct = ct->kid(0).get();
                return;
            case TermKind::Case:
                stack.push_back(KCase{ct, cenv});
                ct = ct->kid(0).get();
                return;
            case TermKind::Forall:
            case TermKind::Exists: {
                stack.push_back(KQuant{ct, cenv, 0});
                BindPtr e = bind_one(&ct->name(), v_nat(0), cenv);
                evaluate(ct->kid(0).get(), std::move(e));
                return;
            }
            case TermKind::App: {
                const Definition* def = env.find(ct->name());
                if (!def) throw Error(ErrorCode::UnknownSymbol, "symbol '" + ct->name() + "' is not defined");
                if (def->params.size() != ct->arity())
                    throw Error(ErrorCode::ArityMismatch, "'" + ct->name() + "' applied to " +
                                                              std::to_string(ct->arity()) + " argument(s)");
                if (ct->arity() == 0) {
                    do_call(def, {});
                } else {
                    const Term* app = ct;
                    stack.push_back(KArgs{def, app, 1, cenv, {}});
                    evaluate(app->kid(0).get(), cenv);
                }
                return;
            }
        }
    }

    void step_deliver() {
        Frame& top = stack.back();
        switch (top.index()) {
            case 0:  // KNot
                stack.pop_back();
                val = k_not(val);
                return;
            case 1: {  // KSucc
                if (val.kind == Value::Kind::Nat) {
                    val.nat += std::get<KSucc>(top).count;
                } else {
                    val = v_unknown();  // successor of a non-number is stuck
                }
                stack.pop_back();
                return;
            }
            case 2: {  // KBin: left operand arrived
                KBin k = std::get<KBin>(std::move(top));
                stack.pop_back();
                // annihilators skip the right operand entirely
                if (k.op == TermKind::And && is_f(val)) { val = v_false(); return; }
                if (k.op == TermKind::Or && is_t(val)) { val = v_true(); return; }
                if (k.op == TermKind::Imp && is_f(val)) { val = v_true(); return; }
                stack.push_back(KBin2{k.op, std::move(val)});
                evaluate(k.rhs, std::move(k.env));
                return;
            }
            case 3: {  // KBin2: right operand arrived
                KBin2& k = std::get<KBin2>(top);
                switch (k.op) {
                    case TermKind::And: val = k_and(k.left, val); break;
                    case TermKind::Or: val = k_or(k.left, val); break;
                    case TermKind::Imp: val = k_imp(k.left, val); break;
                    case TermKind::Iff: val = k_and(k_imp(k.left, val), k_imp(val, k.left)); break;
                    case TermKind::Eq: val = eq_val(k.left, val, cfg.discipline); break;
                    case TermKind::Ne: val = k_not(eq_val(k.left, val, cfg.discipline)); break;
                    default: assert(false); val = v_unknown(); break;
                }
                stack.pop_back();
                return;
            }
            case 4:  // KHas
                val = has_val(val, std::get<KHas>(top).kind, cfg.discipline);
                stack.pop_back();
                return;
            case 5: {  // KIf
                KIf k = std::get<KIf>(std::move(top));
                stack.pop_back();
                if (is_t(val)) evaluate(k.node->kid(1).get(), std::move(k.env));
                else if (is_f(val)) evaluate(k.node->kid(2).get(), std::move(k.env));
                else val = v_unknown();
                return;
            }
            case 6: {  // KCase
                KCase k = std::get<KCase>(std::move(top));
                stack.pop_back();
                if (val.kind != Value::Kind::Nat) {
                    val = v_unknown();
                    return;
                }
                if (val.nat == 0) {
                    evaluate(k.node->kid(1).get(), std::move(k.env));
                } else {
                    BindPtr e = bind_one(&k.node->name(), v_nat(val.nat - 1), std::move(k.env));
                    evaluate(k.node->kid(2).get(), std::move(e));
                }
                return;
            }
            case 7: {  // KArgs
                KArgs& k = std::get<KArgs>(top);
                k.vals.push_back(std::move(val));
                if (k.next < k.app->arity()) {
                    const Term* arg = k.app->kid(k.next).get();
                    ++k.next;
                    BindPtr e = k.env;
                    evaluate(arg, std::move(e));
                } else {
                    KArgs done = std::get<KArgs>(std::move(top));
                    stack.pop_back();
                    do_call(done.def, std::move(done.vals));
                }
                return;
            }
            case 8: {  // KRet
                KRet& k = std::get<KRet>(top);
                if (poison_hits != k.poison_snapshot)
                    memo.erase(k.key);  // depended on an in-progress cycle; do not cache
                else
                    memo[k.key] = val;
                stack.pop_back();
                return;  // value passes through
            }
            case 9: {  // KQuant
                KQuant& k = std::get<KQuant>(top);
                bool exists = k.node->kind() == TermKind::Exists;
                if (exists && is_t(val)) {
                    val = v_true();
                    stack.pop_back();
                    return;
                }
                if (!exists && is_f(val)) {
                    val = v_false();
                    stack.pop_back();
                    return;
                }
                if (k.n < cfg.quant_bound) {
                    ++k.n;
                    BindPtr e = bind_one(&k.node->name(), v_nat(k.n), k.env);
                    evaluate(k.node->kid(0).get(), std::move(e));
                } else {
                    val = v_unknown();  // bounded search is never allowed to over-claim
                    stack.pop_back();
                }
                return;
            }
        }
    }

    Value run(const Term* t) {
        evaluate(t, BindPtr{});
        for (;;) {
            if (delivering) {
                if (stack.empty()) return val;
                step_deliver();
            } else {
                step_eval();
            }
        }
    }
};

}  // namespace

Value eval(const DefEnv& env, const EvalConfig& cfg, const TermPtr& t) {
    auto fv = free_vars(t);
    if (!fv.empty())
        throw Error(ErrorCode::OpenTerm, "term has free variable '" + *fv.begin() + "'");
    env.check_apps(t);
    Machine m(env, cfg);
    return m.run(t.get());
}

Classification classify(const DefEnv& env, const EvalConfig& cfg, const std::string& symbol) {
    const Definition* d = env.find(symbol);
    if (!d) throw Error(ErrorCode::UnknownSymbol, "symbol '" + symbol + "' is not defined");
    if (!d->params.empty())
        throw Error(ErrorCode::NotConstant, "'" + symbol + "' takes parameters; classify needs a constant");
    Value v = eval(env, cfg, mk_app(symbol, {}));
    Classification c;
    c.fuel = cfg.fuel;
    switch (v.kind) {
        case Value::Kind::True: c.kind = Classification::Kind::GroundedTrue; break;
        case Value::Kind::False: c.kind = Classification::Kind::GroundedFalse; break;
        case Value::Kind::Nat:
            c.kind = Classification::Kind::GroundedNat;
            c.nat = v.nat;
            break;
        case Value::Kind::Unknown: c.kind = Classification::Kind::Ungrounded; break;
    }
    return c;
}

std::string classification_to_string(const Classification& c) {
    switch (c.kind) {
        case Classification::Kind::GroundedTrue: return "grounded true";
        case Classification::Kind::GroundedFalse: return "grounded false";
        case Classification::Kind::GroundedNat: return "grounded nat " + c.nat.str();
        case Classification::Kind::Ungrounded: return "ungrounded (fuel=" + std::to_string(c.fuel) + ")";
    }
    return "?";
}

}  // namespace gd
