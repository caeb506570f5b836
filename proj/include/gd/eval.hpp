#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "gd/defenv.hpp"
#include "gd/judgment.hpp"
#include "gd/term.hpp"

namespace gd {

using Natural = boost::multiprecision::cpp_int;

// Evaluator result under strong-Kleene three-valued semantics. Unknown covers
// everything that has no grounded value at the given budget: paradoxes,
// exhausted fuel, stuck terms, quantifiers the bounded search cannot decide.
struct Value {
    enum class Kind { True, False, Nat, Unknown };
    Kind kind = Kind::Unknown;
    Natural nat;

    bool operator==(const Value& o) const { return kind == o.kind && (kind != Kind::Nat || nat == o.nat); }
    bool determinate() const { return kind != Kind::Unknown; }
};

Value v_true();
Value v_false();
Value v_nat(Natural n);
Value v_unknown();
std::string value_to_string(const Value& v);

struct EvalConfig {
    long long fuel = 100000;       // definition-unfolding budget, >= 1
    int quant_bound = 64;          // naturals 0..quant_bound searched for witnesses
    Discipline discipline = Discipline::AT;
    size_t memo_limit = 1u << 16;  // cap on the per-call memo table
};

// Evaluates a closed term. Fuel is consumed only by definition unfoldings;
// exhaustion yields Unknown, never an error. Throws OpenTerm for terms with
// free variables and UnknownSymbol/ArityMismatch for applications that do not
// match the environment.
Value eval(const DefEnv& env, const EvalConfig& cfg, const TermPtr& t);

struct Classification {
    enum class Kind { GroundedTrue, GroundedFalse, GroundedNat, Ungrounded };
    Kind kind = Kind::Ungrounded;
    Natural nat;      // for GroundedNat
    long long fuel;   // budget the verdict is relative to
};

// Groundedness verdict for a 0-ary definition. Throws UnknownSymbol or
// NotConstant. An Ungrounded verdict is an approximation at the given fuel.
Classification classify(const DefEnv& env, const EvalConfig& cfg, const std::string& symbol);

std::string classification_to_string(const Classification& c);

}  // namespace gd
