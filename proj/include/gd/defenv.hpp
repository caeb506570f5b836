#pragma once

#include <map>
#include <string>
#include <vector>

#include "gd/errors.hpp"
#include "gd/term.hpp"

namespace gd {

// One definition `symbol(params...) := body`. The body may mention the
// symbol itself (or symbols defined later in the same file); recursion is
// unrestricted.
struct Definition {
    std::string symbol;
    std::vector<std::string> params;
    TermPtr body;
};

// Append-only environment of definitions, at most one per symbol.
class DefEnv {
public:
    // Throws RedefinedSymbol, DuplicateParam or StrayFreeVariable (for free
    // variables that are not parameters; symbol references are App nodes and
    // are resolved by finalize()).
    DefEnv add(const Definition& d) const;

    const Definition* find(const std::string& symbol) const;
    bool defined(const std::string& symbol) const { return find(symbol) != nullptr; }
    size_t size() const { return order_.size(); }
    const std::vector<std::string>& symbols() const { return order_; }

    // Instantiated expansion: body with parameters simultaneously replaced by
    // args. Throws UnknownSymbol or ArityMismatch.
    TermPtr expand(const std::string& symbol, const std::vector<TermPtr>& args) const;

    // Whole-file pass: every App node reachable from any definition body must
    // name a defined symbol with matching arity. Run after all definitions of
    // a file are added so mutual recursion works.
    void finalize() const;

    // Checks one term's App nodes against the environment.
    void check_apps(const TermPtr& t) const;

private:
    std::map<std::string, Definition> defs_;
    std::vector<std::string> order_;
};

}  // namespace gd
