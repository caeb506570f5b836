#include "gd/defenv.hpp"

#include <set>

namespace gd {

DefEnv DefEnv::add(const Definition& d) const {
    if (defined(d.symbol))
        throw Error(ErrorCode::RedefinedSymbol, "symbol '" + d.symbol + "' is already defined");
    std::set<std::string> params(d.params.begin(), d.params.end());
    if (params.size() != d.params.size())
        throw Error(ErrorCode::DuplicateParam, "definition of '" + d.symbol + "' repeats a parameter");
    for (const auto& v : free_vars(d.body))
        if (!params.count(v))
            throw Error(ErrorCode::StrayFreeVariable,
                        "definition of '" + d.symbol + "' has stray free variable '" + v + "'");
    DefEnv out = *this;
    out.defs_[d.symbol] = d;
    out.order_.push_back(d.symbol);
    return out;
}

const Definition* DefEnv::find(const std::string& symbol) const {
    auto it = defs_.find(symbol);
    return it == defs_.end() ? nullptr : &it->second;
}

TermPtr DefEnv::expand(const std::string& symbol, const std::vector<TermPtr>& args) const {
    const Definition* d = find(symbol);
    if (!d) throw Error(ErrorCode::UnknownSymbol, "symbol '" + symbol + "' is not defined");
    if (args.size() != d->params.size())
        throw Error(ErrorCode::ArityMismatch, "'" + symbol + "' takes " + std::to_string(d->params.size()) +
                                                  " argument(s), got " + std::to_string(args.size()));
    std::vector<std::pair<std::string, TermPtr>> m;
    m.reserve(args.size());
    for (size_t i = 0; i < args.size(); ++i) m.emplace_back(d->params[i], args[i]);
    return subst_parallel(d->body, m);
}

void DefEnv::check_apps(const TermPtr& t) const {
    if (t->kind() == TermKind::App) {
        const Definition* d = find(t->name());
        if (!d)
            throw Error(ErrorCode::UnknownSymbol, "symbol '" + t->name() + "' is not defined");
        if (d->params.size() != t->arity())
            throw Error(ErrorCode::ArityMismatch, "'" + t->name() + "' takes " + std::to_string(d->params.size()) +
                                                      " argument(s), got " + std::to_string(t->arity()));
    }
    for (const auto& k : t->kids()) check_apps(k);
}

void DefEnv::finalize() const {
    for (const auto& s : order_) check_apps(find(s)->body);
}

}  // namespace gd
