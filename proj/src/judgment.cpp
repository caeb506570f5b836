#include "gd/judgment.hpp"

namespace gd {

const char* discipline_name(Discipline d) {
    switch (d) {
        case Discipline::AT: return "at";
        case Discipline::CT: return "ct";
        case Discipline::DT: return "dt";
    }
    return "?";
}

std::optional<Discipline> discipline_from_name(const std::string& name) {
    if (name == "at") return Discipline::AT;
    if (name == "ct") return Discipline::CT;
    if (name == "dt") return Discipline::DT;
    return std::nullopt;
}

bool judgment_eq(const Judgment& a, const Judgment& b) { return a.kind == b.kind && alpha_eq(a.subject, b.subject); }

const Judgment* Context::find(const std::string& label) const {
    for (auto it = hyps.rbegin(); it != hyps.rend(); ++it)
        if (it->first == label) return &it->second;
    return nullptr;
}

bool Context::has_label(const std::string& label) const { return find(label) != nullptr; }

TermPtr desugar_typed_quantifier(bool is_forall, const std::string& var, std::optional<JudgKind> annotation,
                                 TermPtr body) {
    if (annotation) body = mk_imp(mk_has(mk_var(var), *annotation), std::move(body));
    return is_forall ? mk_forall(var, std::move(body)) : mk_exists(var, std::move(body));
}

TermPtr desugar_typed_quantifier(const TermPtr& q) { return q; }

}  // namespace gd
