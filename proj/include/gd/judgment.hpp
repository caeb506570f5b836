#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gd/term.hpp"

namespace gd {

// Treatment of equality across bool/nat: agnostic, coded (true~1, false~0)
// or disjoint.
enum class Discipline { AT, CT, DT };

const char* discipline_name(Discipline d);
std::optional<Discipline> discipline_from_name(const std::string& name);

// A claim `subject : kind`.
struct Judgment {
    TermPtr subject;
    JudgKind kind;
};

inline Judgment judg(TermPtr t, JudgKind k) { return Judgment{std::move(t), k}; }

// Alpha-equality on subjects plus kind equality.
bool judgment_eq(const Judgment& a, const Judgment& b);

// Hypothesis context for checking: labeled judgments plus the set of
// ephemeral variables currently in scope. Ephemerals are introduced by
// hypothetical premises and may not escape into conclusions.
struct Context {
    std::vector<std::pair<std::string, Judgment>> hyps;
    std::set<std::string> ephemerals;

    const Judgment* find(const std::string& label) const;
    bool has_label(const std::string& label) const;
};

struct Sequent {
    Context ctx;
    Judgment goal;
};

// Surface-syntax typed quantifier `forall x : kind . body` desugars to
// `forall x . (x : kind) -> body`, and the same for exists. An absent
// annotation leaves the quantifier plain.
TermPtr desugar_typed_quantifier(bool is_forall, const std::string& var, std::optional<JudgKind> annotation,
                                 TermPtr body);

// Term-level form: terms carry no annotations, so this is the identity; it
// exists so the idempotence of desugaring is stated once and testable.
TermPtr desugar_typed_quantifier(const TermPtr& q);

}  // namespace gd
