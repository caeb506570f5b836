#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gd/errors.hpp"
#include "gd/judgment.hpp"
#include "gd/term.hpp"

namespace gd {

enum class ProofKind {
    Rule,    // rule application, primitive or derived
    Hyp,     // reference to a hypothesis label in scope
    UseDef,  // definition-presence premise for defIE
    Lemma,   // reference to a previously proven named result
};

struct ProofNode;
using ProofPtr = std::shared_ptr<const ProofNode>;

struct HypBinding {
    std::string label;
    Judgment judgment;
};

// One subproof slot: plain (no intro) or hypothetical (intro lists the
// hypotheses the subproof may use; fresh variables are read off the declared
// judgments by the rule being applied).
struct SubProof {
    std::vector<HypBinding> intro;
    ProofPtr proof;
};

struct ProofNode {
    ProofKind kind = ProofKind::Rule;
    std::string name;  // rule name, hypothesis label, symbol, or lemma name

    // instantiation data; which fields a rule reads is rule-specific
    bool reverse = false;             // direction for bidirectional rules
    std::optional<Template> tpl;      // syntactic template
    std::vector<TermPtr> terms;       // extra terms (e.g. the b of andI2)
    std::vector<TermPtr> args;        // defIE: arguments to the defined symbol
    TermPtr case_term;                // case0IE / caseSIE: the full case term
    TermPtr if_term;                  // iftrueIE / iffalseIE: the full if term

    std::vector<SubProof> subs;
    Span span;
};

ProofPtr mk_hyp(std::string label);
ProofPtr mk_usedef(std::string symbol);
ProofPtr mk_lemma(std::string name);
ProofPtr mk_rule(std::string name, std::vector<SubProof> subs);

}  // namespace gd
