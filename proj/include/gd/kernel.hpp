#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gd/defenv.hpp"
#include "gd/judgment.hpp"
#include "gd/parser.hpp"
#include "gd/proof.hpp"

namespace gd {

struct CheckConfig {
    Discipline discipline = Discipline::AT;
};

// Previously proven named results, citable from proofs via (lemma name).
using LemmaTable = std::map<std::string, Judgment>;

using CheckFn = std::function<Judgment(const Context&, const ProofPtr&)>;

// Hook for checking rule applications the primitive catalogue does not know;
// the derived-rule registry implements this by expanding to primitives and
// handing the expansion back to the kernel through the supplied CheckFn.
class RuleExtension {
public:
    virtual ~RuleExtension() = default;
    virtual bool knows(const std::string& rule) const = 0;
    virtual Judgment apply(const DefEnv& env, const CheckConfig& cfg, const Context& ctx, const ProofNode& node,
                           const CheckFn& check) const = 0;
};

struct CheckOptions {
    const RuleExtension* extension = nullptr;
    const LemmaTable* lemmas = nullptr;
    std::vector<std::string>* lemma_deps = nullptr;  // filled with the lemma names a proof cites
};

// Validates a proof tree against the primitive rule catalogue and returns the
// judgment it proves. Pure: identical inputs give identical results. Throws
// Error on any violation.
Judgment check(const DefEnv& env, const CheckConfig& cfg, const Context& ctx, const ProofPtr& proof,
               const CheckOptions& opts = {});

// ---- whole-file checking ----

struct ItemVerdict {
    enum class Kind { Def, Theorem, Pragma, Finalize };
    Kind kind = Kind::Def;
    std::string name;
    bool ok = false;
    std::string message;                 // human-readable failure description
    std::optional<ErrorCode> error;
    std::optional<int> premise_index;
    std::string expected_kind;  // for MissingTypingPremise failures
    std::string rule;
    std::optional<Judgment> goal;        // theorems: the declared judgment
    std::vector<std::string> deps;       // lemmas the proof cited
    Span span;
};

struct FileReport {
    std::vector<ItemVerdict> items;
    bool all_ok = true;
    DefEnv final_env;
    LemmaTable lemmas;
    Discipline final_discipline = Discipline::AT;
};

// Threads the definition environment through the file in order; each proof is
// checked against the environment and lemma table at its position. A
// `pragma discipline` item switches the discipline for the rest of the file.
FileReport check_file(const DefEnv& env0, const CheckConfig& cfg0, const SourceFile& file,
                      const RuleExtension* extension = nullptr);

bool is_primitive_rule(const std::string& name);
const std::vector<std::string>& primitive_rule_names();

}  // namespace gd
