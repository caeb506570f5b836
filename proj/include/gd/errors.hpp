#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gd {

enum class ErrorCode {
    // definitions
    RedefinedSymbol,
    StrayFreeVariable,
    DuplicateParam,
    UnknownSymbol,
    ArityMismatch,
    // kernel
    UnknownRule,
    PremiseShapeMismatch,
    MissingTypingPremise,
    HypothesisNotFound,
    VariableEscape,
    NotDefined,
    DisciplineDisabled,
    DuplicateLabel,
    ConclusionMismatch,
    UnknownLemma,
    // derived rules
    UnknownDerivedRule,
    ShapeMismatch,
    DerivationBroken,
    // evaluator
    OpenTerm,
    NotConstant,
    // parser / files
    SyntaxError,
    ReservedWord,
    DuplicateProofName,
};

const char* error_code_name(ErrorCode c);
std::optional<ErrorCode> error_code_from_name(const std::string& name);

// Source location, 1-based. line == 0 means "no span".
struct Span {
    int line = 0;
    int col = 0;
};

// Thrown by the kernel, definition environment, parser and evaluator; caught
// at item boundaries and turned into report entries.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, Span span = {}, std::string rule = {}, int premise_index = -1)
        : std::runtime_error(std::move(message)), code(code), span(span), rule(std::move(rule)),
          premise_index(premise_index) {}

    ErrorCode code;
    Span span;
    std::string rule;        // rule being applied, when relevant
    int premise_index;       // offending premise, when relevant
    std::string expected_kind;  // for MissingTypingPremise: the kind that was required
};

}  // namespace gd
