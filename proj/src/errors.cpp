#include "gd/errors.hpp"

#include <map>

namespace gd {

namespace {
const std::map<ErrorCode, const char*>& table() {
    static const std::map<ErrorCode, const char*> t = {
        {ErrorCode::RedefinedSymbol, "RedefinedSymbol"},
        {ErrorCode::StrayFreeVariable, "StrayFreeVariable"},
        {ErrorCode::DuplicateParam, "DuplicateParam"},
        {ErrorCode::UnknownSymbol, "UnknownSymbol"},
        {ErrorCode::ArityMismatch, "ArityMismatch"},
        {ErrorCode::UnknownRule, "UnknownRule"},
        {ErrorCode::PremiseShapeMismatch, "PremiseShapeMismatch"},
        {ErrorCode::MissingTypingPremise, "MissingTypingPremise"},
        {ErrorCode::HypothesisNotFound, "HypothesisNotFound"},
        {ErrorCode::VariableEscape, "VariableEscape"},
        {ErrorCode::NotDefined, "NotDefined"},
        {ErrorCode::DisciplineDisabled, "DisciplineDisabled"},
        {ErrorCode::DuplicateLabel, "DuplicateLabel"},
        {ErrorCode::ConclusionMismatch, "ConclusionMismatch"},
        {ErrorCode::UnknownLemma, "UnknownLemma"},
        {ErrorCode::UnknownDerivedRule, "UnknownDerivedRule"},
        {ErrorCode::ShapeMismatch, "ShapeMismatch"},
        {ErrorCode::DerivationBroken, "DerivationBroken"},
        {ErrorCode::OpenTerm, "OpenTerm"},
        {ErrorCode::NotConstant, "NotConstant"},
        {ErrorCode::SyntaxError, "SyntaxError"},
        {ErrorCode::ReservedWord, "ReservedWord"},
        {ErrorCode::DuplicateProofName, "DuplicateProofName"},
    };
    return t;
}
}  // namespace

const char* error_code_name(ErrorCode c) {
    auto it = table().find(c);
    return it == table().end() ? "UnknownError" : it->second;
}

std::optional<ErrorCode> error_code_from_name(const std::string& name) {
    for (const auto& [code, n] : table())
        if (name == n) return code;
    return std::nullopt;
}

}  // namespace gd
