#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gd/defenv.hpp"
#include "gd/judgment.hpp"
#include "gd/proof.hpp"
#include "gd/term.hpp"

namespace gd {

// Concrete syntax. Canonical form is ASCII; the Unicode operators of the
// notation are accepted as input aliases. Grammar in docs/syntax.md.

struct DefItem {
    Definition def;
    Span span;
};

struct TheoremItem {
    std::string name;
    Judgment goal;
    ProofPtr proof;
    Span span;
};

struct PragmaItem {
    std::string key;
    std::string value;
    Span span;
};

using SourceItem = std::variant<DefItem, TheoremItem, PragmaItem>;

struct SourceFile {
    std::string path;
    std::vector<SourceItem> items;
};

// Symbols that resolve bare identifiers to 0-ary applications instead of
// variables. parse_file seeds this with the file's own definitions so
// forward references work.
using SymbolSet = std::set<std::string>;

TermPtr parse_term(const std::string& text, const SymbolSet& symbols = {});
Judgment parse_judgment(const std::string& text, const SymbolSet& symbols = {});
ProofPtr parse_proof(const std::string& text, const SymbolSet& symbols = {});
SourceFile parse_file(const std::string& text, const std::string& path = "<input>",
                      const SymbolSet& pre_defined = {});

// Collects the symbols defined by `def` items without full parsing.
SymbolSet scan_defined_symbols(const std::string& text);

std::string print_term(const TermPtr& t);
std::string print_judgment(const Judgment& j);
std::string print_proof(const ProofPtr& p, int indent = 0);
std::string print_item(const SourceItem& item);
std::string print_file(const SourceFile& f);

}  // namespace gd
