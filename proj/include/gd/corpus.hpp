#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gd/eval.hpp"
#include "gd/kernel.hpp"

namespace gd {

// One expectation from the corpus manifest. The manifest is a flat
// key = value file: blocks separated by blank lines, order preserved.
struct CorpusEntry {
    enum class Expect { Defines, Proves, Rejects, Evaluates, Derivation };
    Expect expect = Expect::Proves;
    std::string file;                       // relative to the manifest
    std::string item;                       // def/theorem/derived-rule name
    std::string term;                       // evaluates: the term text
    std::optional<Value> value;             // evaluates: expected value
    long long fuel = 100000;                // evaluates: budget
    std::optional<ErrorCode> error;         // rejects: expected code
    std::optional<int> premise;             // rejects: expected premise index
    std::string kind;                       // rejects: expected typing kind
    int line = 0;
};

std::vector<CorpusEntry> parse_manifest(const std::string& text);
std::vector<CorpusEntry> load_manifest(const std::string& path);

struct EntryResult {
    std::string name;
    bool ok = false;
    std::string expectation;  // short human-readable expectation
    std::string detail;       // what actually happened (on failure, or verbose)
};

struct CorpusReport {
    std::vector<EntryResult> results;
    bool all_ok = true;
};

// Runs every manifest entry: files are parsed and checked once each (in
// parallel when jobs > 1), evaluations use the file's final environment, and
// results come back in manifest order regardless of completion order.
CorpusReport run_corpus(const std::string& manifest_path, int jobs = 1);

// Default bundled corpus location; the GDC_CORPUS_DIR environment variable
// overrides it.
std::string bundled_corpus_dir();

}  // namespace gd
