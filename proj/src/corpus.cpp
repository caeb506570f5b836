#include "gd/corpus.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "gd/derived.hpp"
#include "gd/parser.hpp"

namespace gd {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::optional<Value> parse_value(const std::string& s) {
    if (s == "true") return v_true();
    if (s == "false") return v_false();
    if (s == "unknown") return v_unknown();
    if (s.rfind("nat ", 0) == 0) return v_nat(Natural(s.substr(4)));
    return std::nullopt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string dir_of(const std::string& path) {
    size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

}  // namespace

std::vector<CorpusEntry> parse_manifest(const std::string& text) {
    std::vector<CorpusEntry> entries;
    std::istringstream in(text);
    std::string line;
    CorpusEntry cur;
    bool open = false;
    int lineno = 0;

    auto flush = [&]() {
        if (open) entries.push_back(cur);
        cur = CorpusEntry{};
        open = false;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (!t.empty() && t[0] == '#') continue;
        if (t.empty()) {
            flush();
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::SyntaxError, "manifest line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (!open) {
            open = true;
            cur.line = lineno;
        }
        if (key == "file") cur.file = val;
        else if (key == "item") cur.item = val;
        else if (key == "term") cur.term = val;
        else if (key == "fuel") cur.fuel = std::stoll(val);
        else if (key == "premise") cur.premise = std::stoi(val);
        else if (key == "kind") cur.kind = val;
        else if (key == "value") {
            auto v = parse_value(val);
            if (!v)
                throw Error(ErrorCode::SyntaxError,
                            "manifest line " + std::to_string(lineno) + ": bad value '" + val + "'");
            cur.value = v;
        } else if (key == "error") {
            auto c = error_code_from_name(val);
            if (!c)
                throw Error(ErrorCode::SyntaxError,
                            "manifest line " + std::to_string(lineno) + ": unknown error code '" + val + "'");
            cur.error = c;
        } else if (key == "expect") {
            if (val == "defines") cur.expect = CorpusEntry::Expect::Defines;
            else if (val == "proves") cur.expect = CorpusEntry::Expect::Proves;
            else if (val == "rejects") cur.expect = CorpusEntry::Expect::Rejects;
            else if (val == "evaluates") cur.expect = CorpusEntry::Expect::Evaluates;
            else if (val == "derivation") cur.expect = CorpusEntry::Expect::Derivation;
            else
                throw Error(ErrorCode::SyntaxError,
                            "manifest line " + std::to_string(lineno) + ": unknown expectation '" + val + "'");
        } else {
            throw Error(ErrorCode::SyntaxError,
                        "manifest line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    flush();
    return entries;
}

std::vector<CorpusEntry> load_manifest(const std::string& path) { return parse_manifest(read_file(path)); }

namespace {

struct CheckedFile {
    bool parsed = false;
    std::string parse_error;
    SourceFile source;
    FileReport report;
};

CheckedFile check_one_file(const std::string& path) {
    CheckedFile out;
    try {
        out.source = parse_file(read_file(path), path);
        out.report = check_file(DefEnv{}, CheckConfig{}, out.source, &derived_registry());
        out.parsed = true;
    } catch (const Error& e) {
        out.parse_error = e.what();
    }
    return out;
}

const ItemVerdict* find_verdict(const FileReport& report, const std::string& name) {
    for (const auto& v : report.items)
        if (v.name == name) return &v;
    return nullptr;
}

std::string describe_expectation(const CorpusEntry& e) {
    switch (e.expect) {
        case CorpusEntry::Expect::Defines: return "defines";
        case CorpusEntry::Expect::Proves: return "proves";
        case CorpusEntry::Expect::Rejects: {
            std::string s = "rejects";
            if (e.error) s += std::string(" ") + error_code_name(*e.error);
            if (e.premise) s += " @premise " + std::to_string(*e.premise);
            if (!e.kind.empty()) s += " on " + e.kind;
            return s;
        }
        case CorpusEntry::Expect::Evaluates:
            return "evaluates to " + (e.value ? value_to_string(*e.value) : std::string("?")) + " @fuel " +
                   std::to_string(e.fuel);
        case CorpusEntry::Expect::Derivation: return "derivation holds";
    }
    return "?";
}

EntryResult run_entry(const CorpusEntry& e, const CheckedFile* file, const DerivationReport& derivations) {
    EntryResult r;
    r.name = e.item.empty() ? e.term : e.item;
    r.expectation = describe_expectation(e);

    if (e.expect == CorpusEntry::Expect::Derivation) {
        for (const auto& d : derivations.results) {
            if (d.name == e.item) {
                r.ok = d.ok;
                r.detail = d.ok ? (d.promoted ? "holds (promoted to primitive)" : "holds") : d.message;
                return r;
            }
        }
        r.detail = "no derived rule named '" + e.item + "'";
        return r;
    }

    if (!file || !file->parsed) {
        r.detail = file ? file->parse_error : "file missing";
        return r;
    }

    switch (e.expect) {
        case CorpusEntry::Expect::Defines:
        case CorpusEntry::Expect::Proves: {
            const ItemVerdict* v = find_verdict(file->report, e.item);
            if (!v) {
                r.detail = "no item named '" + e.item + "'";
                return r;
            }
            r.ok = v->ok;
            r.detail = v->ok ? "ok" : v->message;
            return r;
        }
        case CorpusEntry::Expect::Rejects: {
            const ItemVerdict* v = find_verdict(file->report, e.item);
            if (!v) {
                r.detail = "no item named '" + e.item + "'";
                return r;
            }
            if (v->ok) {
                r.detail = "unexpectedly checked";
                return r;
            }
            if (e.error && (!v->error || *v->error != *e.error)) {
                r.detail = std::string("rejected with ") + (v->error ? error_code_name(*v->error) : "?") + ": " +
                           v->message;
                return r;
            }
            if (e.premise && (!v->premise_index || *v->premise_index != *e.premise)) {
                r.detail = "rejected at premise " +
                           (v->premise_index ? std::to_string(*v->premise_index) : std::string("?")) + ": " +
                           v->message;
                return r;
            }
            if (!e.kind.empty() && v->expected_kind != e.kind) {
                r.detail = "rejected wanting kind '" + v->expected_kind + "': " + v->message;
                return r;
            }
            r.ok = true;
            r.detail = "rejected (expected)";
            return r;
        }
        case CorpusEntry::Expect::Evaluates: {
            try {
                SymbolSet syms;
                for (const auto& s : file->report.final_env.symbols()) syms.insert(s);
                TermPtr t = parse_term(e.term, syms);
                EvalConfig cfg;
                cfg.fuel = e.fuel;
                cfg.discipline = file->report.final_discipline;
                Value got = eval(file->report.final_env, cfg, t);
                r.ok = e.value && got == *e.value;
                r.detail = "evaluated to " + value_to_string(got);
            } catch (const Error& err) {
                r.detail = err.what();
            }
            return r;
        }
        default:
            r.detail = "unhandled expectation";
            return r;
    }
}

}  // namespace

CorpusReport run_corpus(const std::string& manifest_path, int jobs) {
    std::vector<CorpusEntry> entries = load_manifest(manifest_path);
    std::string base = dir_of(manifest_path);

    // distinct files, in first-appearance order
    std::vector<std::string> files;
    for (const auto& e : entries)
        if (!e.file.empty() && std::find(files.begin(), files.end(), e.file) == files.end())
            files.push_back(e.file);

    std::map<std::string, CheckedFile> checked;
    for (const auto& f : files) checked[f] = CheckedFile{};

    if (jobs <= 1 || files.size() <= 1) {
        for (const auto& f : files) checked[f] = check_one_file(base + "/" + f);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int n = std::min<int>(jobs, static_cast<int>(files.size()));
        for (int i = 0; i < n; ++i)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t k = next.fetch_add(1);
                    if (k >= files.size()) return;
                    checked[files[k]] = check_one_file(base + "/" + files[k]);
                }
            });
        for (auto& t : pool) t.join();
    }

    bool needs_derivations = false;
    for (const auto& e : entries)
        if (e.expect == CorpusEntry::Expect::Derivation) needs_derivations = true;
    DerivationReport derivations;
    if (needs_derivations) derivations = verify_all_derivations();

    CorpusReport report;
    for (const auto& e : entries) {
        const CheckedFile* f = e.file.empty() ? nullptr : &checked[e.file];
        EntryResult r = run_entry(e, f, derivations);
        if (!r.ok) report.all_ok = false;
        report.results.push_back(std::move(r));
    }
    return report;
}

std::string bundled_corpus_dir() {
    if (const char* env = std::getenv("GDC_CORPUS_DIR")) return env;
#ifdef GD_BUNDLED_CORPUS_DIR
    return GD_BUNDLED_CORPUS_DIR;
#else
    return "corpus";
#endif
}

}  // namespace gd
