#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gd/corpus.hpp"
#include "gd/derived.hpp"
#include "gd/eval.hpp"
#include "gd/kernel.hpp"
#include "gd/parser.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLogical = 1;
constexpr int kExitUsage = 2;

struct Options {
    long long fuel = 100000;
    int quant_bound = 64;
    std::string discipline = "at";
    std::string format = "text";
    bool verbose = false;
    int jobs = 1;
};

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gd::Error(gd::ErrorCode::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const std::string& kind, const std::string& name, const std::string& verdict,
          const std::string& error_code = "", gd::Span span = {}, const std::string& detail = "") {
    if (opt.format == "json") {
        json o;
        o["name"] = name;
        o["kind"] = kind;
        o["verdict"] = verdict;
        if (!error_code.empty()) o["error_code"] = error_code;
        if (span.line) o["span"] = {{"line", span.line}, {"col", span.col}};
        if (!detail.empty() && (opt.verbose || verdict != "ok")) o["detail"] = detail;
        std::cout << o.dump() << "\n";
    } else {
        std::cout << kind << " " << name << ": " << verdict;
        if (!error_code.empty()) std::cout << " [" << error_code << "]";
        if (span.line) std::cout << " at " << span.line << ":" << span.col;
        if (!detail.empty() && (opt.verbose || verdict != "ok")) std::cout << "\n  " << detail;
        std::cout << "\n";
    }
}

gd::EvalConfig eval_config(const Options& opt) {
    gd::EvalConfig cfg;
    cfg.fuel = opt.fuel;
    cfg.quant_bound = opt.quant_bound;
    cfg.discipline = gd::discipline_from_name(opt.discipline).value_or(gd::Discipline::AT);
    return cfg;
}

// Parses and checks one file against the bundled environment-threading rules.
gd::FileReport check_path(const Options& opt, const std::string& path, gd::SourceFile* out_source = nullptr) {
    gd::SourceFile f = gd::parse_file(read_input(path), path);
    gd::CheckConfig cfg;
    cfg.discipline = gd::discipline_from_name(opt.discipline).value_or(gd::Discipline::AT);
    if (out_source) *out_source = f;
    return gd::check_file(gd::DefEnv{}, cfg, f, &gd::derived_registry());
}

const char* verdict_kind(gd::ItemVerdict::Kind k) {
    switch (k) {
        case gd::ItemVerdict::Kind::Def: return "def";
        case gd::ItemVerdict::Kind::Theorem: return "theorem";
        case gd::ItemVerdict::Kind::Pragma: return "pragma";
        case gd::ItemVerdict::Kind::Finalize: return "finalize";
    }
    return "?";
}

int cmd_check(const Options& opt, const std::vector<std::string>& files, const std::string& expect_manifest) {
    if (!expect_manifest.empty()) {
        // manifest mode: verdicts are judged against the declared expectations
        gd::CorpusReport report = gd::run_corpus(expect_manifest, opt.jobs);
        for (const auto& r : report.results)
            emit(opt, "entry", r.name, r.ok ? (r.detail.empty() ? "ok" : r.detail) : "failed", "", {},
                 r.ok ? (opt.verbose ? r.expectation : "") : r.detail + " (expected: " + r.expectation + ")");
        return report.all_ok ? kExitOk : kExitLogical;
    }
    bool all_ok = true;
    for (const auto& path : files) {
        gd::FileReport report = check_path(opt, path);
        all_ok = all_ok && report.all_ok;
        for (const auto& item : report.items)
            emit(opt, verdict_kind(item.kind), item.name, item.ok ? "ok" : "failed",
                 item.error ? gd::error_code_name(*item.error) : "", item.span, item.message);
    }
    return all_ok ? kExitOk : kExitLogical;
}

int cmd_eval(const Options& opt, const std::string& expr, const std::vector<std::string>& files) {
    gd::DefEnv env;
    for (const auto& path : files) {
        gd::FileReport r = check_path(opt, path);
        env = r.final_env;  // single-file base environments; last file wins the defs
    }
    std::string text = expr;
    if (text == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    gd::SymbolSet syms;
    for (const auto& s : env.symbols()) syms.insert(s);
    gd::TermPtr t = gd::parse_term(text, syms);
    gd::Value v = gd::eval(env, eval_config(opt), t);
    emit(opt, "eval", gd::print_term(t), gd::value_to_string(v));
    return kExitOk;
}

int cmd_classify(const Options& opt, const std::string& symbol, const std::vector<std::string>& files) {
    gd::DefEnv env;
    for (const auto& path : files) env = check_path(opt, path).final_env;
    gd::Classification c = gd::classify(env, eval_config(opt), symbol);
    emit(opt, "classify", symbol, gd::classification_to_string(c));
    return kExitOk;
}

int cmd_corpus(const Options& opt, std::string dir) {
    if (dir.empty()) dir = gd::bundled_corpus_dir();
    gd::CorpusReport report = gd::run_corpus(dir + "/manifest.txt", opt.jobs);
    int pass = 0;
    for (const auto& r : report.results) {
        if (r.ok) ++pass;
        emit(opt, "entry", r.name, r.ok ? "pass" : "fail", "", {},
             opt.verbose || !r.ok ? r.expectation + "; " + r.detail : "");
    }
    if (opt.format == "text")
        std::cout << pass << "/" << report.results.size() << " corpus entries passed\n";
    return report.all_ok ? kExitOk : kExitLogical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gdc - grounded deduction proof checker and evaluator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--fuel", opt.fuel, "definition-unfolding budget")->capture_default_str();
    app.add_option("--quant-bound", opt.quant_bound, "bounded quantifier search limit")->capture_default_str();
    app.add_option("--discipline", opt.discipline, "type discipline: at|ct|dt")
        ->check(CLI::IsMember({"at", "ct", "dt"}))
        ->capture_default_str();
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--verbose", opt.verbose, "report details for passing items too");
    app.add_option("--jobs", opt.jobs, "parallel file checking")->capture_default_str();

    std::vector<std::string> files;
    std::string expr, symbol, expect_manifest, corpus_dir;

    CLI::App* check = app.add_subcommand("check", "check definitions and proofs in .gd files");
    check->fallthrough();
    check->add_option("files", files, "input files")->required();
    check->add_option("--expect", expect_manifest, "manifest with expected verdicts");

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a term against a file's definitions");
    eval_cmd->fallthrough();
    eval_cmd->add_option("-e,--expr", expr, "term to evaluate; '-' reads stdin")->required();
    eval_cmd->add_option("files", files, "definition files");

    CLI::App* classify = app.add_subcommand("classify", "groundedness verdict for a 0-ary definition");
    classify->fallthrough();
    classify->add_option("symbol", symbol, "defined constant")->required();
    classify->add_option("files", files, "definition files");

    CLI::App* corpus = app.add_subcommand("corpus", "run the bundled corpus manifest");
    corpus->fallthrough();
    corpus->add_option("--dir", corpus_dir, "corpus directory (default: bundled, or GDC_CORPUS_DIR)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(opt, files, expect_manifest);
        if (eval_cmd->parsed()) return cmd_eval(opt, expr, files);
        if (classify->parsed()) return cmd_classify(opt, symbol, files);
        if (corpus->parsed()) return cmd_corpus(opt, corpus_dir);
    } catch (const gd::Error& e) {
        std::cerr << "error [" << gd::error_code_name(e.code) << "]";
        if (e.span.line) std::cerr << " at " << e.span.line << ":" << e.span.col;
        std::cerr << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
