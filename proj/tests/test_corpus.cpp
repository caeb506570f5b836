#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gd/corpus.hpp"

using namespace gd;

TEST_CASE("manifest parsing") {
    std::string text =
        "# comment line\n"
        "file = paradox.gd\n"
        "item = liar_bool\n"
        "expect = rejects\n"
        "error = MissingTypingPremise\n"
        "premise = 0\n"
        "kind = bool\n"
        "\n"
        "file = arith.gd\n"
        "term = plus(S(S(0)), S(S(0)))\n"
        "expect = evaluates\n"
        "value = nat 4\n"
        "fuel = 1000\n"
        "\n"
        "item = impI\n"
        "expect = derivation\n";
    auto entries = parse_manifest(text);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].expect == CorpusEntry::Expect::Rejects);
    CHECK(entries[0].error == ErrorCode::MissingTypingPremise);
    CHECK(entries[0].premise == 0);
    CHECK(entries[0].kind == "bool");
    CHECK(entries[1].expect == CorpusEntry::Expect::Evaluates);
    REQUIRE(entries[1].value.has_value());
    CHECK(*entries[1].value == v_nat(4));
    CHECK(entries[1].fuel == 1000);
    CHECK(entries[2].expect == CorpusEntry::Expect::Derivation);

    CHECK_THROWS_AS(parse_manifest("nonsense line\n"), Error);
    CHECK_THROWS_AS(parse_manifest("expect = sideways\n"), Error);
    CHECK_THROWS_AS(parse_manifest("error = NoSuchCode\n"), Error);
}

TEST_CASE("run_corpus on a small synthetic corpus") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "gd_corpus_test";
    fs::create_directories(dir);

    {
        std::ofstream f(dir / "mini.gd");
        f << "def S1 := true\n"
             "def S2 := S1 or S2\n"
             "theorem s1_true : S1 : true :=\n"
             "  (rule defIE (tpl y  y) (sub (usedef S1)) (sub (rule trueAx)))\n"
             "theorem broken : S1 : false :=\n"
             "  (rule trueAx)\n";
    }
    {
        std::ofstream m(dir / "manifest.txt");
        m << "file = mini.gd\nitem = S1\nexpect = defines\n\n"
             "file = mini.gd\nitem = s1_true\nexpect = proves\n\n"
             "file = mini.gd\nitem = broken\nexpect = rejects\nerror = ConclusionMismatch\n\n"
             "file = mini.gd\nterm = S2\nexpect = evaluates\nvalue = true\nfuel = 100\n\n"
             "item = impI\nexpect = derivation\n\n"
             "file = mini.gd\nterm = S1 and false\nexpect = evaluates\nvalue = unknown\n";
    }

    CorpusReport r = run_corpus((dir / "manifest.txt").string());
    REQUIRE(r.results.size() == 6);
    CHECK(r.results[0].ok);
    CHECK(r.results[1].ok);
    CHECK(r.results[2].ok);
    CHECK(r.results[3].ok);
    CHECK(r.results[4].ok);
    CHECK_FALSE(r.results[5].ok);  // S1 and false is False, not unknown
    CHECK_FALSE(r.all_ok);

    // parallel execution returns results in the same order
    CorpusReport r2 = run_corpus((dir / "manifest.txt").string(), 4);
    REQUIRE(r2.results.size() == r.results.size());
    for (size_t i = 0; i < r.results.size(); ++i) {
        CHECK(r2.results[i].name == r.results[i].name);
        CHECK(r2.results[i].ok == r.results[i].ok);
    }

    fs::remove_all(dir);
}

TEST_CASE("the bundled corpus passes end to end") {
    std::string dir = bundled_corpus_dir();
    CorpusReport r = run_corpus(dir + "/manifest.txt", 2);
    CHECK(!r.results.empty());
    for (const auto& res : r.results) {
        CAPTURE(res.name);
        CAPTURE(res.expectation);
        CAPTURE(res.detail);
        CHECK(res.ok);
    }
    CHECK(r.all_ok);
}
