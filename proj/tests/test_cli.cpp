// End-to-end tests of the command-line tool: spawn the real binary, compare
// bytes and exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "montague/montague.hpp"

using namespace montague;

namespace {

const std::string kDataDir = MONTAGUE_DATA_DIR;
const std::string kCli = MONTAGUE_CLI_PATH;

struct RunResult {
    int status;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string command = kCli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), n);
    int raw = pclose(pipe);
    return {WEXITSTATUS(raw), output};
}

std::string common(const std::string& model = "") {
    std::string args = "--grammar " + kDataDir + "/montague.grammar --lexicon " + kDataDir +
                       "/core.lexicon";
    if (!model.empty()) args += " --model " + kDataDir + "/" + model;
    return args;
}

}  // namespace

TEST_CASE("eval prints the truth value") {
    auto r = run("eval " + common("world3.model") + " 'Gérard aime Alice'");
    CHECK(r.status == 0);
    CHECK(r.output == "vrai\n");

    r = run("eval " + common("world3.model") + " 'tout le monde aime Alice'");
    CHECK(r.status == 0);
    CHECK(r.output == "faux\n");

    r = run("eval " + common("demo.model") + " 'le philosophe aime Alice'");
    CHECK(r.output == "vrai\n");
}

TEST_CASE("parse prints the indented tree") {
    auto r = run("parse " + common() + " 'Gérard dort'");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "S\n"
          "  GN\n"
          "    N\n"
          "      Gérard\n"
          "  GV\n"
          "    V\n"
          "      dort\n");
}

TEST_CASE("types prints the decorated tree") {
    auto r = run("types " + common() + " 'tout le monde aime Alice'");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "S : t\n"
          "  GN : <<e,t>,t>\n"
          "    PRN : <<e,t>,t>\n"
          "      tout le monde : <<e,t>,t>\n"
          "  GV : <e,t>\n"
          "    V : <e,<e,t>>\n"
          "      aime : <e,<e,t>>\n"
          "    GN : e\n"
          "      Alice : e\n");
}

TEST_CASE("translate prints per-node terms and traces on demand") {
    auto r = run("translate " + common() + " 'Gérard dort'");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "S : t = dort(g)\n"
          "  GN : e = g\n"
          "    N : e = g\n"
          "      Gérard : e = g\n"
          "  GV : <e,t> = dort\n"
          "    V : <e,t> = dort\n"
          "      dort : <e,t> = dort\n");

    auto traced = run("translate --trace " + common() + " 'Gérard aime Alice'");
    CHECK(traced.status == 0);
    CHECK(traced.output.find("reduction at S:\n"
                             "  (L y:e. aime(a)(y))(g)\n"
                             "  aime(a)(g)\n") != std::string::npos);
    CHECK(traced.output.find("reduction at GV:\n"
                             "  (L x:e. L y:e. aime(x)(y))(a)\n"
                             "  L y:e. aime(a)(y)\n") != std::string::npos);
    // nodes that did not reduce anything print no trace section
    CHECK(traced.output.find("reduction at Alice:") == std::string::npos);
    CHECK(traced.output.find("reduction at N:") == std::string::npos);
}

TEST_CASE("pipeline prints every stage") {
    auto r = run("pipeline " + common("demo.model") + " 'Gérard aime Alice mais préfère Alexia'");
    CHECK(r.status == 0);
    CHECK(r.output.find("== parse ==\n") != std::string::npos);
    CHECK(r.output.find("== types ==\n") != std::string::npos);
    CHECK(r.output.find("== translation ==\n") != std::string::npos);
    CHECK(r.output.find("formula: aime(a)(g) & préfère(a')(g)\n") != std::string::npos);
    CHECK(r.output.find("== evaluation ==\nvrai\n") != std::string::npos);
    CHECK(r.output.find("cGV : <<e,t>,<e,t>>") != std::string::npos);

    // the formula the pipeline prints is the formula eval uses
    Grammar g = Grammar::from_file(kDataDir + "/montague.grammar");
    Lexicon lex = Lexicon::from_file(kDataDir + "/core.lexicon");
    std::string expected =
        term_to_string(translate_sentence(g, lex, "Gérard aime Alice mais préfère Alexia"));
    CHECK(r.output.find("formula: " + expected + "\n") != std::string::npos);
}

TEST_CASE("byte-identical output on repeated runs") {
    std::string args = "pipeline " + common("demo.model") + " 'le philosophe aime Alice'";
    auto first = run(args);
    auto second = run(args);
    CHECK(first.status == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("linguistic rejection exits 1 with a diagnostic") {
    auto r = run("parse --grammar " + kDataDir + "/g1.grammar --lexicon " + kDataDir +
                 "/core.lexicon 'dort Gérard'");
    CHECK(r.status == 1);
    CHECK(r.output.find("ERROR:NoParse:") != std::string::npos);

    r = run("eval " + common("world3.model") + " 'Gérard mange'");
    CHECK(r.status == 1);
    CHECK(r.output.find("ERROR:UnknownWord:mange") != std::string::npos);

    // grammatical but untypeable
    r = run("types " + common() + " 'le Gérard dort'");
    CHECK(r.status == 1);
    CHECK(r.output.find("ERROR:TypeClash:") != std::string::npos);
}

TEST_CASE("file and format problems exit 2") {
    auto r = run("parse --grammar /nonexistent.grammar --lexicon " + kDataDir +
                 "/core.lexicon 'Gérard dort'");
    CHECK(r.status == 2);
    CHECK(r.output.find("ERROR:FileNotFound:") != std::string::npos);

    std::string bad = "/tmp/montague_bad_grammar.txt";
    std::ofstream(bad) << "S -> A B C\nA -> a\nB -> b\nC -> c\n";
    r = run("parse --grammar " + bad + " --lexicon " + kDataDir + "/core.lexicon 'a'");
    CHECK(r.status == 2);
    CHECK(r.output.find("ERROR:GrammarFormat:") != std::string::npos);

    r = run("eval " + common() + " 'Gérard dort'");  // --model missing
    CHECK(r.status == 2);
}

TEST_CASE("--all-parses labels each tree") {
    auto r = run("parse --all-parses " + common() + " 'Gérard dort'");
    CHECK(r.status == 0);
    CHECK(r.output.find("parse 1 of 1:\nS\n") == 0);
}

TEST_CASE("eval needs the constants of the sentence in the model") {
    // world3 has no préfère facts and no alexia
    auto r = run("eval " + common("world3.model") + " 'Gérard aime Alice mais préfère Alexia'");
    CHECK(r.status == 1);
    CHECK(r.output.find("ERROR:UnknownConstant:") != std::string::npos);
}
