// montague -- command-line driver for the sentence pipeline.
//
//   montague <command> --grammar PATH --lexicon PATH [--model PATH]
//            [--all-parses] [--trace] "<sentence>"
//
// Commands: parse, types, translate, eval, pipeline.
// Exit status: 0 on success, 1 when the sentence is rejected (no parse,
// type clash, unknown word, ...), 2 on file or format errors. Failures
// print a single line `ERROR:<code>:<message>` to stderr.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "montague/montague.hpp"

namespace {

using namespace montague;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::GrammarFormat:
        case ErrorCode::LexiconFormat:
        case ErrorCode::ModelFormat:
        case ErrorCode::TermSyntax:
        case ErrorCode::TypeSyntax:
        case ErrorCode::FileNotFound:
            return 2;
        default:
            return 1;  // the sentence was rejected somewhere in the pipeline
    }
}

struct PipelineConfig {
    std::string grammar_path;
    std::string lexicon_path;
    std::string model_path;
    bool all_parses = false;
    bool trace = false;
};

std::vector<ParseTree> parse_or_reject(const Grammar& g, const Lexicon& lex,
                                       const std::string& sentence) {
    std::vector<ParseTree> trees = parse(g, tokenize(sentence, lex));
    if (trees.empty()) throw Error(ErrorCode::NoParse, "'" + sentence + "'");
    return trees;
}

void print_traces(const TranslatedTree& node, std::ostream& out) {
    if (node.trace.contractions() > 0) {
        out << "reduction at " << node.label.name << ":\n";
        for (const TermRef& step : node.trace.steps)
            out << "  " << term_to_string(step) << "\n";
    }
    for (const TranslatedTree& c : node.children) print_traces(c, out);
}

// applies a command to the first parse, or to each parse with --all-parses
template <typename Fn>
void for_each_selected(const std::vector<ParseTree>& trees, bool all, Fn&& fn) {
    if (!all) {
        fn(trees.front());
        return;
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
        std::cout << "parse " << (i + 1) << " of " << trees.size() << ":\n";
        fn(trees[i]);
        if (i + 1 < trees.size()) std::cout << "\n";
    }
}

int run(const std::string& command, const PipelineConfig& config, const std::string& sentence) {
    Grammar grammar = Grammar::from_file(config.grammar_path);
    Lexicon lexicon = Lexicon::from_file(config.lexicon_path);

    if (command == "parse") {
        auto trees = parse_or_reject(grammar, lexicon, sentence);
        for_each_selected(trees, config.all_parses,
                          [&](const ParseTree& t) { std::cout << render_tree(t); });
        return 0;
    }
    if (command == "types") {
        auto trees = parse_or_reject(grammar, lexicon, sentence);
        for_each_selected(trees, config.all_parses, [&](const ParseTree& t) {
            std::cout << render_tree(type_tree(t, lexicon));
        });
        return 0;
    }
    if (command == "translate") {
        auto trees = parse_or_reject(grammar, lexicon, sentence);
        for_each_selected(trees, config.all_parses, [&](const ParseTree& t) {
            TranslatedTree translated = translate_tree(type_tree(t, lexicon), lexicon);
            std::cout << render_tree(translated);
            if (config.trace) print_traces(translated, std::cout);
        });
        return 0;
    }

    Model model = Model::from_file(config.model_path);
    if (command == "eval") {
        std::cout << truth_name(evaluate_sentence(grammar, lexicon, model, sentence)) << "\n";
        return 0;
    }
    // pipeline: every stage on the first parse
    auto trees = parse_or_reject(grammar, lexicon, sentence);
    TypedTree typed = type_tree(trees.front(), lexicon);
    TranslatedTree translated = translate_tree(typed, lexicon);
    std::cout << "== parse ==\n" << render_tree(trees.front());
    std::cout << "== types ==\n" << render_tree(typed);
    std::cout << "== translation ==\n" << render_tree(translated);
    if (config.trace) print_traces(translated, std::cout);
    std::cout << "formula: " << term_to_string(translated.term) << "\n";
    std::cout << "== evaluation ==\n"
              << truth_name(interpret(translated.term, model).truth_value()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compositional semantics pipeline: parse, translate to logic, evaluate"};
    app.require_subcommand(1);

    PipelineConfig config;
    std::string sentence;
    std::vector<std::pair<std::string, CLI::App*>> commands;
    for (const char* name : {"parse", "types", "translate", "eval", "pipeline"}) {
        CLI::App* cmd = app.add_subcommand(name);
        cmd->add_option("--grammar,-g", config.grammar_path, "grammar file")->required();
        cmd->add_option("--lexicon,-l", config.lexicon_path, "lexicon file")->required();
        auto* model = cmd->add_option("--model,-m", config.model_path, "model file");
        if (std::string(name) == "eval" || std::string(name) == "pipeline") model->required();
        cmd->add_flag("--all-parses", config.all_parses, "process every parse tree");
        cmd->add_flag("--trace", config.trace, "show beta-reduction traces");
        cmd->add_option("sentence", sentence, "the sentence to process")->required();
        commands.emplace_back(name, cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "ERROR:Usage:" << e.what() << "\n";
        return 2;
    }

    try {
        for (const auto& [name, cmd] : commands)
            if (cmd->parsed()) return run(name, config, sentence);
        return 2;
    } catch (const montague::Error& e) {
        std::cerr << "ERROR:" << e.code_name() << ":" << e.message() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "ERROR:Internal:" << e.what() << "\n";
        return 2;
    }
}
