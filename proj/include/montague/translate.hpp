// translate.hpp -- compositional translation of parse trees into terms.
//
// Leaves take their lexicon entry's term; a node with one child copies the
// child's term unchanged; a node with two children applies the function
// child (as determined by the types) to the other and beta-normalizes. Every
// composition of types is thereby realized as one application of terms, and
// each node carries a beta-normal term of exactly its semantic type.

#ifndef MONTAGUE_TRANSLATE_HPP
#define MONTAGUE_TRANSLATE_HPP

#include <string>
#include <vector>

#include "montague/error.hpp"
#include "montague/grammar.hpp"
#include "montague/lexicon.hpp"
#include "montague/reduce.hpp"
#include "montague/term.hpp"
#include "montague/typed_tree.hpp"

namespace montague {

struct TranslatedTree {
    Symbol label;
    SemType stype;
    TermRef term;  // beta-normal, of type stype
    std::vector<TranslatedTree> children;
    int function_child = -1;
    ReductionTrace trace;  // the normalization performed at a binary node
};

namespace detail {

inline TranslatedTree translate_node(const TypedTree& node, const Lexicon& lex,
                                     const std::string& parent_category) {
    if (node.children.empty()) {
        const LexEntry* entry = lex.find(node.label.name, parent_category);
        if (!entry)
            throw Error(ErrorCode::MissingLexEntry,
                        "'" + node.label.name + "' under category " + parent_category);
        return {node.label, node.stype, entry->term, {}, -1, {}};
    }
    std::vector<TranslatedTree> children;
    children.reserve(node.children.size());
    for (const TypedTree& c : node.children)
        children.push_back(translate_node(c, lex, node.label.name));

    TermRef term;
    ReductionTrace trace;
    if (children.size() == 1) {
        term = children[0].term;
    } else {
        const TranslatedTree& fn = children[node.function_child];
        const TranslatedTree& arg = children[1 - node.function_child];
        trace = beta_normalize(Term::apply(fn.term, arg.term));
        term = trace.final();
    }
    if (term->type() != node.stype)
        throw Error(ErrorCode::IllTyped, "node " + node.label.name + " translated at type " +
                                             term->type().str() + ", typed as " +
                                             node.stype.str());
    return {node.label, node.stype, std::move(term), std::move(children),
            node.function_child, std::move(trace)};
}

}  // namespace detail

inline TranslatedTree translate_tree(const TypedTree& tree, const Lexicon& lex) {
    return detail::translate_node(tree, lex, tree.label.name);
}

// The whole front half of the pipeline: tokenize, parse (first tree in the
// deterministic order), decorate with types, translate. The result is the
// root term: closed, beta-normal, of type t.
inline TermRef translate_sentence(const Grammar& g, const Lexicon& lex,
                                  const std::string& sentence) {
    std::vector<std::string> tokens = tokenize(sentence, lex);
    std::vector<ParseTree> trees = parse(g, tokens);
    if (trees.empty()) throw Error(ErrorCode::NoParse, "'" + sentence + "'");
    TypedTree typed = type_tree(trees.front(), lex);
    return translate_tree(typed, lex).term;
}

}  // namespace montague

#endif
