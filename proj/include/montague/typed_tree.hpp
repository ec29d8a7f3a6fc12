// typed_tree.hpp -- semantic type decoration of parse trees.
//
// Leaves take the type of their lexicon entry (looked up under the parent
// category). A node with one child copies the child's type; a node with two
// children composes them, trying the left child as the function first and
// the right child otherwise. The orientation that worked is recorded so the
// translation stage applies the right child to the right argument. For a
// sentence tree the root must come out as the atom t.

#ifndef MONTAGUE_TYPED_TREE_HPP
#define MONTAGUE_TYPED_TREE_HPP

#include <string>
#include <vector>

#include "montague/error.hpp"
#include "montague/grammar.hpp"
#include "montague/lexicon.hpp"
#include "montague/semtype.hpp"

namespace montague {

struct TypedTree {
    Symbol label;
    SemType stype;
    std::vector<TypedTree> children;
    int function_child = -1;  // 0 or 1 at binary nodes, -1 elsewhere
};

namespace detail {

inline TypedTree type_node(const ParseTree& node, const Lexicon& lex,
                           const std::string& parent_category) {
    if (node.children.empty()) {
        const LexEntry* entry = lex.find(node.label.name, parent_category);
        if (!entry)
            throw Error(ErrorCode::MissingLexEntry,
                        "'" + node.label.name + "' under category " + parent_category);
        return {node.label, entry->stype, {}, -1};
    }
    std::vector<TypedTree> children;
    children.reserve(node.children.size());
    for (const ParseTree& c : node.children)
        children.push_back(type_node(c, lex, node.label.name));
    if (children.size() == 1) {
        SemType ty = children[0].stype;
        return {node.label, std::move(ty), std::move(children), -1};
    }
    auto left_as_fn = try_compose(children[0].stype, children[1].stype);
    auto right_as_fn = try_compose(children[1].stype, children[0].stype);
    if (left_as_fn && right_as_fn)
        throw Error(ErrorCode::AmbiguousOrientation,
                    "both orientations compose at node " + node.label.name);
    if (!left_as_fn && !right_as_fn)
        throw Error(ErrorCode::TypeClash, "node " + node.label.name + ": " +
                                              children[0].stype.str() + " and " +
                                              children[1].stype.str() + " do not compose");
    SemType ty = left_as_fn ? *left_as_fn : *right_as_fn;
    return {node.label, std::move(ty), std::move(children), left_as_fn ? 0 : 1};
}

}  // namespace detail

inline TypedTree type_tree(const ParseTree& tree, const Lexicon& lex) {
    if (tree.children.empty())
        throw Error(ErrorCode::TypeClash, "cannot type a bare terminal without a category");
    TypedTree typed = detail::type_node(tree, lex, tree.label.name);
    if (tree.label.kind == SymbolKind::Start && !typed.stype.is_t())
        throw Error(ErrorCode::TypeClash,
                    "sentence root has type " + typed.stype.str() + ", wanted t");
    return typed;
}

}  // namespace montague

#endif
