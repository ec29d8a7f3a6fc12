// render.hpp -- plain-text tree rendering for CLI output and golden tests.
//
// One node per line, two spaces of indent per depth. Typed trees append
// `: type`, translated trees additionally `= term`.

#ifndef MONTAGUE_RENDER_HPP
#define MONTAGUE_RENDER_HPP

#include <string>

#include "montague/grammar.hpp"
#include "montague/term_io.hpp"
#include "montague/translate.hpp"
#include "montague/typed_tree.hpp"

namespace montague {

inline std::string render_tree(const ParseTree& t, int depth = 0) {
    std::string out(static_cast<std::size_t>(depth) * 2, ' ');
    out += t.label.name + "\n";
    for (const ParseTree& c : t.children) out += render_tree(c, depth + 1);
    return out;
}

inline std::string render_tree(const TypedTree& t, int depth = 0) {
    std::string out(static_cast<std::size_t>(depth) * 2, ' ');
    out += t.label.name + " : " + t.stype.str() + "\n";
    for (const TypedTree& c : t.children) out += render_tree(c, depth + 1);
    return out;
}

inline std::string render_tree(const TranslatedTree& t, int depth = 0) {
    std::string out(static_cast<std::size_t>(depth) * 2, ' ');
    out += t.label.name + " : " + t.stype.str() + " = " + term_to_string(t.term) + "\n";
    for (const TranslatedTree& c : t.children) out += render_tree(c, depth + 1);
    return out;
}

}  // namespace montague

#endif
