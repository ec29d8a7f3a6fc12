// grammar.hpp -- context-free grammars, derivations and parse trees.
//
// A grammar is the quadruple (start, nonterminals, terminals, productions).
// Right-hand sides are restricted to one or two symbols, epsilon productions
// and productions mentioning the start symbol on the right are rejected, and
// unary chains must be acyclic; this keeps derivation enumeration finite and
// the parser a small CKY chart.
//
// Text format, one production per line:
//
//     LHS -> RHS1 [RHS2]
//
// Lines starting with `#` are comments. The LHS of the first production is
// the start symbol; symbols that never appear as an LHS are terminals. A
// right-hand side consisting entirely of such symbols denotes a single
// terminal, so `PRN -> tout le monde` declares one multiword terminal
// rather than three.

#ifndef MONTAGUE_GRAMMAR_HPP
#define MONTAGUE_GRAMMAR_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "montague/error.hpp"

namespace montague {

enum class SymbolKind { Start, Nonterminal, Terminal };

struct Symbol {
    std::string name;
    SymbolKind kind;

    bool operator==(const Symbol& o) const { return name == o.name && kind == o.kind; }
    bool operator!=(const Symbol& o) const { return !(*this == o); }
    bool operator<(const Symbol& o) const {
        return name != o.name ? name < o.name : kind < o.kind;
    }
    bool is_terminal() const { return kind == SymbolKind::Terminal; }
};

struct Production {
    Symbol lhs;
    std::vector<Symbol> rhs;  // 1 or 2 symbols

    bool operator==(const Production& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

struct ParseTree {
    Symbol label;
    std::vector<ParseTree> children;  // empty iff label is a terminal
    int production = -1;              // index into Grammar::productions(), -1 at leaves
};

class Grammar {
public:
    Grammar(Symbol start, std::vector<Symbol> nonterminals, std::vector<Symbol> terminals,
            std::vector<Production> productions)
        : start_(std::move(start)),
          nonterminals_(std::move(nonterminals)),
          terminals_(std::move(terminals)),
          productions_(std::move(productions)) {
        validate();
    }

    static Grammar from_text(const std::string& text);
    static Grammar from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::FileNotFound, "cannot open grammar file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return from_text(buf.str());
    }

    const Symbol& start() const { return start_; }
    const std::vector<Symbol>& nonterminals() const { return nonterminals_; }
    const std::vector<Symbol>& terminals() const { return terminals_; }
    const std::vector<Production>& productions() const { return productions_; }

    bool has_terminal(const std::string& name) const {
        return std::any_of(terminals_.begin(), terminals_.end(),
                           [&](const Symbol& s) { return s.name == name; });
    }

private:
    void validate() const;

    Symbol start_;
    std::vector<Symbol> nonterminals_;
    std::vector<Symbol> terminals_;
    std::vector<Production> productions_;
};

inline void Grammar::validate() const {
    if (start_.kind != SymbolKind::Start)
        throw Error(ErrorCode::GrammarFormat, "start symbol must have kind start");
    std::set<std::string> names;
    auto declare = [&](const Symbol& s, const char* what) {
        if (s.name.empty())
            throw Error(ErrorCode::GrammarFormat, std::string("empty ") + what + " name");
        if (!names.insert(s.name).second)
            throw Error(ErrorCode::GrammarFormat, "duplicate symbol name: " + s.name);
    };
    declare(start_, "start symbol");
    for (const Symbol& s : nonterminals_) {
        if (s.kind != SymbolKind::Nonterminal)
            throw Error(ErrorCode::GrammarFormat, "misclassified nonterminal: " + s.name);
        declare(s, "nonterminal");
    }
    for (const Symbol& s : terminals_) {
        if (s.kind != SymbolKind::Terminal)
            throw Error(ErrorCode::GrammarFormat, "misclassified terminal: " + s.name);
        declare(s, "terminal");
    }

    auto declared = [&](const Symbol& s) {
        if (s == start_) return true;
        if (std::find(nonterminals_.begin(), nonterminals_.end(), s) != nonterminals_.end())
            return true;
        return std::find(terminals_.begin(), terminals_.end(), s) != terminals_.end();
    };
    for (std::size_t i = 0; i < productions_.size(); ++i) {
        const Production& p = productions_[i];
        if (p.lhs.kind == SymbolKind::Terminal)
            throw Error(ErrorCode::GrammarFormat, "terminal on left-hand side: " + p.lhs.name);
        if (!declared(p.lhs))
            throw Error(ErrorCode::GrammarFormat, "undeclared symbol: " + p.lhs.name);
        if (p.rhs.empty())
            throw Error(ErrorCode::GrammarFormat,
                        "empty right-hand side in production for " + p.lhs.name);
        if (p.rhs.size() > 2)
            throw Error(ErrorCode::GrammarFormat,
                        "right-hand side longer than 2 symbols in production for " + p.lhs.name);
        for (const Symbol& s : p.rhs) {
            if (!declared(s))
                throw Error(ErrorCode::GrammarFormat, "undeclared symbol: " + s.name);
            if (s == start_)
                throw Error(ErrorCode::GrammarFormat,
                            "start symbol on right-hand side in production for " + p.lhs.name);
        }
        for (std::size_t j = 0; j < i; ++j)
            if (productions_[j] == p)
                throw Error(ErrorCode::GrammarFormat,
                            "duplicate production for " + p.lhs.name);
    }

    // unary chains over nonterminals must not loop (A -> B, B -> A)
    std::map<std::string, std::vector<std::string>> unary;
    for (const Production& p : productions_)
        if (p.rhs.size() == 1 && !p.rhs[0].is_terminal())
            unary[p.lhs.name].push_back(p.rhs[0].name);
    std::map<std::string, int> state;  // 0 unseen, 1 in progress, 2 done
    auto dfs = [&](auto&& self, const std::string& v) -> void {
        state[v] = 1;
        for (const std::string& w : unary[v]) {
            if (state[w] == 1)
                throw Error(ErrorCode::GrammarFormat, "unary production cycle through " + w);
            if (state[w] == 0) self(self, w);
        }
        state[v] = 2;
    };
    for (const auto& [v, _] : unary)
        if (state[v] == 0) dfs(dfs, v);
}

inline Grammar Grammar::from_text(const std::string& text) {
    struct RawProduction {
        std::string lhs;
        std::vector<std::string> rhs;
    };
    std::vector<RawProduction> raw;
    std::set<std::string> lhs_names;

    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (fields >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() < 3 || tokens[1] != "->")
            throw Error(ErrorCode::GrammarFormat,
                        "line " + std::to_string(lineno) + ": expected 'LHS -> RHS...'");
        RawProduction p;
        p.lhs = tokens[0];
        p.rhs.assign(tokens.begin() + 2, tokens.end());
        lhs_names.insert(p.lhs);
        raw.push_back(std::move(p));
    }
    if (raw.empty()) throw Error(ErrorCode::GrammarFormat, "no productions");

    const std::string start_name = raw.front().lhs;
    std::set<std::string> terminal_names;
    std::vector<Production> productions;
    auto classify = [&](const std::string& name) -> Symbol {
        if (name == start_name) return {name, SymbolKind::Start};
        if (lhs_names.count(name)) return {name, SymbolKind::Nonterminal};
        terminal_names.insert(name);
        return {name, SymbolKind::Terminal};
    };
    for (const RawProduction& p : raw) {
        Production prod;
        prod.lhs = classify(p.lhs);
        bool all_terminal = std::none_of(p.rhs.begin(), p.rhs.end(), [&](const std::string& s) {
            return lhs_names.count(s) > 0;
        });
        if (all_terminal && p.rhs.size() > 1) {
            // a run of words none of which is ever rewritten: one multiword terminal
            std::string joined = p.rhs[0];
            for (std::size_t i = 1; i < p.rhs.size(); ++i) joined += " " + p.rhs[i];
            terminal_names.insert(joined);
            prod.rhs.push_back({joined, SymbolKind::Terminal});
        } else {
            for (const std::string& s : p.rhs) prod.rhs.push_back(classify(s));
        }
        productions.push_back(std::move(prod));
    }

    std::vector<Symbol> nonterminals;
    for (const std::string& n : lhs_names)
        if (n != start_name) nonterminals.push_back({n, SymbolKind::Nonterminal});
    std::vector<Symbol> terminals;
    for (const std::string& n : terminal_names) terminals.push_back({n, SymbolKind::Terminal});

    return Grammar({start_name, SymbolKind::Start}, std::move(nonterminals),
                   std::move(terminals), std::move(productions));
}

// Rewrites the `occurrence`-th instance (0-based, left to right) of p.lhs
// in w by p.rhs. The input sequence is left untouched.
inline std::vector<Symbol> apply_production(const std::vector<Symbol>& w, const Production& p,
                                            int occurrence) {
    int seen = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != p.lhs) continue;
        if (seen++ < occurrence) continue;
        std::vector<Symbol> out;
        out.reserve(w.size() + p.rhs.size() - 1);
        out.insert(out.end(), w.begin(), w.begin() + i);
        out.insert(out.end(), p.rhs.begin(), p.rhs.end());
        out.insert(out.end(), w.begin() + i + 1, w.end());
        return out;
    }
    throw Error(ErrorCode::NoOccurrence,
                "no occurrence " + std::to_string(occurrence) + " of " + p.lhs.name);
}

inline std::vector<std::string> yield_of(const ParseTree& t) {
    std::vector<std::string> out;
    auto walk = [&](auto&& self, const ParseTree& node) -> void {
        if (node.children.empty()) {
            out.push_back(node.label.name);
            return;
        }
        for (const ParseTree& c : node.children) self(self, c);
    };
    walk(walk, t);
    return out;
}

namespace detail {

// pre-order production indices; a total, injective key over trees of one sentence
inline void production_key(const ParseTree& t, std::vector<int>& key) {
    if (t.children.empty()) return;
    key.push_back(t.production);
    for (const ParseTree& c : t.children) production_key(c, key);
}

}  // namespace detail

// All parse trees rooted at the start symbol whose yield equals `tokens`,
// ordered by their pre-order production-index sequences. Empty result means
// the token sequence is not in the language.
inline std::vector<ParseTree> parse(const Grammar& g, const std::vector<std::string>& tokens) {
    for (const std::string& t : tokens)
        if (!g.has_terminal(t)) throw Error(ErrorCode::UnknownToken, t);
    const int n = static_cast<int>(tokens.size());
    if (n == 0) return {};

    struct Entry {
        int production;  // -1: terminal leaf
        int split;       // binary split offset, unused otherwise
    };
    // cell(i,len) maps symbol name -> derivations of tokens[i, i+len)
    using Cell = std::map<std::string, std::vector<Entry>>;
    std::vector<std::vector<Cell>> chart(n, std::vector<Cell>(n + 1));

    const auto& prods = g.productions();
    auto close_unary = [&](Cell& cell) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t pi = 0; pi < prods.size(); ++pi) {
                const Production& p = prods[pi];
                if (p.rhs.size() != 1) continue;
                if (!cell.count(p.rhs[0].name)) continue;
                auto& entries = cell[p.lhs.name];
                bool present = std::any_of(entries.begin(), entries.end(), [&](const Entry& e) {
                    return e.production == static_cast<int>(pi);
                });
                if (!present) {
                    entries.push_back({static_cast<int>(pi), 0});
                    changed = true;
                }
            }
        }
    };

    for (int i = 0; i < n; ++i) {
        chart[i][1][tokens[i]].push_back({-1, 0});
        close_unary(chart[i][1]);
    }
    for (int len = 2; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            Cell& cell = chart[i][len];
            for (int k = 1; k < len; ++k) {
                for (std::size_t pi = 0; pi < prods.size(); ++pi) {
                    const Production& p = prods[pi];
                    if (p.rhs.size() != 2) continue;
                    if (!chart[i][k].count(p.rhs[0].name)) continue;
                    if (!chart[i + k][len - k].count(p.rhs[1].name)) continue;
                    cell[p.lhs.name].push_back({static_cast<int>(pi), k});
                }
            }
            close_unary(cell);
        }
    }

    auto build = [&](auto&& self, int i, int len, const std::string& symbol)
        -> std::vector<ParseTree> {
        std::vector<ParseTree> out;
        auto found = chart[i][len].find(symbol);
        if (found == chart[i][len].end()) return out;
        for (const Entry& e : found->second) {
            if (e.production < 0) {
                out.push_back({{symbol, SymbolKind::Terminal}, {}, -1});
                continue;
            }
            const Production& p = prods[e.production];
            if (p.rhs.size() == 1) {
                for (ParseTree& sub : self(self, i, len, p.rhs[0].name))
                    out.push_back({p.lhs, {std::move(sub)}, e.production});
            } else {
                auto lefts = self(self, i, e.split, p.rhs[0].name);
                auto rights = self(self, i + e.split, len - e.split, p.rhs[1].name);
                for (const ParseTree& l : lefts)
                    for (const ParseTree& r : rights)
                        out.push_back({p.lhs, {l, r}, e.production});
            }
        }
        return out;
    };

    std::vector<ParseTree> trees = build(build, 0, n, g.start().name);
    std::stable_sort(trees.begin(), trees.end(), [](const ParseTree& a, const ParseTree& b) {
        std::vector<int> ka, kb;
        detail::production_key(a, ka);
        detail::production_key(b, kb);
        return ka < kb;
    });
    return trees;
}

// Exhaustive breadth-first closure of production application from the start
// symbol: exactly the sentences of the language with at most `max_tokens`
// tokens. Serves as the independent membership oracle for `parse`.
inline std::set<std::vector<std::string>> enumerate_language(const Grammar& g, int max_tokens) {
    if (max_tokens < 1)
        throw Error(ErrorCode::GrammarFormat, "max_tokens must be at least 1");
    std::set<std::vector<std::string>> language;
    std::set<std::vector<std::string>> visited;
    std::queue<std::vector<Symbol>> queue;
    queue.push({g.start()});

    auto name_key = [](const std::vector<Symbol>& form) {
        std::vector<std::string> key;
        key.reserve(form.size());
        for (const Symbol& s : form) key.push_back(s.name);
        return key;
    };
    visited.insert(name_key(queue.front()));

    while (!queue.empty()) {
        std::vector<Symbol> form = std::move(queue.front());
        queue.pop();
        bool all_terminal = std::all_of(form.begin(), form.end(),
                                        [](const Symbol& s) { return s.is_terminal(); });
        if (all_terminal) {
            language.insert(name_key(form));
            continue;
        }
        for (const Production& p : g.productions()) {
            int occurrences = static_cast<int>(std::count(form.begin(), form.end(), p.lhs));
            for (int occ = 0; occ < occurrences; ++occ) {
                std::vector<Symbol> next = apply_production(form, p, occ);
                if (static_cast<int>(next.size()) > max_tokens) continue;
                if (visited.insert(name_key(next)).second) queue.push(std::move(next));
            }
        }
    }
    return language;
}

}  // namespace montague

#endif
