// lexicon.hpp -- word meanings and tokenization.
//
// A lexicon entry pairs a surface form (one or more words) with the
// pre-terminal category it attaches under, a closed term, and its type.
// Text format, one entry per line, `#` for comments:
//
//     surface form | CATEGORY | term-expression | type
//
// The term-expression uses the syntax of term_io.hpp and may itself contain
// `|`; fields are therefore cut at the first two and the last separator.

#ifndef MONTAGUE_LEXICON_HPP
#define MONTAGUE_LEXICON_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "montague/error.hpp"
#include "montague/term.hpp"
#include "montague/term_io.hpp"

namespace montague {

struct LexEntry {
    std::vector<std::string> surface;  // one or more words
    std::string category;              // pre-terminal the entry attaches under
    TermRef term;                      // closed, of type stype
    SemType stype;

    std::string surface_text() const {
        std::string out = surface.front();
        for (std::size_t i = 1; i < surface.size(); ++i) out += " " + surface[i];
        return out;
    }
};

class Lexicon {
public:
    Lexicon() = default;

    void add(LexEntry entry) {
        if (entry.surface.empty() || entry.category.empty())
            throw Error(ErrorCode::LexiconFormat, "entry needs a surface form and a category");
        if (infer_type(entry.term) != entry.stype)
            throw Error(ErrorCode::LexiconFormat,
                        "entry '" + entry.surface_text() + "': term has type " +
                            infer_type(entry.term).str() + ", declared " + entry.stype.str());
        if (!entry.term->free().empty())
            throw Error(ErrorCode::LexiconFormat, "entry '" + entry.surface_text() +
                                                      "': term has free variables");
        if (find(entry.surface_text(), entry.category))
            throw Error(ErrorCode::LexiconFormat,
                        "duplicate entry for ('" + entry.surface_text() + "', " +
                            entry.category + ")");
        entries_.push_back(std::move(entry));
    }

    const std::vector<LexEntry>& entries() const { return entries_; }

    const LexEntry* find(const std::string& surface_text, const std::string& category) const {
        for (const LexEntry& e : entries_)
            if (e.category == category && e.surface_text() == surface_text) return &e;
        return nullptr;
    }

    // longest surface (in words) matching words[from...]; 0 if none
    std::size_t longest_match(const std::vector<std::string>& words, std::size_t from) const {
        std::size_t best = 0;
        for (const LexEntry& e : entries_) {
            if (e.surface.size() <= best || from + e.surface.size() > words.size()) continue;
            bool match = true;
            for (std::size_t i = 0; i < e.surface.size(); ++i)
                if (e.surface[i] != words[from + i]) { match = false; break; }
            if (match) best = e.surface.size();
        }
        return best;
    }

    static Lexicon from_text(const std::string& text);
    static Lexicon from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::FileNotFound, "cannot open lexicon file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return from_text(buf.str());
    }

private:
    std::vector<LexEntry> entries_;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

}  // namespace detail

inline Lexicon Lexicon::from_text(const std::string& text) {
    Lexicon lex;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::string trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto complain = [&](const std::string& why) -> Error {
            return Error(ErrorCode::LexiconFormat, "line " + std::to_string(lineno) + ": " + why);
        };
        std::size_t first = trimmed.find('|');
        std::size_t second = first == std::string::npos ? first : trimmed.find('|', first + 1);
        std::size_t last = trimmed.rfind('|');
        if (first == std::string::npos || second == std::string::npos || last <= second)
            throw complain("expected 'surface | CATEGORY | term | type'");
        try {
            LexEntry entry{detail::split_words(trimmed.substr(0, first)),
                           detail::trim(trimmed.substr(first + 1, second - first - 1)),
                           parse_term(trimmed.substr(second + 1, last - second - 1)),
                           parse_type(detail::trim(trimmed.substr(last + 1)))};
            lex.add(std::move(entry));
        } catch (const Error& e) {
            throw complain(std::string(e.what()));
        }
    }
    return lex;
}

// Whitespace-split, then greedily merge runs of words into the longest
// matching multiword surface. Each output token is a single terminal, e.g.
// "tout le monde aime Alice" becomes [tout le monde, aime, Alice].
inline std::vector<std::string> tokenize(const std::string& sentence, const Lexicon& lex) {
    std::vector<std::string> words = detail::split_words(sentence);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t len = lex.longest_match(words, i);
        if (len == 0) throw Error(ErrorCode::UnknownWord, words[i]);
        std::string token = words[i];
        for (std::size_t k = 1; k < len; ++k) token += " " + words[i + k];
        tokens.push_back(std::move(token));
        i += len;
    }
    return tokens;
}

}  // namespace montague

#endif
