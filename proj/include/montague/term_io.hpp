// term_io.hpp -- concrete syntax for terms.
//
//     application   f(x)
//     abstraction   L v:<e,t>. body
//     quantifiers   forall v. body      exists v. body
//     connectives   ~ f    f & g    f | g    f -> g    f <-> g
//     equality      x = y
//
// `->` is right-associative, the other binary operators left-associative,
// binding from loosest to tightest: <->, ->, |, &, ~, =, application.
// A binder's body extends as far right as possible; binders appearing as
// operands must be parenthesized.
//
// When parsing, a constant must carry a `name:Type` annotation at its first
// occurrence (variables take their type from the binder). The printer emits
// the plain display form without constant annotations.

#ifndef MONTAGUE_TERM_IO_HPP
#define MONTAGUE_TERM_IO_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "montague/error.hpp"
#include "montague/term.hpp"

namespace montague {

namespace detail {

inline int conn_precedence(ConnOp op) {
    switch (op) {
        case ConnOp::Iff: return 1;
        case ConnOp::Implies: return 2;
        case ConnOp::Or: return 3;
        case ConnOp::And: return 4;
    }
    return 0;
}

inline const char* conn_spelling(ConnOp op) {
    switch (op) {
        case ConnOp::Iff: return "<->";
        case ConnOp::Implies: return "->";
        case ConnOp::Or: return "|";
        case ConnOp::And: return "&";
    }
    return "?";
}

inline void print_term(const TermRef& t, int context, std::string& out) {
    auto parenthesize = [&](int prec, auto&& emit) {
        bool wrap = prec < context;
        if (wrap) out += '(';
        emit();
        if (wrap) out += ')';
    };
    switch (t->kind()) {
        case TermKind::Constant:
        case TermKind::Variable:
            out += t->name();
            break;
        case TermKind::Application:
            parenthesize(7, [&] {
                print_term(t->fn(), 7, out);
                out += '(';
                print_term(t->arg(), 0, out);
                out += ')';
            });
            break;
        case TermKind::Lambda:
            parenthesize(0, [&] {
                out += "L " + t->name() + ":" + t->param_type().str() + ". ";
                print_term(t->body(), 0, out);
            });
            break;
        case TermKind::Quantifier:
            parenthesize(0, [&] {
                out += t->quant_kind() == QuantKind::Forall ? "forall " : "exists ";
                out += t->name() + ". ";
                print_term(t->body(), 0, out);
            });
            break;
        case TermKind::Negation:
            parenthesize(5, [&] {
                out += '~';
                print_term(t->operand(), 5, out);
            });
            break;
        case TermKind::Connective: {
            int prec = conn_precedence(t->conn_op());
            bool right_assoc = t->conn_op() == ConnOp::Implies;
            parenthesize(prec, [&] {
                print_term(t->left(), right_assoc ? prec + 1 : prec, out);
                out += ' ';
                out += conn_spelling(t->conn_op());
                out += ' ';
                print_term(t->right(), right_assoc ? prec : prec + 1, out);
            });
            break;
        }
        case TermKind::Equality:
            parenthesize(6, [&] {
                print_term(t->left(), 7, out);
                out += " = ";
                print_term(t->right(), 7, out);
            });
            break;
    }
}

struct TermToken {
    enum class Kind {
        Ident, LParen, RParen, Dot, Colon, Comma, LAngle, RAngle,
        Tilde, Amp, Pipe, Arrow, IffArrow, Equals, End
    };
    Kind kind;
    std::string text;
};

class TermLexer {
public:
    explicit TermLexer(std::string text) : text_(std::move(text)) { advance(); }

    const TermToken& peek() const { return current_; }
    TermToken take() {
        TermToken t = current_;
        advance();
        return t;
    }

private:
    static bool is_delimiter(char c) {
        switch (c) {
            case '(': case ')': case '.': case ':': case ',':
            case '<': case '>': case '~': case '&': case '|':
            case '=': case '-': case ' ': case '\t': case '\n': case '\r':
                return true;
            default:
                return false;
        }
    }

    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
        if (pos_ >= text_.size()) {
            current_ = {TermToken::Kind::End, ""};
            return;
        }
        char c = text_[pos_];
        using K = TermToken::Kind;
        switch (c) {
            case '(': current_ = {K::LParen, "("}; ++pos_; return;
            case ')': current_ = {K::RParen, ")"}; ++pos_; return;
            case '.': current_ = {K::Dot, "."}; ++pos_; return;
            case ':': current_ = {K::Colon, ":"}; ++pos_; return;
            case ',': current_ = {K::Comma, ","}; ++pos_; return;
            case '>': current_ = {K::RAngle, ">"}; ++pos_; return;
            case '~': current_ = {K::Tilde, "~"}; ++pos_; return;
            case '&': current_ = {K::Amp, "&"}; ++pos_; return;
            case '|': current_ = {K::Pipe, "|"}; ++pos_; return;
            case '=': current_ = {K::Equals, "="}; ++pos_; return;
            case '<':
                if (text_.compare(pos_, 3, "<->") == 0) {
                    current_ = {K::IffArrow, "<->"};
                    pos_ += 3;
                } else {
                    current_ = {K::LAngle, "<"};
                    ++pos_;
                }
                return;
            case '-':
                if (text_.compare(pos_, 2, "->") == 0) {
                    current_ = {K::Arrow, "->"};
                    pos_ += 2;
                    return;
                }
                throw Error(ErrorCode::TermSyntax, "stray '-' in term");
            default: {
                std::size_t start = pos_;
                while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
                current_ = {K::Ident, text_.substr(start, pos_ - start)};
                return;
            }
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    TermToken current_;
};

class TermParser {
public:
    explicit TermParser(const std::string& text) : lex_(text) {}

    TermRef parse() {
        TermRef t = expression();
        expect(TermToken::Kind::End, "end of term");
        return t;
    }

private:
    using K = TermToken::Kind;

    TermRef expression() {
        if (lex_.peek().kind == K::Ident) {
            const std::string& word = lex_.peek().text;
            if (word == "L") return lambda();
            if (word == "forall" || word == "exists") return quantifier();
        }
        return iff_chain();
    }

    TermRef lambda() {
        lex_.take();  // L
        std::string name = ident("binder name");
        expect(K::Colon, "':' after binder name");
        SemType ty = type();
        expect(K::Dot, "'.' after binder type");
        bound_.emplace_back(name, ty);
        TermRef body = expression();
        bound_.pop_back();
        return Term::lambda(name, ty, body);
    }

    TermRef quantifier() {
        QuantKind kind = lex_.take().text == "forall" ? QuantKind::Forall : QuantKind::Exists;
        std::string name = ident("quantified variable");
        if (lex_.peek().kind == K::Colon) {
            lex_.take();
            SemType ty = type();
            if (!ty.is_e())
                throw Error(ErrorCode::TermSyntax,
                            "quantified variables have type e, got " + ty.str());
        }
        expect(K::Dot, "'.' after quantified variable");
        bound_.emplace_back(name, SemType::e());
        TermRef body = expression();
        bound_.pop_back();
        return Term::quantifier(kind, name, body);
    }

    TermRef iff_chain() {
        TermRef t = impl_chain();
        while (lex_.peek().kind == K::IffArrow) {
            lex_.take();
            t = Term::connective(ConnOp::Iff, t, impl_chain());
        }
        return t;
    }

    TermRef impl_chain() {
        TermRef t = or_chain();
        if (lex_.peek().kind == K::Arrow) {
            lex_.take();
            return Term::connective(ConnOp::Implies, t, impl_chain());
        }
        return t;
    }

    TermRef or_chain() {
        TermRef t = and_chain();
        while (lex_.peek().kind == K::Pipe) {
            lex_.take();
            t = Term::connective(ConnOp::Or, t, and_chain());
        }
        return t;
    }

    TermRef and_chain() {
        TermRef t = negation();
        while (lex_.peek().kind == K::Amp) {
            lex_.take();
            t = Term::connective(ConnOp::And, t, negation());
        }
        return t;
    }

    TermRef negation() {
        if (lex_.peek().kind == K::Tilde) {
            lex_.take();
            return Term::negation(negation());
        }
        return equality();
    }

    TermRef equality() {
        TermRef t = application();
        if (lex_.peek().kind == K::Equals) {
            lex_.take();
            return Term::equality(t, application());
        }
        return t;
    }

    TermRef application() {
        TermRef t = atom();
        while (lex_.peek().kind == K::LParen) {
            lex_.take();
            TermRef arg = expression();
            expect(K::RParen, "')' after argument");
            t = Term::apply(t, arg);
        }
        return t;
    }

    TermRef atom() {
        if (lex_.peek().kind == K::LParen) {
            lex_.take();
            TermRef t = expression();
            expect(K::RParen, "')'");
            return t;
        }
        std::string name = ident("term");
        if (name == "L" || name == "forall" || name == "exists")
            throw Error(ErrorCode::TermSyntax, "'" + name + "' is reserved");
        std::optional<SemType> annotated;
        if (lex_.peek().kind == K::Colon) {
            lex_.take();
            annotated = type();
        }
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
            if (it->first != name) continue;
            if (annotated && *annotated != it->second)
                throw Error(ErrorCode::TermSyntax, "bound variable " + name +
                                                       " annotated as " + annotated->str() +
                                                       " but bound at " + it->second.str());
            return Term::variable(name, it->second);
        }
        auto known = constants_.find(name);
        if (annotated) {
            if (known != constants_.end() && known->second != *annotated)
                throw Error(ErrorCode::TermSyntax, "constant " + name + " annotated as both " +
                                                       known->second.str() + " and " +
                                                       annotated->str());
            constants_.emplace(name, *annotated);
            return Term::constant(name, *annotated);
        }
        if (known == constants_.end())
            throw Error(ErrorCode::TermSyntax,
                        "constant " + name + " needs a type annotation at its first use");
        return Term::constant(name, known->second);
    }

    SemType type() {
        const TermToken tok = lex_.take();
        if (tok.kind == K::Ident && tok.text == "e") return SemType::e();
        if (tok.kind == K::Ident && tok.text == "t") return SemType::t();
        if (tok.kind == K::LAngle) {
            SemType in = type();
            expect(K::Comma, "',' in type");
            SemType out = type();
            expect(K::RAngle, "'>' in type");
            return SemType::fn(std::move(in), std::move(out));
        }
        throw Error(ErrorCode::TypeSyntax, "expected a type, got '" + tok.text + "'");
    }

    std::string ident(const char* what) {
        if (lex_.peek().kind != K::Ident)
            throw Error(ErrorCode::TermSyntax, std::string("expected ") + what + ", got '" +
                                                   lex_.peek().text + "'");
        return lex_.take().text;
    }

    void expect(K kind, const char* what) {
        if (lex_.peek().kind != kind)
            throw Error(ErrorCode::TermSyntax, std::string("expected ") + what + ", got '" +
                                                   lex_.peek().text + "'");
        lex_.take();
    }

    TermLexer lex_;
    std::vector<std::pair<std::string, SemType>> bound_;
    std::map<std::string, SemType> constants_;
};

}  // namespace detail

inline std::string term_to_string(const TermRef& t) {
    std::string out;
    detail::print_term(t, 0, out);
    return out;
}

inline TermRef parse_term(const std::string& text) {
    return detail::TermParser(text).parse();
}

}  // namespace montague

#endif
