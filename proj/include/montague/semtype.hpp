// semtype.hpp -- the semantic type algebra over the atoms e and t.
//
// Types form a binary tree: atoms `e` (entities) and `t` (truth values),
// plus the pairing <input,output>. Pairing is deliberately non-associative:
// <e,<e,t>> and <<e,e>,t> are distinct types and never simplified.
// Concrete syntax: `e`, `t`, `<Type,Type>`.

#ifndef MONTAGUE_SEMTYPE_HPP
#define MONTAGUE_SEMTYPE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include "montague/error.hpp"

namespace montague {

class SemType {
public:
    static SemType e() { return SemType(Kind::E); }
    static SemType t() { return SemType(Kind::T); }
    static SemType fn(SemType input, SemType output) {
        SemType ty(Kind::Fn);
        ty.in_ = std::make_shared<SemType>(std::move(input));
        ty.out_ = std::make_shared<SemType>(std::move(output));
        return ty;
    }

    bool is_e() const { return kind_ == Kind::E; }
    bool is_t() const { return kind_ == Kind::T; }
    bool is_fn() const { return kind_ == Kind::Fn; }
    bool is_atom() const { return kind_ != Kind::Fn; }

    const SemType& input() const { return *in_; }
    const SemType& output() const { return *out_; }

    // `t`, or a function chain that eventually yields `t`. These are the
    // types the logical connectives accept (pointwise on functions).
    bool truth_valued() const {
        const SemType* ty = this;
        while (ty->is_fn()) ty = ty->out_.get();
        return ty->is_t();
    }

    bool operator==(const SemType& other) const {
        if (kind_ != other.kind_) return false;
        if (kind_ != Kind::Fn) return true;
        return *in_ == *other.in_ && *out_ == *other.out_;
    }
    bool operator!=(const SemType& other) const { return !(*this == other); }

    std::string str() const {
        switch (kind_) {
            case Kind::E: return "e";
            case Kind::T: return "t";
            default: return "<" + in_->str() + "," + out_->str() + ">";
        }
    }

private:
    enum class Kind { E, T, Fn };
    explicit SemType(Kind k) : kind_(k) {}

    Kind kind_;
    std::shared_ptr<const SemType> in_, out_;
};

// Composition: <A,B> x A = B, undefined otherwise.
inline std::optional<SemType> try_compose(const SemType& fn, const SemType& arg) {
    if (fn.is_fn() && fn.input() == arg) return fn.output();
    return std::nullopt;
}

inline SemType compose(const SemType& fn, const SemType& arg) {
    if (auto out = try_compose(fn, arg)) return *out;
    throw Error(ErrorCode::NotComposable, fn.str() + " x " + arg.str());
}

namespace detail {

inline SemType parse_type_at(const std::string& text, std::size_t& pos) {
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos >= text.size())
        throw Error(ErrorCode::TypeSyntax, "unexpected end of type in '" + text + "'");
    char c = text[pos];
    if (c == 'e') { ++pos; return SemType::e(); }
    if (c == 't') { ++pos; return SemType::t(); }
    if (c == '<') {
        ++pos;
        SemType in = parse_type_at(text, pos);
        skip_ws();
        if (pos >= text.size() || text[pos] != ',')
            throw Error(ErrorCode::TypeSyntax, "expected ',' in '" + text + "'");
        ++pos;
        SemType out = parse_type_at(text, pos);
        skip_ws();
        if (pos >= text.size() || text[pos] != '>')
            throw Error(ErrorCode::TypeSyntax, "expected '>' in '" + text + "'");
        ++pos;
        return SemType::fn(std::move(in), std::move(out));
    }
    throw Error(ErrorCode::TypeSyntax,
                std::string("unexpected character '") + c + "' in '" + text + "'");
}

}  // namespace detail

inline SemType parse_type(const std::string& text) {
    std::size_t pos = 0;
    SemType ty = detail::parse_type_at(text, pos);
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size())
        throw Error(ErrorCode::TypeSyntax, "trailing characters in '" + text + "'");
    return ty;
}

}  // namespace montague

#endif
