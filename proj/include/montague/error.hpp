// error.hpp -- the one exception type used across the library.

#ifndef MONTAGUE_ERROR_HPP
#define MONTAGUE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace montague {

// Every failure the library can report, one code per condition.
// The CLI groups these into "linguistic rejection" vs "file/format error";
// the library itself just throws.
enum class ErrorCode {
    // grammar
    NoOccurrence,
    UnknownToken,
    NoParse,
    GrammarFormat,
    // semantic types
    NotComposable,
    TypeSyntax,
    // typed trees
    MissingLexEntry,
    TypeClash,
    AmbiguousOrientation,
    // terms
    IllTyped,
    TypeMismatch,
    TermSyntax,
    NotImplication,
    AntecedentMismatch,
    // lexicon
    UnknownWord,
    LexiconFormat,
    // models
    UnknownConstant,
    UnboundVariable,
    HigherOrderLambda,
    ModelFormat,
    ArityMismatch,
    // I/O
    FileNotFound,
};

inline std::string_view error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NoOccurrence: return "NoOccurrence";
        case ErrorCode::UnknownToken: return "UnknownToken";
        case ErrorCode::NoParse: return "NoParse";
        case ErrorCode::GrammarFormat: return "GrammarFormat";
        case ErrorCode::NotComposable: return "NotComposable";
        case ErrorCode::TypeSyntax: return "TypeSyntax";
        case ErrorCode::MissingLexEntry: return "MissingLexEntry";
        case ErrorCode::TypeClash: return "TypeClash";
        case ErrorCode::AmbiguousOrientation: return "AmbiguousOrientation";
        case ErrorCode::IllTyped: return "IllTyped";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::TermSyntax: return "TermSyntax";
        case ErrorCode::NotImplication: return "NotImplication";
        case ErrorCode::AntecedentMismatch: return "AntecedentMismatch";
        case ErrorCode::UnknownWord: return "UnknownWord";
        case ErrorCode::LexiconFormat: return "LexiconFormat";
        case ErrorCode::UnknownConstant: return "UnknownConstant";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::HigherOrderLambda: return "HigherOrderLambda";
        case ErrorCode::ModelFormat: return "ModelFormat";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::FileNotFound: return "FileNotFound";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code), message_(message) {}

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }
    std::string_view code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace montague

#endif
