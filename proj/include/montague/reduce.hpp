// reduce.hpp -- beta-normalization with step traces, plus modus ponens.
//
// A redex is either an ordinary beta-redex (L x. b)(a), or an applied
// connective/negation, which distributes pointwise:
//
//     (f & g)(x)  ~>  f(x) & g(x)        (~f)(x)  ~>  ~f(x)
//
// The distribution rule is what lets a conjunction of predicates, produced
// by the coordination entry L Q:<e,t>. L P:<e,t>. (P & Q), eventually reach
// a plain formula once the subject is applied. Simple typing guarantees
// normalization terminates; the recorded trace follows one fixed strategy
// so it can be replayed verbatim in CLI output and golden tests.

#ifndef MONTAGUE_REDUCE_HPP
#define MONTAGUE_REDUCE_HPP

#include <optional>
#include <vector>

#include "montague/error.hpp"
#include "montague/term.hpp"

namespace montague {

enum class Strategy { LeftmostOutermost, RightmostInnermost };

struct ReductionTrace {
    // steps.front() is the input, steps.back() the normal form; consecutive
    // entries differ by exactly one contraction.
    std::vector<TermRef> steps;
    const TermRef& final() const { return steps.back(); }
    std::size_t contractions() const { return steps.empty() ? 0 : steps.size() - 1; }
};

namespace detail {

inline std::optional<TermRef> contract_here(const TermRef& t) {
    if (t->kind() != TermKind::Application) return std::nullopt;
    const TermRef& f = t->fn();
    switch (f->kind()) {
        case TermKind::Lambda:
            return substitute(f->body(), f->name(), f->param_type(), t->arg());
        case TermKind::Connective:
            return Term::connective(f->conn_op(), Term::apply(f->left(), t->arg()),
                                    Term::apply(f->right(), t->arg()));
        case TermKind::Negation:
            return Term::negation(Term::apply(f->operand(), t->arg()));
        default:
            return std::nullopt;
    }
}

inline TermRef rebuild(const TermRef& t, const TermRef& a, const TermRef& b) {
    switch (t->kind()) {
        case TermKind::Application: return Term::apply(a, b);
        case TermKind::Lambda: return Term::lambda(t->name(), t->param_type(), a);
        case TermKind::Quantifier: return Term::quantifier(t->quant_kind(), t->name(), a);
        case TermKind::Negation: return Term::negation(a);
        case TermKind::Connective: return Term::connective(t->conn_op(), a, b);
        case TermKind::Equality: return Term::equality(a, b);
        default: return t;
    }
}

inline std::optional<TermRef> contract_leftmost_outermost(const TermRef& t) {
    if (auto c = contract_here(t)) return c;
    if (t->first()) {
        if (auto ca = contract_leftmost_outermost(t->first()))
            return rebuild(t, *ca, t->second());
        if (t->second()) {
            if (auto cb = contract_leftmost_outermost(t->second()))
                return rebuild(t, t->first(), *cb);
        }
    }
    return std::nullopt;
}

inline std::optional<TermRef> contract_rightmost_innermost(const TermRef& t) {
    if (t->second()) {
        if (auto cb = contract_rightmost_innermost(t->second()))
            return rebuild(t, t->first(), *cb);
    }
    if (t->first()) {
        if (auto ca = contract_rightmost_innermost(t->first()))
            return rebuild(t, *ca, t->second());
    }
    return contract_here(t);
}

}  // namespace detail

inline bool is_normal(const TermRef& t) {
    return !detail::contract_leftmost_outermost(t).has_value();
}

inline ReductionTrace beta_normalize(const TermRef& t,
                                     Strategy strategy = Strategy::LeftmostOutermost) {
    constexpr std::size_t kStepCap = 100000;
    ReductionTrace trace;
    trace.steps.push_back(t);
    while (true) {
        auto next = strategy == Strategy::LeftmostOutermost
                        ? detail::contract_leftmost_outermost(trace.steps.back())
                        : detail::contract_rightmost_innermost(trace.steps.back());
        if (!next) return trace;
        if (trace.steps.size() > kStepCap)
            throw Error(ErrorCode::IllTyped, "reduction exceeded step cap");
        trace.steps.push_back(std::move(*next));
    }
}

// From phi -> psi and phi, conclude psi. The major premise must be an
// implication of type t and the minor premise alpha-equal to its antecedent.
inline TermRef modus_ponens(const TermRef& major, const TermRef& minor) {
    if (major->kind() != TermKind::Connective || major->conn_op() != ConnOp::Implies ||
        !major->type().is_t())
        throw Error(ErrorCode::NotImplication, "major premise is not an implication of type t");
    if (!alpha_eq(major->left(), minor))
        throw Error(ErrorCode::AntecedentMismatch,
                    "minor premise does not match the antecedent");
    return major->right();
}

}  // namespace montague

#endif
