// term.hpp -- the intermediate logical language.
//
// Terms combine the simply typed lambda calculus with first-order logic:
// typed constants and variables, application, abstraction, the connectives
// ~ & | -> <->, the quantifiers forall/exists (over individuals only), and
// equality between individuals.
//
// Terms are immutable and shared; every constructor checks the typing rules,
// so a Term in hand is always well-typed. Predicates are plain constants of
// curried type (aime : <e,<e,t>>) rather than a separate n-ary node.
//
// Connectives accept, besides formulas of type t, two operands of one common
// truth-valued function type; such a conjunction of predicates behaves
// pointwise under application (see reduce.hpp). This is what makes the
// coordination lexicon entry L Q:<e,t>. L P:<e,t>. (P & Q) expressible.

#ifndef MONTAGUE_TERM_HPP
#define MONTAGUE_TERM_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "montague/error.hpp"
#include "montague/semtype.hpp"

namespace montague {

class Term;
using TermRef = std::shared_ptr<const Term>;

enum class TermKind { Constant, Variable, Application, Lambda, Negation, Connective, Quantifier, Equality };
enum class ConnOp { And, Or, Implies, Iff };
enum class QuantKind { Forall, Exists };

class Term {
public:
    static TermRef constant(std::string name, SemType type) {
        if (name.empty()) throw Error(ErrorCode::IllTyped, "constant with empty name");
        return make(TermKind::Constant, std::move(type), std::move(name), nullptr, nullptr);
    }

    static TermRef variable(std::string name, SemType type) {
        if (name.empty()) throw Error(ErrorCode::IllTyped, "variable with empty name");
        return make(TermKind::Variable, std::move(type), std::move(name), nullptr, nullptr);
    }

    static TermRef apply(TermRef fn, TermRef arg) {
        auto out = try_compose(fn->type(), arg->type());
        if (!out)
            throw Error(ErrorCode::IllTyped, "cannot apply " + fn->type().str() +
                                                 " to " + arg->type().str());
        return make(TermKind::Application, std::move(*out), "", std::move(fn), std::move(arg));
    }

    static TermRef lambda(std::string param, SemType param_type, TermRef body) {
        if (auto used = body->free_type(param); used && *used != param_type)
            throw Error(ErrorCode::IllTyped, "variable " + param + " occurs at type " +
                                                 used->str() + " under a binder of type " +
                                                 param_type.str());
        SemType ty = SemType::fn(param_type, body->type());
        return make(TermKind::Lambda, std::move(ty), std::move(param), std::move(body), nullptr);
    }

    static TermRef negation(TermRef operand) {
        if (!operand->type().truth_valued())
            throw Error(ErrorCode::IllTyped,
                        "negation of non-truth-valued type " + operand->type().str());
        SemType ty = operand->type();
        return make(TermKind::Negation, std::move(ty), "", std::move(operand), nullptr);
    }

    static TermRef connective(ConnOp op, TermRef left, TermRef right) {
        if (left->type() != right->type())
            throw Error(ErrorCode::IllTyped, "connective operands of types " +
                                                 left->type().str() + " and " +
                                                 right->type().str());
        if (!left->type().truth_valued())
            throw Error(ErrorCode::IllTyped,
                        "connective over non-truth-valued type " + left->type().str());
        SemType ty = left->type();
        auto t = make(TermKind::Connective, std::move(ty), "", std::move(left), std::move(right));
        t->conn_ = op;
        return t;
    }

    static TermRef quantifier(QuantKind kind, std::string var, TermRef body) {
        if (!body->type().is_t())
            throw Error(ErrorCode::IllTyped,
                        "quantifier body has type " + body->type().str() + ", wanted t");
        if (auto used = body->free_type(var); used && !used->is_e())
            throw Error(ErrorCode::IllTyped,
                        "quantified variable " + var + " occurs at type " + used->str());
        auto t = make(TermKind::Quantifier, SemType::t(), std::move(var), std::move(body), nullptr);
        t->quant_ = kind;
        return t;
    }

    static TermRef equality(TermRef left, TermRef right) {
        if (!left->type().is_e() || !right->type().is_e())
            throw Error(ErrorCode::IllTyped, "equality between types " + left->type().str() +
                                                 " and " + right->type().str());
        return make(TermKind::Equality, SemType::t(), "", std::move(left), std::move(right));
    }

    TermKind kind() const { return kind_; }
    const SemType& type() const { return type_; }

    // Constant/Variable: the identifier. Lambda/Quantifier: the binder name.
    const std::string& name() const { return name_; }
    SemType param_type() const { return type_.input(); }  // Lambda only
    ConnOp conn_op() const { return conn_; }
    QuantKind quant_kind() const { return quant_; }

    const TermRef& fn() const { return a_; }       // Application
    const TermRef& arg() const { return b_; }      // Application
    const TermRef& body() const { return a_; }     // Lambda/Quantifier
    const TermRef& operand() const { return a_; }  // Negation
    const TermRef& left() const { return a_; }     // Connective/Equality
    const TermRef& right() const { return b_; }    // Connective/Equality

    // positional child access for generic traversals; null when absent
    const TermRef& first() const { return a_; }
    const TermRef& second() const { return b_; }

    // Free variables with their types.
    const std::map<std::string, SemType>& free() const { return free_; }
    std::optional<SemType> free_type(const std::string& name) const {
        auto it = free_.find(name);
        if (it == free_.end()) return std::nullopt;
        return it->second;
    }

private:
    Term(TermKind kind, SemType type) : kind_(kind), type_(std::move(type)) {}

    static std::shared_ptr<Term> make(TermKind kind, SemType type, std::string name, TermRef a,
                                      TermRef b) {
        auto t = std::shared_ptr<Term>(new Term(kind, std::move(type)));
        t->name_ = std::move(name);
        t->a_ = std::move(a);
        t->b_ = std::move(b);
        t->collect_free();
        return t;
    }

    void merge_free(const std::map<std::string, SemType>& more) {
        for (const auto& [n, ty] : more) {
            auto [it, inserted] = free_.emplace(n, ty);
            if (!inserted && it->second != ty)
                throw Error(ErrorCode::IllTyped, "variable " + n + " used at types " +
                                                     it->second.str() + " and " + ty.str());
        }
    }

    void collect_free() {
        switch (kind_) {
            case TermKind::Constant:
                break;
            case TermKind::Variable:
                free_.emplace(name_, type_);
                break;
            case TermKind::Lambda:
            case TermKind::Quantifier:
                free_ = a_->free_;
                free_.erase(name_);
                break;
            case TermKind::Negation:
                free_ = a_->free_;
                break;
            default:
                free_ = a_->free_;
                merge_free(b_->free_);
        }
    }

    TermKind kind_;
    SemType type_;
    std::string name_;
    TermRef a_, b_;
    ConnOp conn_ = ConnOp::And;
    QuantKind quant_ = QuantKind::Forall;
    std::map<std::string, SemType> free_;
};

// The unique type of a well-typed term; construction already guarantees it.
inline SemType infer_type(const TermRef& t) { return t->type(); }

inline std::map<std::string, SemType> free_vars(const TermRef& t) { return t->free(); }

// Alpha-equivalence: identical up to consistent renaming of bound variables.
inline bool alpha_eq(const TermRef& a, const TermRef& b) {
    using Binders = std::vector<std::pair<std::string, std::string>>;
    auto walk = [](auto&& self, const TermRef& x, const TermRef& y, Binders& env) -> bool {
        if (x->kind() != y->kind() || x->type() != y->type()) return false;
        switch (x->kind()) {
            case TermKind::Constant:
                return x->name() == y->name();
            case TermKind::Variable: {
                for (auto it = env.rbegin(); it != env.rend(); ++it) {
                    bool lx = it->first == x->name(), ly = it->second == y->name();
                    if (lx || ly) return lx && ly;
                }
                return x->name() == y->name();  // both free
            }
            case TermKind::Lambda:
            case TermKind::Quantifier: {
                if (x->kind() == TermKind::Quantifier && x->quant_kind() != y->quant_kind())
                    return false;
                env.emplace_back(x->name(), y->name());
                bool ok = self(self, x->body(), y->body(), env);
                env.pop_back();
                return ok;
            }
            case TermKind::Negation:
                return self(self, x->operand(), y->operand(), env);
            case TermKind::Connective:
                if (x->conn_op() != y->conn_op()) return false;
                [[fallthrough]];
            case TermKind::Equality:
            case TermKind::Application: {
                const TermRef &xa = x->kind() == TermKind::Application ? x->fn() : x->left();
                const TermRef &xb = x->kind() == TermKind::Application ? x->arg() : x->right();
                const TermRef &ya = y->kind() == TermKind::Application ? y->fn() : y->left();
                const TermRef &yb = y->kind() == TermKind::Application ? y->arg() : y->right();
                return self(self, xa, ya, env) && self(self, xb, yb, env);
            }
        }
        return false;
    };
    Binders env;
    return walk(walk, a, b, env);
}

namespace detail {

// smallest prime-suffixed name (x', x'', ...) avoiding `taken`
inline std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    std::string candidate = base;
    do {
        candidate += '\'';
    } while (taken.count(candidate));
    return candidate;
}

}  // namespace detail

// Capture-avoiding substitution of `replacement` for free occurrences of the
// variable named `var` (of type var_type). Binders that would capture a free
// variable of the replacement are renamed with prime suffixes.
inline TermRef substitute(const TermRef& t, const std::string& var, const SemType& var_type,
                          const TermRef& replacement) {
    if (replacement->type() != var_type)
        throw Error(ErrorCode::TypeMismatch, "substituting a " + replacement->type().str() +
                                                 " for variable " + var + " of type " +
                                                 var_type.str());
    if (!t->free_type(var)) return t;
    switch (t->kind()) {
        case TermKind::Constant:
            return t;
        case TermKind::Variable:
            return t->name() == var ? replacement : t;
        case TermKind::Application:
            return Term::apply(substitute(t->fn(), var, var_type, replacement),
                               substitute(t->arg(), var, var_type, replacement));
        case TermKind::Lambda:
        case TermKind::Quantifier: {
            if (t->name() == var) return t;  // shadowed; unreachable given the free check
            std::string binder = t->name();
            TermRef body = t->body();
            if (replacement->free_type(binder)) {
                std::set<std::string> taken;
                for (const auto& [n, _] : replacement->free()) taken.insert(n);
                for (const auto& [n, _] : body->free()) taken.insert(n);
                taken.insert(var);
                SemType binder_type =
                    t->kind() == TermKind::Lambda ? t->param_type() : SemType::e();
                std::string renamed = detail::fresh_name(binder, taken);
                body = substitute(body, binder, binder_type, Term::variable(renamed, binder_type));
                binder = renamed;
            }
            body = substitute(body, var, var_type, replacement);
            return t->kind() == TermKind::Lambda
                       ? Term::lambda(binder, t->param_type(), body)
                       : Term::quantifier(t->quant_kind(), binder, body);
        }
        case TermKind::Negation:
            return Term::negation(substitute(t->operand(), var, var_type, replacement));
        case TermKind::Connective:
            return Term::connective(t->conn_op(),
                                    substitute(t->left(), var, var_type, replacement),
                                    substitute(t->right(), var, var_type, replacement));
        case TermKind::Equality:
            return Term::equality(substitute(t->left(), var, var_type, replacement),
                                  substitute(t->right(), var, var_type, replacement));
    }
    throw Error(ErrorCode::IllTyped, "unreachable term kind");
}

inline TermRef substitute(const TermRef& t, const TermRef& var, const TermRef& replacement) {
    if (var->kind() != TermKind::Variable)
        throw Error(ErrorCode::TypeMismatch, "substitution target is not a variable");
    return substitute(t, var->name(), var->type(), replacement);
}

}  // namespace montague

#endif
