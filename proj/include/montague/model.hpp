// model.hpp -- finite models and truth evaluation.
//
// A model is a finite set of entities plus an interpretation of constants:
// type-e constants denote entities, predicates denote total curried
// functions down to the truth values vrai/faux.
//
// Text format, one declaration per line, `#` for comments:
//
//     entity <name>
//     const <logical-name> : e = <entity-name>
//     fact <pred>(<arg>)(<arg>)... = vrai|faux
//
// Fact arguments name entities, directly or through a declared constant.
// Unlisted atomic facts default to faux (closed world), which is what makes
// the predicate functions total without exhaustive listing.

#ifndef MONTAGUE_MODEL_HPP
#define MONTAGUE_MODEL_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "montague/error.hpp"
#include "montague/semtype.hpp"
#include "montague/term.hpp"
#include "montague/translate.hpp"

namespace montague {

inline const char* truth_name(bool v) { return v ? "vrai" : "faux"; }

class SemValue {
public:
    using Table = std::vector<std::pair<SemValue, SemValue>>;

    static SemValue entity(std::string name) {
        SemValue v(Kind::Entity);
        v.entity_ = std::move(name);
        return v;
    }
    static SemValue truth(bool value) {
        SemValue v(Kind::Truth);
        v.truth_ = value;
        return v;
    }
    static SemValue func(Table table) {
        SemValue v(Kind::Func);
        std::sort(table.begin(), table.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        v.table_ = std::move(table);
        return v;
    }

    bool is_entity() const { return kind_ == Kind::Entity; }
    bool is_truth() const { return kind_ == Kind::Truth; }
    bool is_func() const { return kind_ == Kind::Func; }

    const std::string& entity_name() const { return entity_; }
    bool truth_value() const { return truth_; }
    const Table& table() const { return table_; }

    const SemValue& call(const SemValue& arg) const {
        for (const auto& [k, v] : table_)
            if (k == arg) return v;
        throw Error(ErrorCode::ModelFormat, "function has no value at " + arg.str());
    }

    bool operator==(const SemValue& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case Kind::Entity: return entity_ == o.entity_;
            case Kind::Truth: return truth_ == o.truth_;
            default: return table_ == o.table_;
        }
    }
    bool operator!=(const SemValue& o) const { return !(*this == o); }
    bool operator<(const SemValue& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        switch (kind_) {
            case Kind::Entity: return entity_ < o.entity_;
            case Kind::Truth: return truth_ < o.truth_;
            default: return table_ < o.table_;
        }
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Entity: return entity_;
            case Kind::Truth: return truth_name(truth_);
            default: {
                std::string out = "{";
                for (std::size_t i = 0; i < table_.size(); ++i) {
                    if (i) out += ", ";
                    out += table_[i].first.str() + " -> " + table_[i].second.str();
                }
                return out + "}";
            }
        }
    }

private:
    enum class Kind { Entity, Truth, Func };
    explicit SemValue(Kind k) : kind_(k) {}

    Kind kind_;
    std::string entity_;
    bool truth_ = false;
    Table table_;
};

struct World {
    std::vector<std::string> entities;

    bool contains(const std::string& name) const {
        return std::find(entities.begin(), entities.end(), name) != entities.end();
    }
};

class Model {
public:
    explicit Model(World world) : world_(std::move(world)) {
        if (world_.entities.empty())
            throw Error(ErrorCode::ModelFormat, "world has no entities");
        for (std::size_t i = 0; i < world_.entities.size(); ++i)
            for (std::size_t j = i + 1; j < world_.entities.size(); ++j)
                if (world_.entities[i] == world_.entities[j])
                    throw Error(ErrorCode::ModelFormat,
                                "duplicate entity: " + world_.entities[i]);
    }

    const World& world() const { return world_; }

    void set_constant(std::string name, SemType type, SemValue value) {
        if (interpretation_.count(name))
            throw Error(ErrorCode::ModelFormat, "constant interpreted twice: " + name);
        interpretation_.emplace(std::move(name), std::make_pair(std::move(type), std::move(value)));
    }

    const std::pair<SemType, SemValue>* find(const std::string& name) const {
        auto it = interpretation_.find(name);
        return it == interpretation_.end() ? nullptr : &it->second;
    }

    const std::map<std::string, std::pair<SemType, SemValue>>& interpretation() const {
        return interpretation_;
    }

    static Model from_text(const std::string& text);
    static Model from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::FileNotFound, "cannot open model file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return from_text(buf.str());
    }

private:
    World world_;
    std::map<std::string, std::pair<SemType, SemValue>> interpretation_;
};

// The truth table for the propositional operators.
enum class LogicOp { Not, And, Or, Implies, Iff };

inline bool eval_connective(LogicOp op, bool a, std::optional<bool> b = std::nullopt) {
    if (op == LogicOp::Not) {
        if (b) throw Error(ErrorCode::ArityMismatch, "negation takes one operand");
        return !a;
    }
    if (!b) throw Error(ErrorCode::ArityMismatch, "binary connective takes two operands");
    switch (op) {
        case LogicOp::And: return a && *b;
        case LogicOp::Or: return a || *b;
        case LogicOp::Implies: return !a || *b;
        case LogicOp::Iff: return a == *b;
        default: return false;  // unreachable
    }
}

inline LogicOp to_logic_op(ConnOp op) {
    switch (op) {
        case ConnOp::And: return LogicOp::And;
        case ConnOp::Or: return LogicOp::Or;
        case ConnOp::Implies: return LogicOp::Implies;
        default: return LogicOp::Iff;
    }
}

// variable name -> entity name
using Assignment = std::map<std::string, std::string>;

namespace detail {

inline SemValue pointwise_not(const SemValue& v) {
    if (v.is_truth()) return SemValue::truth(!v.truth_value());
    SemValue::Table table;
    for (const auto& [k, out] : v.table()) table.emplace_back(k, pointwise_not(out));
    return SemValue::func(std::move(table));
}

inline SemValue pointwise_conn(LogicOp op, const SemValue& a, const SemValue& b) {
    if (a.is_truth())
        return SemValue::truth(eval_connective(op, a.truth_value(), b.truth_value()));
    SemValue::Table table;
    for (const auto& [k, out] : a.table())
        table.emplace_back(k, pointwise_conn(op, out, b.call(k)));
    return SemValue::func(std::move(table));
}

}  // namespace detail

// Evaluates a term against a model. Free variables are read from the
// assignment; lambda parameters must have type e, so functions are built by
// enumerating the (finite) entity domain. Connectives over predicate values
// combine the function tables pointwise.
inline SemValue interpret(const TermRef& t, const Model& m, const Assignment& a = {}) {
    switch (t->kind()) {
        case TermKind::Constant: {
            const auto* entry = m.find(t->name());
            if (!entry) throw Error(ErrorCode::UnknownConstant, t->name());
            if (entry->first != t->type())
                throw Error(ErrorCode::UnknownConstant,
                            t->name() + " interpreted at type " + entry->first.str() +
                                ", used at " + t->type().str());
            return entry->second;
        }
        case TermKind::Variable: {
            auto it = a.find(t->name());
            if (it == a.end()) throw Error(ErrorCode::UnboundVariable, t->name());
            return SemValue::entity(it->second);
        }
        case TermKind::Application:
            return interpret(t->fn(), m, a).call(interpret(t->arg(), m, a));
        case TermKind::Lambda: {
            if (!t->param_type().is_e())
                throw Error(ErrorCode::HigherOrderLambda,
                            "lambda parameter of type " + t->param_type().str() +
                                "; normalize the term first");
            SemValue::Table table;
            Assignment extended = a;
            for (const std::string& d : m.world().entities) {
                extended[t->name()] = d;
                table.emplace_back(SemValue::entity(d), interpret(t->body(), m, extended));
            }
            return SemValue::func(std::move(table));
        }
        case TermKind::Negation:
            return detail::pointwise_not(interpret(t->operand(), m, a));
        case TermKind::Connective:
            return detail::pointwise_conn(to_logic_op(t->conn_op()), interpret(t->left(), m, a),
                                          interpret(t->right(), m, a));
        case TermKind::Quantifier: {
            bool universal = t->quant_kind() == QuantKind::Forall;
            bool result = universal;
            Assignment extended = a;
            for (const std::string& d : m.world().entities) {
                extended[t->name()] = d;
                bool here = interpret(t->body(), m, extended).truth_value();
                if (universal) result = result && here;
                else result = result || here;
            }
            return SemValue::truth(result);
        }
        case TermKind::Equality:
            return SemValue::truth(interpret(t->left(), m, a).entity_name() ==
                                   interpret(t->right(), m, a).entity_name());
    }
    throw Error(ErrorCode::IllTyped, "unreachable term kind");
}

// Full pipeline: translate the sentence, then evaluate the closed formula.
inline bool evaluate_sentence(const Grammar& g, const Lexicon& lex, const Model& m,
                              const std::string& sentence) {
    return interpret(translate_sentence(g, lex, sentence), m).truth_value();
}

struct Diagnostic {
    std::string code;
    std::string message;
};

namespace detail {

inline void check_value_shape(const Model& m, const SemType& type, const SemValue& value,
                              const std::string& path, std::vector<Diagnostic>& out) {
    if (type.is_e()) {
        if (!value.is_entity())
            out.push_back({"TypeShape", path + ": expected an entity, got " + value.str()});
        else if (!m.world().contains(value.entity_name()))
            out.push_back({"UnknownEntity", path + ": " + value.entity_name()});
        return;
    }
    if (type.is_t()) {
        if (!value.is_truth())
            out.push_back({"TypeShape", path + ": expected vrai/faux, got " + value.str()});
        return;
    }
    if (!value.is_func()) {
        out.push_back({"TypeShape", path + ": expected a function, got " + value.str()});
        return;
    }
    // totality over the enumerable domains
    if (type.input().is_e()) {
        for (const std::string& d : m.world().entities) {
            bool found = std::any_of(value.table().begin(), value.table().end(),
                                     [&](const auto& kv) {
                                         return kv.first.is_entity() &&
                                                kv.first.entity_name() == d;
                                     });
            if (!found) out.push_back({"IncompleteFunction", path + ": no value at " + d});
        }
    } else if (type.input().is_t()) {
        for (bool b : {false, true}) {
            bool found = std::any_of(value.table().begin(), value.table().end(),
                                     [&](const auto& kv) {
                                         return kv.first.is_truth() &&
                                                kv.first.truth_value() == b;
                                     });
            if (!found)
                out.push_back({"IncompleteFunction", path + ": no value at " + truth_name(b)});
        }
    }
    for (const auto& [k, v] : value.table()) {
        check_value_shape(m, type.input(), k, path + " domain", out);
        check_value_shape(m, type.output(), v, path + "(" + k.str() + ")", out);
    }
}

}  // namespace detail

// Empty result iff every interpretation entry is total, lands in the world,
// and matches the shape of its declared type.
inline std::vector<Diagnostic> validate_model(const Model& m) {
    std::vector<Diagnostic> out;
    for (const auto& [name, entry] : m.interpretation())
        detail::check_value_shape(m, entry.first, entry.second, name, out);
    return out;
}

inline Model Model::from_text(const std::string& text) {
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;

    World world;
    std::vector<std::tuple<std::string, std::string, int>> consts;  // name, entity, line
    struct FactSet {
        int arity = -1;
        std::map<std::vector<std::string>, bool> rows;
    };
    std::map<std::string, FactSet> facts;
    std::vector<std::tuple<std::string, std::vector<std::string>, bool, int>> fact_lines;

    auto fail = [](int no, const std::string& why) -> Error {
        return Error(ErrorCode::ModelFormat, "line " + std::to_string(no) + ": " + why);
    };

    while (std::getline(lines, line)) {
        ++lineno;
        std::string trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        std::istringstream in(trimmed);
        std::string keyword;
        in >> keyword;
        if (keyword == "entity") {
            std::string name, extra;
            if (!(in >> name) || (in >> extra))
                throw fail(lineno, "expected 'entity <name>'");
            world.entities.push_back(name);
        } else if (keyword == "const") {
            std::string rest;
            std::getline(in, rest);
            std::size_t colon = rest.find(':');
            std::size_t equals = rest.find('=');
            if (colon == std::string::npos || equals == std::string::npos || equals < colon)
                throw fail(lineno, "expected 'const <name> : e = <entity>'");
            std::string name = detail::trim(rest.substr(0, colon));
            std::string type_text = detail::trim(rest.substr(colon + 1, equals - colon - 1));
            std::string entity = detail::trim(rest.substr(equals + 1));
            if (name.empty() || entity.empty()) throw fail(lineno, "missing name or entity");
            if (parse_type(type_text) != SemType::e())
                throw fail(lineno, "const declarations are for type-e constants only");
            consts.emplace_back(name, entity, lineno);
        } else if (keyword == "fact") {
            std::string rest;
            std::getline(in, rest);
            rest = detail::trim(rest);
            std::size_t open = rest.find('(');
            if (open == std::string::npos || open == 0)
                throw fail(lineno, "expected 'fact <pred>(<arg>)... = vrai|faux'");
            std::string pred = detail::trim(rest.substr(0, open));
            std::vector<std::string> args;
            std::size_t pos = open;
            while (pos < rest.size() && rest[pos] == '(') {
                std::size_t close = rest.find(')', pos);
                if (close == std::string::npos) throw fail(lineno, "unbalanced parentheses");
                std::string arg = detail::trim(rest.substr(pos + 1, close - pos - 1));
                if (arg.empty()) throw fail(lineno, "empty fact argument");
                args.push_back(std::move(arg));
                pos = close + 1;
                while (pos < rest.size() && rest[pos] == ' ') ++pos;
            }
            if (args.empty()) throw fail(lineno, "fact needs at least one argument");
            if (pos >= rest.size() || rest[pos] != '=')
                throw fail(lineno, "expected '=' after fact arguments");
            std::string value = detail::trim(rest.substr(pos + 1));
            if (value != "vrai" && value != "faux")
                throw fail(lineno, "fact value must be vrai or faux, got '" + value + "'");
            fact_lines.emplace_back(pred, std::move(args), value == "vrai", lineno);
        } else {
            throw fail(lineno, "unknown declaration '" + keyword + "'");
        }
    }

    Model model(std::move(world));

    std::map<std::string, std::string> const_entities;
    for (const auto& [name, entity, no] : consts) {
        if (!model.world().contains(entity))
            throw fail(no, "constant " + name + " maps to unknown entity " + entity);
        model.set_constant(name, SemType::e(), SemValue::entity(entity));
        const_entities.emplace(name, entity);
    }

    auto resolve_arg = [&](const std::string& arg, int no) -> std::string {
        if (model.world().contains(arg)) return arg;
        auto it = const_entities.find(arg);
        if (it != const_entities.end()) return it->second;
        throw fail(no, "fact argument '" + arg + "' is neither an entity nor a constant");
    };
    for (auto& [pred, args, value, no] : fact_lines) {
        FactSet& set = facts[pred];
        if (set.arity < 0) set.arity = static_cast<int>(args.size());
        if (set.arity != static_cast<int>(args.size()))
            throw fail(no, "predicate " + pred + " used with arities " +
                               std::to_string(set.arity) + " and " +
                               std::to_string(args.size()));
        std::vector<std::string> entities;
        entities.reserve(args.size());
        for (const std::string& arg : args) entities.push_back(resolve_arg(arg, no));
        auto [it, inserted] = set.rows.emplace(std::move(entities), value);
        if (!inserted && it->second != value)
            throw fail(no, "contradictory facts for predicate " + pred);
    }

    // curried, total, closed-world functions
    for (const auto& [pred, set] : facts) {
        SemType type = SemType::t();
        for (int i = 0; i < set.arity; ++i) type = SemType::fn(SemType::e(), std::move(type));
        auto build = [&](auto&& self, std::vector<std::string>& prefix, int remaining)
            -> SemValue {
            if (remaining == 0) {
                auto row = set.rows.find(prefix);
                return SemValue::truth(row != set.rows.end() && row->second);
            }
            SemValue::Table table;
            for (const std::string& d : model.world().entities) {
                prefix.push_back(d);
                table.emplace_back(SemValue::entity(d), self(self, prefix, remaining - 1));
                prefix.pop_back();
            }
            return SemValue::func(std::move(table));
        };
        std::vector<std::string> prefix;
        model.set_constant(pred, std::move(type), build(build, prefix, set.arity));
    }

    return model;
}

}  // namespace montague

#endif
