// Randomized properties across modules. Everything is seeded, so failures
// reproduce; the acceptance binary re-runs the heavyweight versions.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "montague/montague.hpp"
#include "oracles.hpp"

using namespace montague;
using generators::Rng;

namespace {
const std::string kDataDir = MONTAGUE_DATA_DIR;
}

TEST_CASE("normalization preserves types and terminates") {
    Rng rng(20240901);
    for (int i = 0; i < 400; ++i) {
        TermRef t = generators::random_well_typed_term(rng, 6);
        ReductionTrace trace = beta_normalize(t);
        CAPTURE(i, term_to_string(t));
        CHECK(infer_type(trace.final()) == infer_type(t));
        CHECK(is_normal(trace.final()));
    }
}

TEST_CASE("both reduction orders reach alpha-equivalent normal forms") {
    Rng rng(20240902);
    for (int i = 0; i < 300; ++i) {
        TermRef t = generators::random_well_typed_term(rng, 5);
        CAPTURE(i, term_to_string(t));
        CHECK(alpha_eq(beta_normalize(t, Strategy::LeftmostOutermost).final(),
                       beta_normalize(t, Strategy::RightmostInnermost).final()));
    }
}

TEST_CASE("normalization cannot invent free variables") {
    Rng rng(20240903);
    for (int i = 0; i < 300; ++i) {
        TermRef t = generators::random_well_typed_term(rng, 6);
        TermRef nf = beta_normalize(t).final();
        for (const auto& [name, ty] : nf->free()) {
            CAPTURE(i, name);
            auto before = t->free_type(name);
            REQUIRE(before.has_value());
            CHECK(*before == ty);
        }
    }
}

TEST_CASE("substitution agrees with the nameless reference") {
    Rng rng(20240904);
    SemType E = SemType::e();
    SemType ET = SemType::fn(SemType::e(), SemType::t());
    int exercised = 0;
    for (int i = 0; i < 500; ++i) {
        // x, y, z are free and double as binder names, so capture happens
        generators::TermGen gen{rng, {{"x", E}, {"y", E}, {"z", ET}}, {}, 0, {"x", "y", "z"}};
        TermRef t = gen.gen(generators::random_type(rng, 2), 4);
        if (t->free().empty()) continue;
        auto it = t->free().begin();
        std::string var = it->first;
        SemType var_type = it->second;

        generators::TermGen repl_gen{rng, {{"x", E}, {"y", E}, {"z", ET}}, {}, 100,
                                     {"x", "y"}};
        TermRef replacement = repl_gen.gen(var_type, 3);

        TermRef result = substitute(t, var, var_type, replacement);
        auto expected = oracles::db_substitute(oracles::to_db(t), var,
                                               oracles::to_db(replacement));
        CAPTURE(term_to_string(t), var, term_to_string(replacement));
        CHECK(oracles::db_equal(oracles::to_db(result), expected));
        ++exercised;
    }
    CHECK(exercised > 200);
}

TEST_CASE("substitution commutes with alpha-renaming") {
    Rng rng(20240905);
    SemType E = SemType::e();
    for (int i = 0; i < 200; ++i) {
        generators::TermGen gen{rng, {{"x", E}, {"y", E}}, {}, 0, {"x", "y"}};
        TermRef t = gen.gen(generators::random_type(rng, 2), 4);
        if (!t->free_type("y")) continue;

        // rename every binder to a fresh name; the result is alpha-equal
        int counter = 0;
        auto rename = [&](auto&& self, const TermRef& u) -> TermRef {
            switch (u->kind()) {
                case TermKind::Lambda:
                case TermKind::Quantifier: {
                    SemType ty = u->kind() == TermKind::Lambda ? u->param_type() : E;
                    std::string fresh = "r" + std::to_string(counter++);
                    TermRef body = substitute(u->body(), u->name(), ty,
                                              Term::variable(fresh, ty));
                    body = self(self, body);
                    return u->kind() == TermKind::Lambda
                               ? Term::lambda(fresh, ty, body)
                               : Term::quantifier(u->quant_kind(), fresh, body);
                }
                case TermKind::Application:
                    return Term::apply(self(self, u->fn()), self(self, u->arg()));
                case TermKind::Negation:
                    return Term::negation(self(self, u->operand()));
                case TermKind::Connective:
                    return Term::connective(u->conn_op(), self(self, u->left()),
                                            self(self, u->right()));
                case TermKind::Equality:
                    return Term::equality(self(self, u->left()), self(self, u->right()));
                default:
                    return u;
            }
        };
        TermRef renamed = rename(rename, t);
        REQUIRE(alpha_eq(t, renamed));

        TermRef replacement = Term::variable("x", E);
        CHECK(alpha_eq(substitute(t, "y", E, replacement),
                       substitute(renamed, "y", E, replacement)));
    }
}

TEST_CASE("quantifier evaluation agrees with the finite expansion oracle") {
    Rng rng(20240906);
    for (int i = 0; i < 200; ++i) {
        auto generated = generators::random_model(rng, 2 + rng.below(3));  // 2..4 entities
        TermRef formula = generators::random_formula(rng, 4, 2);
        CAPTURE(i, term_to_string(formula));
        bool via_interpret = interpret(formula, generated.model).truth_value();
        bool via_oracle = oracles::brute_force_eval(formula, generated.facts);
        CHECK(via_interpret == via_oracle);
    }
}

TEST_CASE("interpretation is invariant under normalization") {
    Rng rng(20240907);
    for (int i = 0; i < 200; ++i) {
        auto generated = generators::random_model(rng, 2 + rng.below(2));
        TermRef t = generators::random_evaluable_term(rng, 5);
        CAPTURE(i, term_to_string(t));
        SemValue direct = interpret(t, generated.model);
        SemValue normalized = interpret(beta_normalize(t).final(), generated.model);
        CHECK(direct == normalized);
    }
}

TEST_CASE("generated models pass validation") {
    Rng rng(20240908);
    for (int i = 0; i < 20; ++i) {
        auto generated = generators::random_model(rng, 2 + rng.below(3));
        CHECK(validate_model(generated.model).empty());
    }
}

TEST_CASE("parse acceptance equals enumerated membership") {
    for (const char* file : {"/g1.grammar", "/montague.grammar"}) {
        Grammar g = Grammar::from_file(kDataDir + file);
        auto language = enumerate_language(g, 3);
        std::vector<std::string> terminals;
        for (const Symbol& s : g.terminals()) terminals.push_back(s.name);

        std::vector<std::vector<std::string>> previous{{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::vector<std::string>> current;
            for (const auto& w : previous)
                for (const auto& a : terminals) {
                    auto w2 = w;
                    w2.push_back(a);
                    current.push_back(std::move(w2));
                }
            for (const auto& w : current) {
                CAPTURE(file, w);
                CHECK((language.count(w) > 0) == !parse(g, w).empty());
            }
            previous = std::move(current);
        }
    }
}

TEST_CASE("enumerated sentences translate or are rejected by the types") {
    // The grammar overgenerates ("le Gérard dort" is derivable); the type
    // system filters those out. Everything that types must produce a closed
    // formula.
    Grammar g = Grammar::from_file(kDataDir + "/montague.grammar");
    Lexicon lex = Lexicon::from_file(kDataDir + "/core.lexicon");
    int translated = 0, rejected = 0;
    for (const auto& tokens : enumerate_language(g, 4)) {
        std::string sentence;
        for (const auto& tok : tokens) sentence += (sentence.empty() ? "" : " ") + tok;
        CAPTURE(sentence);
        try {
            TermRef root = translate_sentence(g, lex, sentence);
            CHECK(infer_type(root).is_t());
            CHECK(root->free().empty());
            CHECK(is_normal(root));
            ++translated;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::TypeClash);
            ++rejected;
        }
    }
    CHECK(translated > 10);
    CHECK(rejected > 0);
}
