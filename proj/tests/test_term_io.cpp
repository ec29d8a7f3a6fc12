#include <catch2/catch_amalgamated.hpp>

#include "montague/term.hpp"
#include "montague/term_io.hpp"

using namespace montague;

namespace {

SemType E() { return SemType::e(); }
SemType T() { return SemType::t(); }
SemType ET() { return SemType::fn(E(), T()); }

}  // namespace

TEST_CASE("printing the paper formulas") {
    TermRef aime = Term::constant("aime", SemType::fn(E(), ET()));
    TermRef a = Term::constant("a", E());
    TermRef g = Term::constant("g", E());

    CHECK(term_to_string(Term::apply(Term::constant("dort", ET()), g)) == "dort(g)");
    CHECK(term_to_string(Term::apply(Term::apply(aime, a), g)) == "aime(a)(g)");

    TermRef gv = Term::lambda("y", E(), Term::apply(Term::apply(aime, a),
                                                    Term::variable("y", E())));
    CHECK(term_to_string(gv) == "L y:e. aime(a)(y)");

    TermRef all = Term::quantifier(
        QuantKind::Forall, "x", Term::apply(Term::apply(aime, a), Term::variable("x", E())));
    CHECK(term_to_string(all) == "forall x. aime(a)(x)");
}

TEST_CASE("printer parenthesizes by precedence") {
    TermRef p = Term::constant("p", T());
    TermRef q = Term::constant("q", T());
    TermRef r = Term::constant("r", T());

    CHECK(term_to_string(Term::connective(
              ConnOp::Or, Term::connective(ConnOp::And, p, q), r)) == "p & q | r");
    CHECK(term_to_string(Term::connective(
              ConnOp::And, Term::connective(ConnOp::Or, p, q), r)) == "(p | q) & r");

    // -> is right-associative
    TermRef imp_r = Term::connective(ConnOp::Implies, p,
                                     Term::connective(ConnOp::Implies, q, r));
    CHECK(term_to_string(imp_r) == "p -> q -> r");
    TermRef imp_l = Term::connective(ConnOp::Implies,
                                     Term::connective(ConnOp::Implies, p, q), r);
    CHECK(term_to_string(imp_l) == "(p -> q) -> r");

    CHECK(term_to_string(Term::negation(Term::connective(ConnOp::And, p, q))) == "~(p & q)");
    CHECK(term_to_string(Term::connective(ConnOp::And, Term::negation(p), q)) == "~p & q");
    CHECK(term_to_string(Term::negation(Term::negation(p))) == "~~p");

    // a binder as an operand is parenthesized; as a body it is not
    TermRef dort = Term::constant("dort", ET());
    TermRef g = Term::constant("g", E());
    TermRef all_dort = Term::quantifier(QuantKind::Forall, "x",
                                        Term::apply(dort, Term::variable("x", E())));
    CHECK(term_to_string(Term::connective(ConnOp::And, all_dort, Term::apply(dort, g))) ==
          "(forall x. dort(x)) & dort(g)");
    TermRef lam_applied = Term::apply(Term::lambda("x", E(), Term::variable("x", E())), g);
    CHECK(term_to_string(lam_applied) == "(L x:e. x)(g)");

    TermRef eq = Term::equality(g, Term::constant("a", E()));
    CHECK(term_to_string(Term::connective(ConnOp::Iff, Term::apply(dort, g), eq)) ==
          "dort(g) <-> g = a");
}

TEST_CASE("parsing lexicon-style terms") {
    TermRef parsed = parse_term("L x:e. L y:e. aime:<e,<e,t>>(x)(y)");
    TermRef aime = Term::constant("aime", SemType::fn(E(), ET()));
    TermRef expected = Term::lambda(
        "x", E(), Term::lambda("y", E(), Term::apply(Term::apply(aime,
                                                                 Term::variable("x", E())),
                                                     Term::variable("y", E()))));
    CHECK(alpha_eq(parsed, expected));

    // an annotation is needed once; later uses pick it up
    TermRef twice = parse_term("dort:<e,t>(g:e) & dort(g)");
    CHECK(infer_type(twice) == T());

    // quantifier variables are individuals; the annotation is optional
    CHECK(alpha_eq(parse_term("forall x. dort:<e,t>(x)"),
                   parse_term("forall x:e. dort:<e,t>(x)")));

    // the definite-article meaning, as written in the bundled lexicon
    TermRef le = parse_term(
        "L Q:<e,t>. L P:<e,t>. exists x. (forall y. Q(y) <-> x = y) & P(x)");
    CHECK(infer_type(le) == SemType::fn(ET(), SemType::fn(ET(), T())));
}

TEST_CASE("parsed operators follow the printed precedence") {
    TermRef t = parse_term("p:t & q:t | r:t");
    REQUIRE(t->kind() == TermKind::Connective);
    CHECK(t->conn_op() == ConnOp::Or);
    CHECK(t->left()->conn_op() == ConnOp::And);

    TermRef imp = parse_term("p:t -> q:t -> r:t");
    CHECK(imp->right()->kind() == TermKind::Connective);  // right-associative

    // a parsed term prints back to the same string
    for (const char* text :
         {"p & q | r", "p -> q -> r", "(p -> q) -> r", "~(p & q)",
          "(forall x. dort(x)) & dort(g)", "exists x. (forall y. Q(y) <-> x = y) & P(x)"}) {
        // seed the constants, then strip annotations by reprinting
        detail::TermParser seeded(std::string("(L p:t. L q:t. L r:t. L P:<e,t>. L Q:<e,t>. "
                                              "L dort:<e,t>. L g:e. ") + text + ")");
        TermRef inner = seeded.parse();
        while (inner->kind() == TermKind::Lambda) inner = inner->body();
        CHECK(term_to_string(inner) == text);
    }
}

TEST_CASE("term syntax errors") {
    auto code_of = [](const char* text) {
        try {
            parse_term(text);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::NoParse;  // placeholder for "did not throw"
    };
    CHECK(code_of("dort(g)") == ErrorCode::TermSyntax);  // no annotations anywhere
    CHECK(code_of("dort:<e,t>(g:e) & dort:<e,e>(g)") == ErrorCode::TermSyntax);
    CHECK(code_of("L x:e. x:t") == ErrorCode::TermSyntax);  // annotation fights the binder
    CHECK(code_of("forall P:<e,t>. P(c:e)") == ErrorCode::TermSyntax);
    CHECK(code_of("L x:e") == ErrorCode::TermSyntax);
    CHECK(code_of("(p:t") == ErrorCode::TermSyntax);
    CHECK(code_of("p:t q:t") == ErrorCode::TermSyntax);
    CHECK(code_of("p:t -") == ErrorCode::TermSyntax);
    CHECK(code_of("L:e") == ErrorCode::TermSyntax);
    CHECK(code_of("x:zz") == ErrorCode::TypeSyntax);
    // ill-typed but well-formed input surfaces the typing error
    CHECK(code_of("dort:<e,t>(g:t)") == ErrorCode::IllTyped);
}

TEST_CASE("identifiers may carry primes and accents") {
    TermRef t = parse_term("préfère:<e,<e,t>>(a':e)(g:e)");
    CHECK(term_to_string(t) == "préfère(a')(g)");
}
