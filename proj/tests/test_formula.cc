#include "oracles.hh"

#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/extension.hh>
#include <fodef/formula.hh>
#include <fodef/random.hh>

#include <doctest.h>

using namespace fodef;

namespace
{
    // Random formula over the given variables; quantifiers bind fresh names
    // so the result can be closed by the caller.
    auto random_formula(Rng & rng, std::vector<std::string> & scope, int depth) -> Formula
    {
        auto var = [&]() { return scope[rng.below(scope.size())]; };
        int choice = depth == 0 ? static_cast<int>(rng.below(2)) : static_cast<int>(rng.below(8));
        switch (choice) {
        case 0: return fo::adjacent(var(), var());
        case 1: return fo::equal(var(), var());
        case 2: return fo::negate(random_formula(rng, scope, depth - 1));
        case 3: return fo::all_of({random_formula(rng, scope, depth - 1), random_formula(rng, scope, depth - 1)});
        case 4: return fo::any_of({random_formula(rng, scope, depth - 1), random_formula(rng, scope, depth - 1)});
        case 5: return fo::implies(random_formula(rng, scope, depth - 1), random_formula(rng, scope, depth - 1));
        default: {
            auto name = "v" + std::to_string(rng.below(4));
            scope.push_back(name);
            auto body = random_formula(rng, scope, depth - 1);
            scope.pop_back();
            return choice == 6 ? fo::exists(name, body) : fo::forall(name, body);
        }
        }
    }

    auto random_sentence(Rng & rng, int depth) -> Formula
    {
        std::vector<std::string> scope{"x"};
        return rng.coin() ? fo::exists("x", random_formula(rng, scope, depth)) : fo::forall("x", random_formula(rng, scope, depth));
    }
}

TEST_CASE("parser precedence and printing")
{
    CHECK(to_string(parse("E x E y x ~ y")) == "E x E y (x ~ y)");
    CHECK(parse("E x E y (x ~ y & x = y | !(x ~ y))") == parse("E x E y ((x ~ y & x = y) | !(x ~ y))"));
    CHECK(parse("A x (x = x -> x = x -> x ~ x)") == parse("A x (x = x -> (x = x -> x ~ x))"));
    CHECK(parse("E x E y x !~ y") == parse("E x E y !(x ~ y)"));
    CHECK(parse("E x E y x != y") == parse("E x E y !(x = y)"));
    CHECK(parse("E x' E x_2 x' ~ x_2").kind == NodeKind::Exists);
    CHECK(to_string(parse_formula("!(x ~ y)")) == "!(x ~ y)");
}

TEST_CASE("parse errors report a position")
{
    try {
        parse("E x (x ~ )");
        FAIL("expected ParseError");
    }
    catch (const ParseError & e) {
        CHECK(e.position() == 9);
    }
    CHECK_THROWS_AS(parse("E x (x ~ x"), ParseError);
    CHECK_THROWS_AS(parse("E (x ~ x)"), ParseError);
    CHECK_THROWS_AS(parse("x ~ x x"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("E x x # x"), ParseError);
}

TEST_CASE("free variables are rejected by parse")
{
    try {
        parse("E x (x ~ y | z = x)");
        FAIL("expected UnboundVariable");
    }
    catch (const UnboundVariable & e) {
        CHECK(e.name() == "y");
    }
    auto open = parse_formula("E x (x ~ y | z = x)");
    CHECK(free_variables(open) == std::set<std::string>{"y", "z"});
    CHECK(! is_closed(open));
    CHECK(is_closed(paw_sentence()));
}

TEST_CASE("printing and parsing round trip")
{
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        auto f = random_sentence(rng, 4);
        CHECK(parse(to_string(f)) == f);
        CHECK(alpha_equivalent(parse(to_string(f)), f));
    }
}

TEST_CASE("depth and width")
{
    auto phi = paw_sentence();
    CHECK(quantifier_depth(phi) == 3);
    CHECK(variable_width(phi) == 3);
    CHECK(quantifier_depth(parse("E x x = x & A y E z y ~ z")) == 2);
    CHECK(variable_width(parse("E x E y E x x ~ y")) == 2);
    for (int k = 1; k <= 4; ++k)
        CHECK(quantifier_depth(ea_formula(k)) == k);
    CHECK_THROWS_AS(ea_formula(6), GuardExceeded);
}

TEST_CASE("alpha equivalence")
{
    CHECK(alpha_equivalent(parse("E x x = x"), parse("E y y = y")));
    CHECK(alpha_equivalent(parse("E x A y x ~ y"), parse("E y A x y ~ x")));
    CHECK(! alpha_equivalent(parse("E x A y x ~ y"), parse("E x A y y = x")));
    CHECK(! alpha_equivalent(parse("E x E y x ~ y"), parse("E x E y x ~ x")));
}

TEST_CASE("evaluation on small graphs")
{
    auto edge = parse("E x E y x ~ y");
    CHECK(eval(complete(2), edge));
    CHECK(! eval(empty_graph(2), edge));
    CHECK(! eval(Graph(0), parse("E x x = x")));
    CHECK(eval(Graph(0), parse("A x x ~ x")));
    auto triangle = parse("E x E y E z (x ~ y & y ~ z & x ~ z)");
    CHECK(eval(cycle(3), triangle));
    CHECK(! eval(cycle(4), triangle));
    CompiledSentence compiled(triangle);
    CHECK(compiled(complete(4)));
}

TEST_CASE("evaluation of quantified sentences matches induced search")
{
    auto claw_sentence = parse("E c E x E y E z (c ~ x & c ~ y & c ~ z & x != y & x != z & y != z & x !~ y & x !~ z & y !~ z)");
    for (int n = 0; n <= 5; ++n)
        for (auto & g : oracle::all_graphs(n)) {
            CHECK(eval(g, claw_sentence) == oracle::induced(g, claw()));
            CHECK(eval(g, paw_sentence()) == oracle::induced(g, paw()));
        }
}

TEST_CASE("the dual sentence holds in the complement")
{
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        auto f = random_sentence(rng, 3);
        auto g = gnp(1 + static_cast<int>(rng.below(6)), 0.5, rng.next());
        CHECK(eval(g, f) == eval(oracle::complement(g), dual(f)));
    }
}

TEST_CASE("ea_formula agrees with the extension axiom")
{
    for (int k = 1; k <= 3; ++k) {
        CompiledSentence sentence(ea_formula(k));
        for (int n = 0; n <= 5; ++n)
            for (auto & g : oracle::all_graphs(n))
                CHECK(sentence(g) == oracle::ea(g, k));
    }
    CompiledSentence ea3(ea_formula(3));
    CHECK(ea3(paley(13)));
    CompiledSentence ea4(ea_formula(4));
    CHECK(! ea4(paley(13)));
}
