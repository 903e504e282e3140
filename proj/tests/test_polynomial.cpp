#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "muimage/parser.hpp"
#include "muimage/polynomial.hpp"
#include "support/oracles.hpp"

using muimage::NotDivisible;
using muimage::Polynomial;
using muimage::Rational;
using muimage::parse_polynomial;

namespace {
const std::vector<std::string> ZY{"z", "y"};

Polynomial P(const std::string& text) { return parse_polynomial(text, ZY); }

// The input grammar has integer literals only (no '/'), so the parse/print
// round trip is meaningful only for integer-coefficient polynomials.
Polynomial random_integer_polynomial(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> ex(0, 4);
    Polynomial z = P("z");
    Polynomial y = P("y");
    Polynomial p = Polynomial::constant(Rational(0), ZY);
    for (int t = 0; t < 6; ++t)
        p = p + Polynomial::constant(Rational(coeff(rng)), ZY) * z.pow(ex(rng)) * y.pow(ex(rng));
    return p;
}
}  // namespace

TEST_CASE("polynomial printing is canonical graded-lex-descending") {
    REQUIRE(P("1+z+y^2+z*y+z^2").str() == "z^2 + z*y + y^2 + z + 1");
    REQUIRE(P("0").str() == "0");
    REQUIRE(P("-z").str() == "-z");
    REQUIRE(P("y-z").str() == "-z + y");
    REQUIRE(P("2*z^3-z^3").str() == "z^3");
    REQUIRE(P("z^2-z^2").str() == "0");
    REQUIRE(Polynomial::constant(Rational(muimage::Integer(1), muimage::Integer(2)), ZY).str() ==
            "1/2");
    REQUIRE(P("3*z*y^2").str() == "3*z*y^2");
    REQUIRE(P("z*y^2-3*y").str() == "z*y^2 - 3*y");
}

TEST_CASE("parse of printed form is the identity on random polynomials") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 120; ++iter) {
        Polynomial p = random_integer_polynomial(rng);
        Polynomial q = parse_polynomial(p.str(), ZY);
        REQUIRE(p == q);
        REQUIRE(p.str() == q.str());
    }
}

TEST_CASE("polynomial ring axioms hold on random values") {
    std::mt19937_64 rng(1234);
    const std::vector<std::string> vars{"z", "y", "x"};
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial a = testsupport::random_polynomial(rng, vars, 2, 4);
        Polynomial b = testsupport::random_polynomial(rng, vars, 2, 4);
        Polynomial c = testsupport::random_polynomial(rng, vars, 2, 4);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == Polynomial::constant(Rational(0), vars));
        REQUIRE(a * Polynomial::constant(Rational(1), vars) == a);
    }
}

TEST_CASE("mixed-variable arithmetic unifies rings") {
    Polynomial a = parse_polynomial("z^2", {"z"});
    Polynomial b = parse_polynomial("y", {"y"});
    REQUIRE((a + b).str() == "z^2 + y");
    REQUIRE((a * b).str() == "z^2*y");
}

TEST_CASE("substitute and evaluate agree on random data") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial p = testsupport::random_polynomial(rng, ZY);
        Rational zv = testsupport::random_rational(rng);
        Rational yv = testsupport::random_rational(rng);
        Rational direct = p.evaluate({{"z", zv}, {"y", yv}});
        // evaluate requires a value for every ring variable; after the
        // substitution the z slot must be inert, so hand it a decoy value.
        Rational staged =
            p.substitute("z", zv).evaluate({{"z", zv + Rational(1)}, {"y", yv}});
        REQUIRE(direct == staged);
        // substituting a polynomial then evaluating equals evaluating the composite
        Polynomial repl = testsupport::random_polynomial(rng, ZY, 2, 3);
        Rational lhs = p.substitute("z", repl).evaluate({{"z", zv}, {"y", yv}});
        Rational rhs = p.evaluate({{"z", repl.evaluate({{"z", zv}, {"y", yv}})}, {"y", yv}});
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial a = testsupport::random_polynomial(rng, ZY);
        Polynomial b = testsupport::random_polynomial(rng, ZY);
        REQUIRE((a * b).derivative("z") ==
                a.derivative("z") * b + a * b.derivative("z"));
    }
    REQUIRE(P("z^3*y").derivative("z").str() == "3*z^2*y");
    REQUIRE(P("y^2").derivative("z").is_zero());
}

TEST_CASE("exact division round-trips and rejects non-divisors") {
    std::mt19937_64 rng(5150);
    int divisible_checked = 0;
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial a = testsupport::random_polynomial(rng, ZY, 2, 3);
        Polynomial b = testsupport::random_polynomial(rng, ZY, 2, 3);
        if (b.is_zero()) continue;
        REQUIRE(exact_divide(a * b, b) == a);
        ++divisible_checked;
    }
    REQUIRE(divisible_checked >= 100);
    REQUIRE_THROWS_AS(exact_divide(P("z^2+1"), P("z")), NotDivisible);
    REQUIRE_THROWS_AS(exact_divide(P("z+y"), P("z-y")), NotDivisible);
    REQUIRE(exact_divide(P("z^2-y^2"), P("z-y")) == P("z+y"));
}

TEST_CASE("coefficient_of picks exact monomials") {
    Polynomial p = P("3*z^2*y - y + 5");
    REQUIRE(p.coefficient_of({{"z", 2}, {"y", 1}}) == Rational(3));
    REQUIRE(p.coefficient_of({{"y", 1}}) == Rational(-1));
    REQUIRE(p.coefficient_of({}) == Rational(5));
    REQUIRE(p.coefficient_of({{"z", 1}}) == Rational(0));
}

TEST_CASE("pow matches repeated multiplication") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 50; ++iter) {
        Polynomial a = testsupport::random_polynomial(rng, ZY, 2, 3);
        Polynomial acc = Polynomial::constant(Rational(1), ZY);
        for (unsigned e = 0; e <= 4; ++e) {
            REQUIRE(a.pow(e) == acc);
            acc = acc * a;
        }
    }
}
