#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "muimage/grading.hpp"
#include "support/oracles.hpp"

using muimage::ChernData;
using muimage::Grading;
using muimage::Integer;
using muimage::Rational;
using muimage::ValidationError;

TEST_CASE("grading validation") {
    REQUIRE_THROWS_AS(Grading({}, {1}), ValidationError);
    REQUIRE_THROWS_AS(Grading({1, 1}, {1, 1}), ValidationError);
    REQUIRE_THROWS_AS(Grading({1, 0}, {1, 1, 1}), ValidationError);
    REQUIRE_THROWS_AS(Grading({1, 1}, {1, -1, 1}), ValidationError);
    try {
        Grading({1, 1}, {1, 1});
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE(std::string(e.what()).find("degree list length must be n+1") !=
                std::string::npos);
    }
    Grading g({1, 4}, {3, 5, 4});
    REQUIRE(g.n() == 2);
    REQUIRE(g.str() == "((1,4),(3,5,4))");
    REQUIRE(g == Grading({1, 4}, {3, 5, 4}));
    REQUIRE(g != Grading({1, 4}, {3, 5, 1}));
}

TEST_CASE("symmetric functions match brute-force oracles") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> nd(1, 6);
    for (int iter = 0; iter < 150; ++iter) {
        std::size_t n = nd(rng);
        Grading g = testsupport::random_grading(rng, n);
        for (std::size_t k = 0; k <= n; ++k)
            REQUIRE(muimage::sigma(g, k) ==
                    testsupport::elementary_symmetric_brute(g.weights(), k));
        for (std::size_t k = 0; k <= n + 1; ++k)
            REQUIRE(muimage::delta(g, k) ==
                    testsupport::elementary_symmetric_brute(g.degrees(), k));
        for (unsigned m = 0; m <= 4; ++m)
            REQUIRE(muimage::complete_homogeneous(g.weights(), m) ==
                    testsupport::complete_homogeneous_brute(g.weights(), m));
    }
}

TEST_CASE("chern coefficients match the series-division oracle") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> nd(1, 6);
    for (int iter = 0; iter < 150; ++iter) {
        std::size_t n = nd(rng);
        Grading g = testsupport::random_grading(rng, n);
        auto oracle = testsupport::chern_series(g, n + 2);
        for (std::size_t k = 0; k <= n + 2; ++k)
            REQUIRE(muimage::chern_coefficient(g, k) == oracle[k]);
        ChernData cd = muimage::chern_data(g);
        REQUIRE(cd.c.size() == n + 1);
        REQUIRE(cd.c[0] == Rational(1));
        for (std::size_t k = 0; k <= n; ++k) REQUIRE(cd.c[k] == oracle[k]);
        REQUIRE(cd.s0 == Rational(muimage::delta(g, n + 1)) / Rational(muimage::sigma(g, n)));
    }
}

TEST_CASE("chern data spot values") {
    ChernData h2 = muimage::chern_data(Grading({1, 4}, {3, 5, 4}));
    REQUIRE(h2.c[1] == Rational(7));
    REQUIRE(h2.c[2] == Rational(8));
    REQUIRE(h2.s0 == Rational(15));
    ChernData t1 = muimage::chern_data(Grading({1, 1}, {2, 2, 1}));
    REQUIRE(t1.c[1] == Rational(3));
    REQUIRE(t1.c[2] == Rational(1));
    REQUIRE(t1.s0 == Rational(4));
}

TEST_CASE("n=2 chern identity when the last degree matches the last weight") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<long long> e(1, 15);
    for (int iter = 0; iter < 120; ++iter) {
        Integer w1 = e(rng), w2 = e(rng), d0 = e(rng), d1 = e(rng);
        Grading g({w1, w2}, {d0, d1, w2});
        REQUIRE(muimage::chern_coefficient(g, 2) ==
                Rational((d0 - w1) * (d1 - w1)));
    }
}

TEST_CASE("chern coefficients scale with the grading") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<std::size_t> nd(1, 5);
    std::uniform_int_distribution<long long> ld(2, 7);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t n = nd(rng);
        Grading g = testsupport::random_grading(rng, n);
        Integer lambda = ld(rng);
        std::vector<Integer> w, d;
        for (const Integer& x : g.weights()) w.push_back(x * lambda);
        for (const Integer& x : g.degrees()) d.push_back(x * lambda);
        Grading gs(w, d);
        Rational lam = Rational(lambda);
        for (std::size_t k = 0; k <= n; ++k) {
            REQUIRE(muimage::chern_coefficient(gs, k) ==
                    lam.pow(static_cast<unsigned>(k)) * muimage::chern_coefficient(g, k));
            REQUIRE(Rational(muimage::sigma(gs, k)) ==
                    lam.pow(static_cast<unsigned>(k)) * Rational(muimage::sigma(g, k)));
        }
        REQUIRE(muimage::chern_data(gs).s0 == lam * muimage::chern_data(g).s0);
    }
}

TEST_CASE("chern data is invariant under weight and degree permutations") {
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<std::size_t> nd(2, 5);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t n = nd(rng);
        Grading g = testsupport::random_grading(rng, n);
        std::vector<Integer> w = g.weights(), d = g.degrees();
        std::shuffle(w.begin(), w.end(), rng);
        std::shuffle(d.begin(), d.end(), rng);
        Grading gp(w, d);
        ChernData a = muimage::chern_data(g), b = muimage::chern_data(gp);
        REQUIRE(a.c == b.c);
        REQUIRE(a.sigma == b.sigma);
        REQUIRE(a.delta == b.delta);
        REQUIRE(a.s0 == b.s0);
    }
}

TEST_CASE("trivial unfolding appends unit pairs") {
    Grading g({1, 4}, {3, 5, 4});
    Grading u = muimage::unfold_trivial(g, 2);
    REQUIRE(u == Grading({1, 4, 1, 1}, {3, 5, 4, 1, 1}));
    REQUIRE(muimage::unfold_trivial(g, 0) == g);
}

TEST_CASE("slicing removes matched trailing pairs") {
    Grading l3({1, 1, 6, 4}, {5, 7, 1, 6, 4});
    REQUIRE(muimage::slice(l3, 1) == Grading({1, 1, 6}, {5, 7, 1, 6}));
    REQUIRE(muimage::slice(l3, 3) == Grading({1}, {5, 7}));
    REQUIRE_THROWS_AS(muimage::slice(l3, 4), ValidationError);
    // mismatch: trailing degree != trailing weight
    REQUIRE_THROWS_AS(muimage::slice(Grading({1, 2}, {3, 4, 5}), 1), ValidationError);
    REQUIRE_THROWS_AS(muimage::slice(l3, 0), ValidationError);
}

TEST_CASE("unfolding recursion holds for random gradings") {
    std::mt19937_64 rng(66);
    std::uniform_int_distribution<std::size_t> nd(2, 5);
    for (int iter = 0; iter < 150; ++iter) {
        Grading g = testsupport::random_grading(rng, nd(rng));
        REQUIRE(muimage::check_unfolding_recursion(g));
    }
    REQUIRE_THROWS_AS(muimage::check_unfolding_recursion(Grading({1}, {2, 1})),
                      ValidationError);
}
