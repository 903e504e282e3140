#include <catch2/catch_amalgamated.hpp>

#include "muimage/catalog.hpp"
#include "muimage/interpolation.hpp"
#include "support/oracles.hpp"

using muimage::builtin_b_table;
using muimage::builtin_catalog;
using muimage::CoeffTable;
using muimage::EquationRow;
using muimage::Grading;
using muimage::Integer;
using muimage::InterpolationResult;
using muimage::MultiIndex;
using muimage::Rational;
using muimage::ValidationError;

namespace {
Rational rat(long long n, long long d) { return Rational(Integer(n), Integer(d)); }
}  // namespace

TEST_CASE("builtin coefficient table golden entries") {
    const CoeffTable& b = builtin_b_table();
    REQUIRE(b.max_degree == 5);
    auto at = [&b](const char* digits) { return b.at(MultiIndex::from_digits(digits)); };
    // degree 1 and 2
    REQUIRE(at("1") == rat(-1, 2));
    REQUIRE(at("01") == rat(1, 2));
    REQUIRE(at("2") == rat(1, 6));
    REQUIRE(at("11") == Rational(0));
    REQUIRE(at("02") == rat(-1, 6));
    REQUIRE(at("001") == rat(-1, 6));
    // selected higher entries
    REQUIRE(at("101") == rat(2, 3));
    REQUIRE(at("0001") == Rational(0));
    REQUIRE(at("011") == rat(-5, 12));
    REQUIRE(at("002") == rat(9, 10));
    REQUIRE(at("00001") == rat(1, 30));
    REQUIRE(at("05") == rat(1, 30));
    REQUIRE(at("102") == rat(-569, 360));
    REQUIRE(at("000001") == Rational(0));
    REQUIRE(at("0011") == rat(5, 6));
    // the solved degree-2 sums vanish
    REQUIRE(at("02") + at("11") + at("2") == Rational(0));
    REQUIRE(at("01") + at("1") == Rational(0));
    // 41 nonzero entries over 44 indices
    REQUIRE(b.entries.size() == 41);
}

TEST_CASE("sample equations reproduce the printed coefficient vectors") {
    auto coeffs_of = [](const EquationRow& row, unsigned max_degree) {
        std::vector<Rational> out;
        for (const MultiIndex& m : muimage::enumerate_multi_indices(max_degree)) {
            auto it = row.coeffs.find(m);
            out.push_back(it == row.coeffs.end() ? Rational(0) : it->second);
        }
        return out;
    };
    // stable sample, weights (1,1), degrees (2,2,1): mu = 0
    EquationRow r1 = muimage::sample_equation(Grading({1, 1}, {2, 2, 1}), Rational(0), "t1");
    std::vector<Rational> v1{Rational(8), Rational(6), Rational(16),
                             Rational(12), Rational(9), Rational(1)};
    auto got1 = coeffs_of(r1, 2);
    REQUIRE(std::vector<Rational>(got1.begin(), got1.begin() + 6) == v1);
    REQUIRE(r1.rhs == Rational(0));

    EquationRow r2 = muimage::sample_equation(Grading({1, 2}, {2, 3, 2}), Rational(0), "t2");
    std::vector<Rational> v2{Rational(9), Rational(6), Rational(18),
                             Rational(12), Rational(8), Rational(1)};
    auto got2 = coeffs_of(r2, 2);
    for (std::size_t i = 0; i < 6; ++i) REQUIRE(got2[i] * Rational(2) == v2[i] * Rational(2));
    REQUIRE(std::vector<Rational>(got2.begin(), got2.begin() + 6) == v2);

    EquationRow r3 = muimage::sample_equation(Grading({1, 1}, {1, 1, 1}), Rational(0), "t3");
    std::vector<Rational> v3{Rational(2), Rational(2), Rational(1),
                             Rational(1), Rational(1), Rational(0)};
    auto got3 = coeffs_of(r3, 2);
    REQUIRE(std::vector<Rational>(got3.begin(), got3.begin() + 6) == v3);

    // rhs carries the sign (-1)^n
    EquationRow r4 = muimage::sample_equation(Grading({1, 2, 3}, {4, 3, 2, 3}), Rational(1), "P_1");
    REQUIRE(r4.rhs == Rational(-1));
    REQUIRE_THROWS_AS(muimage::sample_equation(Grading({1}, {2, 1}), Rational(0), "x"),
                      ValidationError);
}

TEST_CASE("stable unfolding equations live at the unfolded dimension") {
    Grading t1({1, 1}, {2, 2, 1});
    auto rows = muimage::stable_equations(t1, {0, 1, 2, 3}, "t1");
    REQUIRE(rows.size() == 4);
    REQUIRE(rows[0].n == 2);
    REQUIRE(rows[3].n == 5);
    REQUIRE(rows[0].provenance == "t1");
    REQUIRE(rows[1].provenance == "t1 r=1");
    for (const auto& row : rows) REQUIRE(row.rhs == Rational(0));
    REQUIRE_THROWS_AS(muimage::stable_equations(t1, {4}, "t1"), ValidationError);
}

TEST_CASE("six hand-picked rows determine the degree-2 block uniquely") {
    std::vector<EquationRow> rows;
    rows.push_back(muimage::sample_equation(Grading({1, 1}, {1, 1, 1}), Rational(0), "tau_1(R)"));
    rows.push_back(muimage::sample_equation(Grading({1, 1}, {2, 1, 1}), Rational(0), "tau_2(R)"));
    rows.push_back(muimage::sample_equation(Grading({1, 1}, {2, 2, 1}), Rational(0), "tau_1(A_1)"));
    rows.push_back(muimage::sample_equation(Grading({1, 2}, {2, 3, 2}), Rational(0), "tau_2(A_1)"));
    rows.push_back(muimage::sample_equation(Grading({1, 1}, {2, 3, 1}), Rational(1), "S_1"));
    rows.push_back(muimage::sample_equation(Grading({1, 4}, {3, 5, 4}), Rational(2), "H_2"));
    InterpolationResult res = muimage::solve_coefficients(rows, 2);
    REQUIRE(res.solved);
    REQUIRE(res.rank == 6);
    auto at = [&res](const char* digits) { return res.table.at(MultiIndex::from_digits(digits)); };
    REQUIRE(at("1") == rat(-1, 2));
    REQUIRE(at("01") == rat(1, 2));
    REQUIRE(at("2") == rat(1, 6));
    REQUIRE(at("11") == Rational(0));
    REQUIRE(at("02") == rat(-1, 6));
    REQUIRE(at("001") == rat(-1, 6));
}

TEST_CASE("generic mu evaluates the universal form") {
    const CoeffTable& b = builtin_b_table();
    REQUIRE(muimage::generic_mu(Grading({1, 1}, {2, 3, 1}), b) == Rational(1));
    REQUIRE(muimage::generic_mu(Grading({1, 4}, {3, 5, 4}), b) == Rational(2));
    REQUIRE(muimage::generic_mu(Grading({1, 1, 6, 4}, {5, 7, 1, 6, 4}), b) == Rational(178));
    REQUIRE(muimage::generic_mu(Grading({5, 2, 1, 4, 2}, {6, 7, 10, 1, 4, 2}), b) ==
            Rational(1400));
    // a table truncated below n is rejected
    CoeffTable small;
    small.max_degree = 2;
    REQUIRE_THROWS_AS(muimage::generic_mu(Grading({1, 1, 1}, {2, 2, 2, 1}), small),
                      ValidationError);
    REQUIRE_THROWS_AS(
        muimage::generic_mu(Grading({1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2, 2}), b),
        ValidationError);
    // n = 1 is covered: the image of a germ from a smooth curve is a plane
    // curve and the two degree-1 coefficients already determine mu
    REQUIRE(muimage::generic_mu(Grading({1}, {2, 1}), b) == Rational(0));
}

TEST_CASE("chern powers multiply out monomials in s_0 and c_k") {
    muimage::ChernData cd = muimage::chern_data(Grading({1, 4}, {3, 5, 4}));
    REQUIRE(muimage::chern_power(cd, MultiIndex::from_digits("1")) == Rational(15));
    REQUIRE(muimage::chern_power(cd, MultiIndex::from_digits("01")) == Rational(7));
    REQUIRE(muimage::chern_power(cd, MultiIndex::from_digits("21")) == Rational(15 * 15 * 7));
    REQUIRE(muimage::chern_power(cd, MultiIndex::from_digits("001")) == Rational(8));
    REQUIRE_THROWS_AS(muimage::chern_power(cd, MultiIndex::from_digits("0001")),
                      ValidationError);
}

TEST_CASE("row independence tracking") {
    const auto& cat = builtin_catalog();
    auto rows = muimage::interpolation_rows(cat, 2);
    REQUIRE(rows.size() == 9);
    InterpolationResult res = muimage::solve_coefficients(rows, 2);
    REQUIRE(res.solved);
    REQUIRE(res.rank == 6);
    REQUIRE(res.trace.size() == 9);
    int indep = 0, dep = 0;
    for (const auto& [prov, status] : res.trace) {
        if (status == "independent") ++indep;
        else if (status == "dependent") ++dep;
    }
    REQUIRE(indep == 6);
    REQUIRE(dep == 3);
    // restricted to the regular samples the system stays underdetermined
    auto r_only = muimage::interpolation_rows(cat, 2, {}, {"tau_1(R)", "tau_2(R)"});
    REQUIRE(r_only.size() == 2);
    InterpolationResult res2 = muimage::solve_coefficients(r_only, 2);
    REQUIRE(!res2.solved);
    REQUIRE(res2.rank == 2);
    REQUIRE(res2.free_indices.size() == 4);
    REQUIRE(res2.kernel.size() == 4);
}

TEST_CASE("an inconsistent row is reported with its provenance") {
    std::vector<EquationRow> rows;
    rows.push_back(muimage::sample_equation(Grading({1, 1}, {2, 3, 1}), Rational(1), "good"));
    rows.push_back(muimage::sample_equation(Grading({1, 1}, {2, 3, 1}), Rational(2), "bad"));
    InterpolationResult res = muimage::solve_coefficients(rows, 2);
    REQUIRE(!res.solved);
    REQUIRE(res.inconsistent_row == "bad");
}

TEST_CASE("rendered closed formulas are stable") {
    const CoeffTable& b = builtin_b_table();
    REQUIRE(muimage::render_formula(b, 2) ==
            "(1/sigma_2)*((1/2!)*(-s_0 + c_1)*sigma_1 + (1/3!)*(s_0^2 - c_1^2 - c_2))");
    std::string f3 = muimage::render_formula(b, 3);
    REQUIRE(f3.substr(0, 13) == "-(1/sigma_3)*");
    REQUIRE(f3.find("(1/2!)*(-s_0 + c_1)*sigma_2") != std::string::npos);
    REQUIRE(f3.find("(1/4!)*") != std::string::npos);
    std::string f5 = muimage::render_formula(b, 5);
    REQUIRE(f5.find("(1/6!)*") != std::string::npos);
    REQUIRE(f5.find("1138") != std::string::npos);
    CoeffTable zero;
    REQUIRE(muimage::render_formula(zero, 2) == "0");
}
