#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/grading.hpp"
#include "muimage/linear_system.hpp"
#include "muimage/multi_index.hpp"
#include "muimage/rational.hpp"

namespace muimage {

namespace detail {

inline Integer factorial(unsigned k) {
    Integer f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace detail

// s_0^{a_0} * prod c_k^{a_k} evaluated on chern data; requires c_k for every
// k with a_k > 0.
inline Rational chern_power(const ChernData& cd, const MultiIndex& m) {
    Rational r = cd.s0.pow(m.a[0]);
    for (std::size_t k = 1; k <= 5; ++k) {
        if (m.a[k] == 0) continue;
        if (k >= cd.c.size())
            throw ValidationError("c_" + std::to_string(k) + " unavailable for n = " +
                                  std::to_string(cd.c.size() == 0 ? 0 : cd.c.size() - 1));
        r *= cd.c[k].pow(m.a[k]);
    }
    return r;
}

// mu = (-1)^n * (sum_alpha b_alpha c^alpha sigma_{n-|alpha|}) / sigma_n for an
// arbitrary coefficient table covering degree <= n.
inline Rational generic_mu(const Grading& g, const CoeffTable& b) {
    std::size_t n = g.n();
    if (n < 1 || n > 5)
        throw ValidationError("mu formula covers 1 <= n <= 5, got n = " + std::to_string(n));
    if (b.max_degree < n)
        throw ValidationError("coefficient table covers degree <= " +
                              std::to_string(b.max_degree) + ", need " + std::to_string(n));
    ChernData cd = chern_data(g);
    Rational acc(0);
    for (const MultiIndex& m : enumerate_multi_indices(static_cast<unsigned>(n)))
        acc += b.at(m) * chern_power(cd, m) * Rational(cd.sigma[n - m.degree()]);
    acc /= Rational(cd.sigma[n]);
    return n % 2 == 0 ? acc : -acc;
}

// The solved coefficient table of the universal mu formula, stored as exact
// rationals b_alpha with block denominator (deg+1)!. The three absent indices
// of degree <= 5 (s_0*c_1, c_3, c_5) have coefficient zero.
inline const CoeffTable& builtin_b_table() {
    static const CoeffTable table = [] {
        struct E {
            const char* idx;
            long long num;
        };
        static constexpr E entries[] = {
            {"1", -1},      {"01", 1},                                      // degree 1, /2!
            {"2", 1},       {"02", -1},     {"001", -1},                    // degree 2, /3!
            {"3", -1},      {"21", -2},     {"12", 1},      {"101", 16},
            {"03", 2},      {"011", -10},                                   // degree 3, /4!
            {"4", 1},       {"31", 5},      {"22", 5},      {"201", -50},
            {"13", -5},     {"111", -20},   {"1001", 60},   {"04", -6},
            {"021", 34},    {"0101", -64},  {"002", 108},   {"00001", 4},   // degree 4, /5!
            {"5", -1},      {"41", -9},     {"32", -25},    {"301", 110},
            {"23", -15},    {"211", 270},   {"2001", -240}, {"14", 26},
            {"121", 16},    {"1101", 24},   {"102", -1138}, {"10001", 336},
            {"05", 24},     {"031", -156},  {"0201", 276},  {"012", 108},
            {"01001", -396}, {"0011", 600},                                 // degree 5, /6!
        };
        CoeffTable t;
        t.max_degree = 5;
        for (const E& e : entries) {
            MultiIndex m = MultiIndex::from_digits(e.idx);
            t.set(m, Rational(Integer(e.num), detail::factorial(m.degree() + 1)));
        }
        return t;
    }();
    return table;
}

// One linear condition on the unknowns b_alpha: the coefficient of b_alpha is
// c^alpha(g) sigma_{n-|alpha|}(g) / sigma_n(g) and the right-hand side is
// (-1)^n mu(g). Indices with |alpha| > n do not appear (coefficient zero).
struct EquationRow {
    std::size_t n = 0;
    std::map<MultiIndex, Rational> coeffs;
    Rational rhs;
    std::string provenance;
};

inline EquationRow sample_equation(const Grading& g, const Rational& mu, std::string provenance) {
    std::size_t n = g.n();
    if (n < 2 || n > 5)
        throw ValidationError("equation rows require 2 <= n <= 5, got n = " + std::to_string(n));
    ChernData cd = chern_data(g);
    EquationRow row;
    row.n = n;
    row.provenance = std::move(provenance);
    Rational sn((cd.sigma[n]));
    for (const MultiIndex& m : enumerate_multi_indices(static_cast<unsigned>(n)))
        row.coeffs[m] = chern_power(cd, m) * Rational(cd.sigma[n - m.degree()]) / sn;
    row.rhs = n % 2 == 0 ? mu : -mu;
    return row;
}

// Rows contributed by a stable grading through its trivial r-parameter
// unfoldings (mu = 0 at every r).
inline std::vector<EquationRow> stable_equations(const Grading& g,
                                                 const std::vector<std::size_t>& unfold_depths,
                                                 const std::string& provenance) {
    std::vector<EquationRow> rows;
    for (std::size_t r : unfold_depths) {
        std::size_t n = g.n() + r;
        if (n < 2 || n > 5)
            throw ValidationError("unfolding depth r = " + std::to_string(r) +
                                  " leaves n = " + std::to_string(n) + " outside 2..5");
        std::string p = provenance;
        if (r > 0) p += " r=" + std::to_string(r);
        rows.push_back(sample_equation(unfold_trivial(g, r), Rational(0), std::move(p)));
    }
    return rows;
}

// Row coefficients aligned to the system's unknowns (named b_<digits>).
inline std::vector<Rational> row_coefficients(const EquationRow& row, const LinearSystem& sys) {
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < sys.size(); ++i) pos[sys.unknowns()[i]] = i;
    std::vector<Rational> v(sys.size(), Rational(0));
    for (const auto& [m, c] : row.coeffs) {
        auto it = pos.find(m.b_name());
        if (it == pos.end()) {
            if (!c.is_zero())
                throw ValidationError("row '" + row.provenance + "' involves " + m.b_name() +
                                      " outside the unknown set");
            continue;
        }
        v[it->second] = c;
    }
    return v;
}

inline bool is_independent(const LinearSystem& sys, const EquationRow& row) {
    return sys.is_independent(row_coefficients(row, sys));
}

struct InterpolationResult {
    bool solved = false;
    CoeffTable table;                      // populated only when solved
    std::size_t rank = 0;
    std::vector<MultiIndex> free_indices;  // underdetermined diagnostics
    std::vector<std::map<MultiIndex, Rational>> kernel;
    std::string inconsistent_row;          // provenance of the first contradicting row
    std::vector<std::pair<std::string, std::string>> trace;  // (provenance, insert status)
};

namespace detail {

inline std::string insert_status_name(LinearSystem::Insert s) {
    switch (s) {
        case LinearSystem::Insert::Independent: return "independent";
        case LinearSystem::Insert::Dependent: return "dependent";
        default: return "inconsistent";
    }
}

}  // namespace detail

// Recovers b_alpha for 1 <= |alpha| <= max_degree from equation rows. The
// cumulative mode mirrors the dimension-by-dimension derivation: degree <= 2
// from the n = 2 rows first, then each degree k block from the n = k rows
// with the lower blocks substituted; it must agree with the single solve.
inline InterpolationResult solve_coefficients(const std::vector<EquationRow>& rows,
                                              unsigned max_degree = 5,
                                              bool cumulative = false) {
    if (max_degree < 1 || max_degree > 5)
        throw ValidationError("max degree must be between 1 and 5");
    for (const EquationRow& row : rows)
        if (row.n > max_degree)
            throw ValidationError("row '" + row.provenance + "' lives at n = " +
                                  std::to_string(row.n) + " beyond table degree " +
                                  std::to_string(max_degree));
    InterpolationResult res;
    res.table.max_degree = max_degree;

    if (!cumulative) {
        std::vector<MultiIndex> idx = enumerate_multi_indices(max_degree);
        std::vector<std::string> names;
        names.reserve(idx.size());
        for (const MultiIndex& m : idx) names.push_back(m.b_name());
        LinearSystem sys(names);
        for (const EquationRow& row : rows) {
            auto st = sys.insert(row_coefficients(row, sys), row.rhs);
            res.trace.emplace_back(row.provenance, detail::insert_status_name(st));
            if (st == LinearSystem::Insert::Inconsistent) {
                res.inconsistent_row = row.provenance;
                res.rank = sys.rank();
                return res;
            }
        }
        LinearSystem::Solution sol = sys.solve();
        res.rank = sol.rank;
        if (sol.status == LinearSystem::Status::Unique) {
            res.solved = true;
            for (std::size_t i = 0; i < idx.size(); ++i) res.table.set(idx[i], sol.values[i]);
        } else {
            for (std::size_t f : sol.free_columns) res.free_indices.push_back(idx[f]);
            for (const auto& v : sol.kernel) {
                std::map<MultiIndex, Rational> dir;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    if (!v[i].is_zero()) dir[idx[i]] = v[i];
                res.kernel.push_back(std::move(dir));
            }
        }
        return res;
    }

    if (max_degree < 2) throw ValidationError("cumulative solve requires max degree >= 2");
    for (unsigned stage = 2; stage <= max_degree; ++stage) {
        std::vector<MultiIndex> idx;
        for (const MultiIndex& m : enumerate_multi_indices(stage))
            if (stage == 2 || m.degree() == stage) idx.push_back(m);
        std::map<MultiIndex, std::size_t> pos;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            pos[idx[i]] = i;
            names.push_back(idx[i].b_name());
        }
        LinearSystem sys(names);
        for (const EquationRow& row : rows) {
            if (row.n != stage) continue;
            std::vector<Rational> v(idx.size(), Rational(0));
            Rational rhs = row.rhs;
            for (const auto& [m, c] : row.coeffs) {
                auto it = pos.find(m);
                if (it != pos.end())
                    v[it->second] = c;
                else
                    rhs -= c * res.table.at(m);
            }
            auto st = sys.insert(v, rhs);
            res.trace.emplace_back(row.provenance, detail::insert_status_name(st));
            if (st == LinearSystem::Insert::Inconsistent) {
                res.inconsistent_row = row.provenance;
                res.rank += sys.rank();
                return res;
            }
        }
        LinearSystem::Solution sol = sys.solve();
        res.rank += sol.rank;
        if (sol.status != LinearSystem::Status::Unique) {
            for (std::size_t f : sol.free_columns) res.free_indices.push_back(idx[f]);
            for (const auto& v : sol.kernel) {
                std::map<MultiIndex, Rational> dir;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    if (!v[i].is_zero()) dir[idx[i]] = v[i];
                res.kernel.push_back(std::move(dir));
            }
            res.table.entries.clear();
            return res;
        }
        for (std::size_t i = 0; i < idx.size(); ++i) res.table.set(idx[i], sol.values[i]);
    }
    res.solved = true;
    return res;
}

// Pretty-prints a coefficient table as the nested block expression
//   (1/sigma_n)*((1/2!)*(...)*sigma_{n-1} + ... + (1/(n+1)!)*(...)),
// with a leading minus for odd n. Blocks that vanish entirely are skipped.
inline std::string render_formula(const CoeffTable& b, std::size_t n) {
    if (n < 1 || n > 5)
        throw ValidationError("formula rendering covers 1 <= n <= 5");
    if (b.max_degree < n)
        throw ValidationError("coefficient table covers degree <= " +
                              std::to_string(b.max_degree) + ", need " + std::to_string(n));
    std::vector<std::string> blocks;
    for (unsigned j = 1; j <= n; ++j) {
        std::string terms;
        for (const MultiIndex& m : enumerate_multi_indices(j)) {
            if (m.degree() != j) continue;
            Rational coeff = b.at(m) * Rational(detail::factorial(j + 1));
            if (coeff.is_zero()) continue;
            bool neg = coeff < Rational(0);
            Rational mag = neg ? -coeff : coeff;
            if (terms.empty()) {
                if (neg) terms += "-";
            } else {
                terms += neg ? " - " : " + ";
            }
            if (mag != Rational(1)) terms += mag.str() + "*";
            terms += m.monomial_str();
        }
        if (terms.empty()) continue;
        std::string blk = "(1/" + std::to_string(j + 1) + "!)*(" + terms + ")";
        if (n > j) blk += "*sigma_" + std::to_string(n - j);
        blocks.push_back(std::move(blk));
    }
    if (blocks.empty()) return "0";
    std::string body;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) body += " + ";
        body += blocks[i];
    }
    std::string out = n % 2 == 1 ? "-" : "";
    out += "(1/sigma_" + std::to_string(n) + ")*(" + body + ")";
    return out;
}

}  // namespace muimage
