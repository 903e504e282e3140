#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/grading.hpp"
#include "muimage/linear_system.hpp"
#include "muimage/parser.hpp"
#include "muimage/polynomial.hpp"
#include "muimage/rational.hpp"

namespace muimage {

// A polynomial map-germ (C^n,0) -> (C^{n+1},0): n source variables (the
// distinguished one first) and n+1 components over exactly those variables.
struct MapGerm {
    std::vector<std::string> vars;
    std::vector<Polynomial> components;
};

inline MapGerm parse_map_germ(const std::vector<std::string>& vars,
                              const std::vector<std::string>& component_texts) {
    if (vars.empty()) throw ValidationError("map-germ needs at least one source variable");
    std::set<std::string> seen;
    for (const std::string& v : vars)
        if (!seen.insert(v).second) throw ValidationError("duplicate source variable '" + v + "'");
    if (component_texts.size() != vars.size() + 1)
        throw ValidationError("map-germ needs n+1 = " + std::to_string(vars.size() + 1) +
                              " components, got " + std::to_string(component_texts.size()));
    MapGerm F;
    F.vars = vars;
    for (const std::string& text : component_texts)
        F.components.push_back(parse_polynomial(text, vars));
    return F;
}

namespace detail {

inline std::string monomial_string(const std::vector<std::string>& vars,
                                   const std::vector<unsigned>& exps) {
    std::string s;
    for (std::size_t j = 0; j < vars.size(); ++j) {
        if (exps[j] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[j];
        if (exps[j] > 1) s += "^" + std::to_string(exps[j]);
    }
    return s.empty() ? "1" : s;
}

inline Polynomial monomial(const std::vector<std::string>& vars, const std::vector<unsigned>& exps,
                           const Rational& coeff) {
    Polynomial term = Polynomial::constant(coeff, vars);
    for (std::size_t j = 0; j < vars.size(); ++j)
        if (exps[j] > 0) term = term * Polynomial::variable(vars[j], vars).pow(exps[j]);
    return term;
}

}  // namespace detail

struct HomogeneityWitness {
    std::size_t component = 0;  // 0-based component index
    std::string monomial;
};

struct HomogeneityCheck {
    bool ok = false;
    std::optional<HomogeneityWitness> witness;  // first offending monomial
};

inline HomogeneityCheck check_weighted_homogeneous(const MapGerm& F, const Grading& g) {
    if (F.vars.size() != g.n())
        throw ValidationError("map has " + std::to_string(F.vars.size()) +
                              " source variables, grading has n = " + std::to_string(g.n()));
    if (F.components.size() != g.n() + 1)
        throw ValidationError("map has " + std::to_string(F.components.size()) +
                              " components, expected " + std::to_string(g.n() + 1));
    for (std::size_t i = 0; i < F.components.size(); ++i) {
        for (const auto& [exps, coeff] : F.components[i].terms()) {
            Integer weight = 0;
            for (std::size_t j = 0; j < exps.size(); ++j)
                weight += Integer(exps[j]) * g.weights()[j];
            if (weight != g.degrees()[i])
                return {false, HomogeneityWitness{i, detail::monomial_string(F.vars, exps)}};
        }
    }
    return {true, std::nullopt};
}

// Solution of the homogeneity constraints as a grading cone. The vector
// layout is (w_1..w_n, d_0..d_n). When the cone is a line carrying a strictly
// positive vector, `unique` holds its primitive integer generator.
struct GradingInference {
    std::optional<Grading> unique;
    std::size_t cone_dim = 0;
    std::vector<std::vector<Rational>> basis;
    std::string note;
};

namespace detail {

// Scales a rational vector to a primitive integer vector whose first nonzero
// entry is positive.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
    Integer mult = 1;
    for (const Rational& x : v) mult = boost::multiprecision::lcm(mult, x.denominator());
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back((x * Rational(mult)).numerator());
    Integer g = 0;
    for (const Integer& x : out) g = boost::multiprecision::gcd(g, x);
    if (g != 0)
        for (Integer& x : out) x /= g;
    for (const Integer& x : out) {
        if (x == 0) continue;
        if (x < 0)
            for (Integer& y : out) y = -y;
        break;
    }
    return out;
}

}  // namespace detail

inline GradingInference infer_grading(const MapGerm& F) {
    std::size_t n = F.vars.size();
    std::vector<std::string> unknowns;
    for (const std::string& v : F.vars) unknowns.push_back("w_" + v);
    for (std::size_t i = 0; i <= n; ++i) unknowns.push_back("d_" + std::to_string(i));
    LinearSystem sys(unknowns);
    for (std::size_t i = 0; i < F.components.size(); ++i) {
        for (const auto& [exps, coeff] : F.components[i].terms()) {
            std::vector<Rational> row(unknowns.size(), Rational(0));
            for (std::size_t j = 0; j < exps.size(); ++j) row[j] = Rational(static_cast<long long>(exps[j]));
            row[n + i] = Rational(-1);
            sys.insert(row, Rational(0));
        }
    }
    LinearSystem::Solution sol = sys.solve();
    GradingInference inf;
    inf.cone_dim = sol.kernel.size();
    if (inf.cone_dim == 0) {
        inf.note = "the degree constraints force the zero grading (no weighted-homogeneous "
                   "structure exists)";
        return inf;
    }
    inf.basis = sol.kernel;
    if (inf.cone_dim > 1) {
        inf.note = "grading cone has dimension " + std::to_string(inf.cone_dim) +
                   "; several inequivalent gradings fit this germ";
        return inf;
    }
    std::vector<Integer> v = detail::primitive_integer_vector(sol.kernel[0]);
    bool positive = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x > 0; });
    if (!positive) {
        inf.note = "the unique grading line has non-positive entries; no strictly positive "
                   "grading exists";
        return inf;
    }
    std::vector<Integer> w(v.begin(), v.begin() + static_cast<long>(n));
    std::vector<Integer> d(v.begin() + static_cast<long>(n), v.end());
    inf.unique = Grading(std::move(w), std::move(d));
    return inf;
}

// corank at 0 = n - rank of the linear part of F.
inline std::size_t corank_at_zero(const MapGerm& F) {
    std::size_t n = F.vars.size();
    LinearSystem sys(F.vars);
    for (const Polynomial& comp : F.components) {
        std::vector<Rational> row(n, Rational(0));
        for (const auto& [exps, coeff] : comp.terms()) {
            unsigned total = 0;
            std::size_t var = 0;
            for (std::size_t j = 0; j < exps.size(); ++j) {
                total += exps[j];
                if (exps[j] == 1) var = j;
            }
            if (total == 1) row[var] = coeff;
        }
        sys.insert(row, Rational(0));
    }
    return n - sys.rank();
}

namespace detail {

// Re-expresses p over new_vars, renaming the variable at from_index to the
// name at to_index; every other variable of p must appear in new_vars.
inline Polynomial remap_variable(const Polynomial& p, const std::vector<std::string>& new_vars,
                                 std::size_t from_index, std::size_t to_index) {
    std::vector<std::size_t> target(p.vars().size());
    for (std::size_t j = 0; j < p.vars().size(); ++j) {
        if (j == from_index) {
            target[j] = to_index;
            continue;
        }
        auto it = std::find(new_vars.begin(), new_vars.end(), p.vars()[j]);
        if (it == new_vars.end())
            throw ValidationError("variable '" + p.vars()[j] + "' missing from the new ring");
        target[j] = static_cast<std::size_t>(it - new_vars.begin());
    }
    Polynomial out(new_vars);
    for (const auto& [exps, coeff] : p.terms()) {
        std::vector<unsigned> e(new_vars.size(), 0);
        for (std::size_t j = 0; j < exps.size(); ++j) e[target[j]] += exps[j];
        out = out + monomial(new_vars, e, coeff);
    }
    return out;
}

}  // namespace detail

// Iterated divided differences of f with respect to `var`:
//   f[x_1,x_2] = (f(x_2) - f(x_1)) / (x_2 - x_1),
//   f[x_1..x_i] = (f[x_1..x_{i-2},x_i] - f[x_1..x_{i-1}]) / (x_i - x_{i-1}),
// returned for levels 2..k over the ring (var1..vark, other vars of f).
// On x^m the level-i difference is the complete homogeneous polynomial
// h_{m-i+1}(x_1..x_i); division is always exact.
inline std::vector<Polynomial> divided_difference_tower(const Polynomial& f,
                                                        const std::string& var, std::size_t k) {
    if (k < 2) throw ValidationError("divided-difference depth must be at least 2");
    auto it = std::find(f.vars().begin(), f.vars().end(), var);
    if (it == f.vars().end())
        throw ValidationError("variable '" + var + "' not declared in the polynomial");
    std::size_t var_index = static_cast<std::size_t>(it - f.vars().begin());

    std::vector<std::string> ring;
    for (std::size_t i = 1; i <= k; ++i) ring.push_back(var + std::to_string(i));
    for (std::size_t j = 0; j < f.vars().size(); ++j) {
        if (j == var_index) continue;
        if (std::find(ring.begin(), ring.end(), f.vars()[j]) != ring.end())
            throw ValidationError("parameter '" + f.vars()[j] +
                                  "' collides with a divided-difference variable");
        ring.push_back(f.vars()[j]);
    }

    std::vector<Polynomial> levels;
    Polynomial prev = detail::remap_variable(f, ring, var_index, 0);
    for (std::size_t i = 2; i <= k; ++i) {
        // prev depends on var1..var_{i-1}; replace its last tower variable.
        Polynomial moved = detail::remap_variable(prev, ring, i - 2, i - 1);
        Polynomial den =
            Polynomial::variable(ring[i - 1], ring) - Polynomial::variable(ring[i - 2], ring);
        Polynomial level = exact_divide(moved - prev, den);
        levels.push_back(level);
        prev = std::move(level);
    }
    return levels;
}

// The ideal cutting out the k-fold multiple-point space D^k of a corank <= 1
// germ in normal form (f_1, f_2, y_1, ..., y_{n-1}): the divided-difference
// towers of f_1 and f_2, levels 2..k each.
struct IdealPresentation {
    std::vector<std::string> vars;       // tower variables, then the parameters
    std::vector<Polynomial> generators;  // 2(k-1) polynomials
    long long expected_dim = 0;          // n - k + 1; negative means expected empty
};

inline IdealPresentation multiple_point_ideal(const MapGerm& F, std::size_t k) {
    if (k < 2) throw ValidationError("multiple-point depth must be at least 2");
    std::size_t n = F.vars.size();
    for (std::size_t j = 2; j < F.components.size(); ++j) {
        Polynomial expected = Polynomial::variable(F.vars[j - 1], F.vars);
        if (F.components[j] != expected)
            throw ValidationError("map is not in corank <= 1 normal form: component " +
                                  std::to_string(j + 1) + " must be the parameter '" +
                                  F.vars[j - 1] + "'");
    }
    IdealPresentation ip;
    std::vector<Polynomial> t1 = divided_difference_tower(F.components[0], F.vars[0], k);
    std::vector<Polynomial> t2 = divided_difference_tower(F.components[1], F.vars[0], k);
    ip.vars = t1.front().vars();
    ip.generators.insert(ip.generators.end(), t1.begin(), t1.end());
    ip.generators.insert(ip.generators.end(), t2.begin(), t2.end());
    ip.expected_dim = static_cast<long long>(n) - static_cast<long long>(k) + 1;
    return ip;
}

enum class IdealStyle { Plain, Script };

inline std::string emit_ideal(const IdealPresentation& ip, IdealStyle style = IdealStyle::Plain) {
    std::string out;
    if (style == IdealStyle::Plain) {
        out += "vars: ";
        for (std::size_t i = 0; i < ip.vars.size(); ++i) {
            if (i) out += ", ";
            out += ip.vars[i];
        }
        out += "\n";
        out += "expected_dim: " + std::to_string(ip.expected_dim) + "\n";
        for (std::size_t i = 0; i < ip.generators.size(); ++i)
            out += "g" + std::to_string(i + 1) + " = " + ip.generators[i].str() + "\n";
        return out;
    }
    out += "R = QQ[";
    for (std::size_t i = 0; i < ip.vars.size(); ++i) {
        if (i) out += ",";
        out += ip.vars[i];
    }
    out += "]\n";
    out += "I = ideal(\n";
    for (std::size_t i = 0; i < ip.generators.size(); ++i) {
        out += "  " + ip.generators[i].str();
        out += i + 1 < ip.generators.size() ? ",\n" : "\n";
    }
    out += ")\n";
    out += "-- expected dim " + std::to_string(ip.expected_dim) + "\n";
    return out;
}

}  // namespace muimage
