#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/rational.hpp"

namespace muimage {

// Orders exponent vectors by total degree descending, then lexicographically
// descending. Map iteration therefore visits leading terms first.
struct TermOrder {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned long da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed, ordered variable list. Arithmetic between polynomials over
// different variable lists unifies them (left list first, then unseen
// variables from the right, in order).
class Polynomial {
public:
    using Terms = std::map<std::vector<unsigned>, Rational, TermOrder>;

    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const Rational& c, std::vector<std::string> vars = {}) {
        Polynomial p(std::move(vars));
        if (!c.is_zero()) p.terms_[std::vector<unsigned>(p.vars_.size(), 0)] = c;
        return p;
    }

    static Polynomial variable(const std::string& name, std::vector<std::string> vars) {
        Polynomial p(std::move(vars));
        auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
        if (it == p.vars_.end())
            throw ValidationError("variable '" + name + "' not in variable list");
        std::vector<unsigned> e(p.vars_.size(), 0);
        e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
        p.terms_[std::move(e)] = Rational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Total degree; -1 for the zero polynomial.
    long total_degree() const {
        if (terms_.empty()) return -1;
        long d = 0;
        for (unsigned e : terms_.begin()->first) d += e;  // leading term has max degree
        return d;
    }

    // Left variable order first, then right's variables not already present.
    static std::vector<std::string> unify_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b) {
        std::vector<std::string> out = a;
        for (const auto& v : b)
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        return out;
    }

    // Re-express over a new variable list, which must contain every variable
    // this polynomial actually uses.
    Polynomial aligned(const std::vector<std::string>& new_vars) const {
        std::vector<long> where(vars_.size(), -1);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it != new_vars.end()) where[i] = it - new_vars.begin();
        }
        Polynomial out(new_vars);
        for (const auto& [e, c] : terms_) {
            std::vector<unsigned> ne(new_vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (where[i] < 0)
                    throw ValidationError("variable '" + vars_[i] +
                                          "' missing from target variable list");
                ne[static_cast<std::size_t>(where[i])] = e[i];
            }
            out.add_term(std::move(ne), c);
        }
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        auto uv = unify_vars(a.vars_, b.vars_);
        Polynomial out = a.aligned(uv);
        for (const auto& [e, c] : b.aligned(uv).terms_) out.add_term(e, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        auto uv = unify_vars(a.vars_, b.vars_);
        Polynomial la = a.aligned(uv), lb = b.aligned(uv);
        Polynomial out(uv);
        for (const auto& [ea, ca] : la.terms_) {
            for (const auto& [eb, cb] : lb.terms_) {
                std::vector<unsigned> e(uv.size());
                for (std::size_t i = 0; i < uv.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial out(p.vars_);
        if (c.is_zero()) return out;
        for (const auto& [e, t] : p.terms_) out.terms_[e] = c * t;
        return out;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(Rational(1), vars_);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            base = base * base;
            e >>= 1u;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        auto uv = unify_vars(a.vars_, b.vars_);
        return a.aligned(uv).terms_ == b.aligned(uv).terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial substitute(const std::string& name, const Polynomial& repl) const {
        std::size_t idx = var_index(name);
        auto uv = unify_vars(vars_, repl.vars_);
        Polynomial out(uv);
        Polynomial r = repl.aligned(uv);
        for (const auto& [e, c] : terms_) {
            std::vector<unsigned> rest(uv.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != idx) rest[i] = e[i];
            Polynomial term(uv);
            term.terms_[std::move(rest)] = c;
            out = out + term * r.pow(e[idx]);
        }
        return out;
    }

    Polynomial substitute(const std::string& name, const Rational& value) const {
        return substitute(name, constant(value, vars_));
    }

    Polynomial derivative(const std::string& name) const {
        std::size_t idx = var_index(name);
        Polynomial out(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            std::vector<unsigned> ne = e;
            ne[idx] -= 1;
            out.add_term(std::move(ne), c * Rational(static_cast<long long>(e[idx])));
        }
        return out;
    }

    // Coefficient of the monomial with the given exponents (unnamed
    // variables are taken to the power 0).
    Rational coefficient_of(const std::map<std::string, unsigned>& exponents) const {
        std::vector<unsigned> e(vars_.size(), 0);
        for (const auto& [name, k] : exponents) e[var_index(name)] = k;
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational evaluate(const std::map<std::string, Rational>& values) const {
        std::vector<Rational> point(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = values.find(vars_[i]);
            if (it == values.end())
                throw ValidationError("no value supplied for variable '" + vars_[i] + "'");
            point[i] = it->second;
        }
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= point[i].pow(e[i]);
            sum += t;
        }
        return sum;
    }

    // Canonical string: terms in degree-descending then lexicographically
    // descending order, variables in declared order, explicit '*', unit
    // coefficients omitted. The zero polynomial prints as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < Rational(0)) { out += "-"; a = -a; }
            } else {
                out += (a < Rational(0)) ? " - " : " + ";
                if (a < Rational(0)) a = -a;
            }
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) {
                out += a.str();
            } else {
                if (a != Rational(1)) out += a.str() + "*";
                out += mono;
            }
            first = false;
        }
        return out;
    }

    // Exact quotient p / q; throws NotDivisible if q does not divide p.
    friend Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
        if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
        auto uv = unify_vars(p.vars_, q.vars_);
        Polynomial r = p.aligned(uv), d = q.aligned(uv);
        Polynomial quot(uv);
        const auto& [de, dc] = *d.terms_.begin();
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.begin();
            std::vector<unsigned> e(uv.size());
            for (std::size_t i = 0; i < uv.size(); ++i) {
                if (re[i] < de[i])
                    throw NotDivisible("'" + q.str() + "' does not divide '" + p.str() + "'");
                e[i] = re[i] - de[i];
            }
            Polynomial t(uv);
            t.terms_[std::move(e)] = rc / dc;
            quot = quot + t;
            r = r - t * d;
        }
        return quot;
    }

private:
    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw ValidationError("unknown variable '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    void add_term(std::vector<unsigned> e, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(std::move(e), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

}  // namespace muimage
