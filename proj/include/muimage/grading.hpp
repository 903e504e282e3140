#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/rational.hpp"

namespace muimage {

// Weights w = (w_1..w_n) and degrees d = (d_0..d_n) of a weighted-homogeneous
// map-germ (C^n,0) -> (C^{n+1},0). The sole input of all formula evaluation.
class Grading {
public:
    Grading(std::vector<Integer> w, std::vector<Integer> d)
        : w_(std::move(w)), d_(std::move(d)) {
        if (w_.empty()) throw ValidationError("weight list must be nonempty");
        if (d_.size() != w_.size() + 1)
            throw ValidationError("degree list length must be n+1 = " +
                                  std::to_string(w_.size() + 1) + ", got " +
                                  std::to_string(d_.size()));
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] < 1)
                throw ValidationError("non-positive weight at position " + std::to_string(i + 1));
        for (std::size_t i = 0; i < d_.size(); ++i)
            if (d_[i] < 1)
                throw ValidationError("non-positive degree at position " + std::to_string(i));
    }

    std::size_t n() const { return w_.size(); }
    const std::vector<Integer>& weights() const { return w_; }
    const std::vector<Integer>& degrees() const { return d_; }

    friend bool operator==(const Grading& a, const Grading& b) {
        return a.w_ == b.w_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Grading& a, const Grading& b) { return !(a == b); }

    std::string str() const {
        auto list = [](const std::vector<Integer>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += v[i].str();
            }
            return s;
        };
        return "((" + list(w_) + "),(" + list(d_) + "))";
    }

private:
    std::vector<Integer> w_;
    std::vector<Integer> d_;
};

// e_k(v); 0 outside 0 <= k <= len(v), e_0 = 1.
inline Integer elementary_symmetric(const std::vector<Integer>& v, std::size_t k) {
    if (k > v.size()) return 0;
    std::vector<Integer> e(k + 1, Integer(0));
    e[0] = 1;
    for (const auto& x : v)
        for (std::size_t j = std::min(k, e.size() - 1); j >= 1; --j) e[j] += x * e[j - 1];
    return e[k];
}

// h_m(v) = sum of all degree-m monomials in v; h_0 = 1, and 0 for m > 0 with
// no variables.
inline Integer complete_homogeneous(const std::vector<Integer>& v, std::size_t m) {
    std::vector<Integer> h(m + 1, Integer(0));
    h[0] = 1;
    for (const auto& x : v)
        for (std::size_t j = 1; j <= m; ++j) h[j] += x * h[j - 1];
    return h[m];
}

inline Integer sigma(const Grading& g, std::size_t k) {
    if (k > g.n())
        throw ValidationError("sigma_" + std::to_string(k) + " undefined for n = " +
                              std::to_string(g.n()));
    return elementary_symmetric(g.weights(), k);
}

inline Integer delta(const Grading& g, std::size_t k) {
    if (k > g.n() + 1)
        throw ValidationError("delta_" + std::to_string(k) + " undefined for n = " +
                              std::to_string(g.n()));
    return elementary_symmetric(g.degrees(), k);
}

// c_k = sum_{0<=i<=k} (-1)^{k-i} delta_i h_{k-i}(w), defined for every k >= 0;
// equals the degree-k coefficient of prod(1+d_i a) / prod(1+w_j a).
inline Rational chern_coefficient(const Grading& g, std::size_t k) {
    Integer acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
        Integer term = elementary_symmetric(g.degrees(), i) *
                       complete_homogeneous(g.weights(), k - i);
        if ((k - i) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return Rational(acc);
}

// The symmetric-function data of a grading: sigma[k] for k=0..n, delta[k] for
// k=0..n+1, c[k] for k=0..n (c[0]=1, integral in fact), and s0 = delta_{n+1}/sigma_n.
struct ChernData {
    std::vector<Integer> sigma;
    std::vector<Integer> delta;
    std::vector<Rational> c;
    Rational s0;
};

inline ChernData chern_data(const Grading& g) {
    std::size_t n = g.n();
    ChernData cd;
    cd.sigma.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) cd.sigma.push_back(elementary_symmetric(g.weights(), k));
    cd.delta.reserve(n + 2);
    for (std::size_t k = 0; k <= n + 1; ++k) cd.delta.push_back(elementary_symmetric(g.degrees(), k));
    cd.c.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) cd.c.push_back(chern_coefficient(g, k));
    cd.s0 = Rational(cd.delta[n + 1], cd.sigma[n]);
    return cd;
}

// Grading of the trivial r-parameter unfolding: r pairs (1,1) appended.
inline Grading unfold_trivial(const Grading& g, std::size_t r) {
    std::vector<Integer> w = g.weights(), d = g.degrees();
    w.insert(w.end(), r, Integer(1));
    d.insert(d.end(), r, Integer(1));
    return Grading(std::move(w), std::move(d));
}

// Removes the last m weight/degree pairs (unfolding parameters set to zero).
// Each removed pair must satisfy w_j = d_{j+1} position-wise.
inline Grading slice(const Grading& g, std::size_t m) {
    std::size_t n = g.n();
    if (m < 1) throw ValidationError("slice depth must be at least 1");
    if (m >= n)
        throw ValidationError("slice depth " + std::to_string(m) +
                              " too large for n = " + std::to_string(n));
    for (std::size_t j = 0; j < m; ++j) {
        const Integer& wj = g.weights()[n - 1 - j];
        const Integer& dj = g.degrees()[n - j];
        if (wj != dj)
            throw ValidationError("slice requires trailing weight/degree pairs to match; pair " +
                                  std::to_string(n - j) + " has w = " + wj.str() +
                                  ", d = " + dj.str());
    }
    std::vector<Integer> w(g.weights().begin(), g.weights().end() - static_cast<long>(m));
    std::vector<Integer> d(g.degrees().begin(), g.degrees().end() - static_cast<long>(m));
    return Grading(std::move(w), std::move(d));
}

// Property oracle for the unfolding recursion
//   c_{k,n} = c_{k,n-1} + (d_n - w_n) * sum_{i=0}^{k-1} (-1)^i w_n^i c_{k-i-1,n-1}
// (k = 1..n-1) and s_{0,n} = s_{0,n-1} d_n/w_n, where the (n-1)-data comes
// from dropping the last weight/degree pair. Holds identically; returns
// false only on a broken implementation.
inline bool check_unfolding_recursion(const Grading& g) {
    std::size_t n = g.n();
    if (n < 2) throw ValidationError("unfolding recursion requires n >= 2");
    std::vector<Integer> w(g.weights().begin(), g.weights().end() - 1);
    std::vector<Integer> d(g.degrees().begin(), g.degrees().end() - 1);
    Grading gp(std::move(w), std::move(d));
    const Integer& wn = g.weights()[n - 1];
    const Integer& dn = g.degrees()[n];
    for (std::size_t k = 1; k <= n - 1; ++k) {
        Rational sum(0);
        Rational wpow(1);
        for (std::size_t i = 0; i < k; ++i) {
            Rational term = wpow * chern_coefficient(gp, k - i - 1);
            sum += (i % 2 == 0) ? term : -term;
            wpow *= Rational(wn);
        }
        Rational rhs = chern_coefficient(gp, k) + Rational(dn - wn) * sum;
        if (chern_coefficient(g, k) != rhs) return false;
    }
    Rational s0 = Rational(elementary_symmetric(g.degrees(), n + 1),
                           elementary_symmetric(g.weights(), n));
    Rational s0p = Rational(elementary_symmetric(gp.degrees(), n),
                            elementary_symmetric(gp.weights(), n - 1));
    return s0 == s0p * Rational(dn) / Rational(wn);
}

}  // namespace muimage
