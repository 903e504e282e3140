#pragma once

// Independent reference implementations used to cross-check the library:
// deliberately different algorithms (series division, brute-force symmetric
// function enumeration) so agreement is meaningful.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "muimage/grading.hpp"
#include "muimage/polynomial.hpp"
#include "muimage/rational.hpp"

namespace testsupport {

using muimage::Grading;
using muimage::Integer;
using muimage::Polynomial;
using muimage::Rational;

// Truncated power-series quotient num/den; requires den[0] == 1.
inline std::vector<Rational> series_quotient(const std::vector<Rational>& num,
                                             const std::vector<Rational>& den,
                                             std::size_t upto) {
    std::vector<Rational> q(upto + 1, Rational(0));
    for (std::size_t k = 0; k <= upto; ++k) {
        Rational acc = k < num.size() ? num[k] : Rational(0);
        for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc = acc - den[i] * q[k - i];
        q[k] = acc;
    }
    return q;
}

// Coefficients of prod_i (1 + v_i * a).
inline std::vector<Rational> poly_from_roots(const std::vector<Integer>& v) {
    std::vector<Rational> c{Rational(1)};
    for (const Integer& x : v) {
        c.push_back(Rational(0));
        for (std::size_t k = c.size() - 1; k >= 1; --k)
            c[k] = c[k] + Rational(x) * c[k - 1];
    }
    return c;
}

// c_0..c_upto of prod(1 + d_i a) / prod(1 + w_j a) by explicit series division.
inline std::vector<Rational> chern_series(const Grading& g, std::size_t upto) {
    return series_quotient(poly_from_roots(g.degrees()), poly_from_roots(g.weights()), upto);
}

namespace detail {
inline Integer h_brute(const std::vector<Integer>& v, std::size_t pos, unsigned m) {
    if (pos + 1 == v.size()) {
        Integer r = 1;
        for (unsigned i = 0; i < m; ++i) r *= v[pos];
        return r;
    }
    Integer sum = 0;
    for (unsigned e = 0; e <= m; ++e) {
        Integer p = 1;
        for (unsigned i = 0; i < e; ++i) p *= v[pos];
        sum += p * h_brute(v, pos + 1, m - e);
    }
    return sum;
}
}  // namespace detail

// Complete homogeneous symmetric polynomial by exponent-vector enumeration.
inline Integer complete_homogeneous_brute(const std::vector<Integer>& v, unsigned m) {
    if (v.empty()) return m == 0 ? 1 : 0;
    return detail::h_brute(v, 0, m);
}

// Elementary symmetric polynomial by subset enumeration (v.size() <= 20).
inline Integer elementary_symmetric_brute(const std::vector<Integer>& v, unsigned k) {
    std::size_t n = v.size();
    Integer sum = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
        Integer prod = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) prod *= v[i];
        sum += prod;
    }
    return sum;
}

inline Grading random_grading(std::mt19937_64& rng, std::size_t n, long long max_entry = 9) {
    std::uniform_int_distribution<long long> dist(1, max_entry);
    std::vector<Integer> w, d;
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(dist(rng));
    for (std::size_t i = 0; i <= n; ++i) d.emplace_back(dist(rng));
    return Grading(std::move(w), std::move(d));
}

inline Rational random_rational(std::mt19937_64& rng, long long range = 12) {
    std::uniform_int_distribution<long long> num(-range, range);
    std::uniform_int_distribution<long long> den(1, range);
    return Rational(num(rng)) / Rational(den(rng));
}

// Random sparse polynomial over the given variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                    unsigned max_exp = 3, unsigned terms = 5) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    Polynomial p = Polynomial::constant(Rational(0), vars);
    for (unsigned t = 0; t < terms; ++t) {
        Polynomial mono = Polynomial::constant(random_rational(rng), vars);
        for (const std::string& v : vars) mono = mono * Polynomial::variable(v, vars).pow(e(rng));
        p = p + mono;
    }
    return p;
}

}  // namespace testsupport
