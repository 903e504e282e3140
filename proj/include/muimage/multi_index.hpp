#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/rational.hpp"

namespace muimage {

// Exponent vector alpha = (a_0, a_1, ..., a_5) of a monomial
// s_0^{a_0} c_1^{a_1} ... c_5^{a_5}. Its degree is a_0 + sum k*a_k, matching
// the grading degree of the monomial.
struct MultiIndex {
    std::array<unsigned, 6> a{};

    unsigned degree() const {
        unsigned d = a[0];
        for (unsigned k = 1; k <= 5; ++k) d += k * a[k];
        return d;
    }

    // Compact subscript: exponent digits with trailing zeros removed, so
    // (1,0,1) -> "101", (0,1) -> "01", zero index -> "0". All exponents in
    // range are single digits (degree <= 5).
    std::string digits() const {
        std::size_t last = 0;
        for (std::size_t k = 0; k < 6; ++k)
            if (a[k] != 0) last = k;
        if (a[last] == 0) return "0";
        std::string s;
        for (std::size_t k = 0; k <= last; ++k) s += static_cast<char>('0' + a[k]);
        return s;
    }

    std::string b_name() const { return "b_" + digits(); }

    // Display form "s_0^2*c_1"; the empty index renders as "1".
    std::string monomial_str() const {
        std::string s;
        auto factor = [&s](const std::string& base, unsigned e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += base;
            if (e > 1) s += "^" + std::to_string(e);
        };
        factor("s_0", a[0]);
        for (unsigned k = 1; k <= 5; ++k) factor("c_" + std::to_string(k), a[k]);
        return s.empty() ? "1" : s;
    }

    static MultiIndex from_digits(const std::string& s) {
        if (s.empty() || s.size() > 6)
            throw ValidationError("bad multi-index literal '" + s + "'");
        MultiIndex m;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < '0' || s[k] > '9')
                throw ValidationError("bad multi-index literal '" + s + "'");
            m.a[k] = static_cast<unsigned>(s[k] - '0');
        }
        return m;
    }

    friend bool operator==(const MultiIndex& x, const MultiIndex& y) { return x.a == y.a; }
    friend bool operator!=(const MultiIndex& x, const MultiIndex& y) { return !(x == y); }

    // Degree ascending, then exponent-vector lexicographic descending; this
    // puts s_0^k first and c_k last within each degree block, the order the
    // closed formulas are written in.
    friend bool operator<(const MultiIndex& x, const MultiIndex& y) {
        unsigned dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        return y.a < x.a;
    }
};

// All indices with 1 <= degree <= max_degree in table order. Counts per
// degree 1..5 are 2, 4, 7, 12, 19 (44 in total).
inline std::vector<MultiIndex> enumerate_multi_indices(unsigned max_degree) {
    if (max_degree < 1 || max_degree > 5)
        throw ValidationError("multi-index degree bound must be between 1 and 5");
    std::vector<MultiIndex> out;
    MultiIndex m;
    for (m.a[0] = 0; m.a[0] <= max_degree; ++m.a[0])
        for (m.a[1] = 0; m.a[1] <= max_degree; ++m.a[1])
            for (m.a[2] = 0; m.a[2] <= max_degree / 2; ++m.a[2])
                for (m.a[3] = 0; m.a[3] <= max_degree / 3; ++m.a[3])
                    for (m.a[4] = 0; m.a[4] <= max_degree / 4; ++m.a[4])
                        for (m.a[5] = 0; m.a[5] <= max_degree / 5; ++m.a[5]) {
                            unsigned d = m.degree();
                            if (d >= 1 && d <= max_degree) out.push_back(m);
                        }
    std::sort(out.begin(), out.end());
    return out;
}

// Coefficient assignment alpha -> b_alpha for 1 <= deg(alpha) <= max_degree.
// Absent entries are zero; set() keeps that normal form.
struct CoeffTable {
    unsigned max_degree = 5;
    std::map<MultiIndex, Rational> entries;

    Rational at(const MultiIndex& m) const {
        auto it = entries.find(m);
        return it == entries.end() ? Rational(0) : it->second;
    }

    void set(const MultiIndex& m, const Rational& v) {
        if (m.degree() < 1 || m.degree() > max_degree)
            throw ValidationError("multi-index degree " + std::to_string(m.degree()) +
                                  " outside table range");
        if (v.is_zero())
            entries.erase(m);
        else
            entries[m] = v;
    }

    friend bool operator==(const CoeffTable& x, const CoeffTable& y) {
        return x.max_degree == y.max_degree && x.entries == y.entries;
    }
    friend bool operator!=(const CoeffTable& x, const CoeffTable& y) { return !(x == y); }
};

}  // namespace muimage
