#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/rational.hpp"

namespace muimage {

// Incremental exact linear solver. Rows are inserted one at a time and the
// internal matrix is kept in reduced row echelon form, so independence of a
// candidate row and the current rank are always available.
class LinearSystem {
public:
    explicit LinearSystem(std::vector<std::string> unknowns)
        : unknowns_(std::move(unknowns)) {
        if (unknowns_.empty()) throw ValidationError("linear system needs at least one unknown");
    }

    enum class Insert { Independent, Dependent, Inconsistent };
    enum class Status { Unique, Underdetermined, Inconsistent };

    struct Solution {
        Status status;
        std::vector<Rational> values;               // free unknowns set to 0
        std::vector<std::size_t> free_columns;
        std::vector<std::vector<Rational>> kernel;  // one basis vector per free column
        std::size_t rank = 0;
    };

    std::size_t size() const { return unknowns_.size(); }
    const std::vector<std::string>& unknowns() const { return unknowns_; }
    std::size_t rank() const { return rows_.size(); }
    bool inconsistent() const { return inconsistent_; }

    // Adds an equation  coeffs . x = rhs.  A dependent consistent row is
    // discarded; a dependent row with conflicting right-hand side marks the
    // whole system inconsistent (and is also discarded).
    Insert insert(std::vector<Rational> coeffs, Rational rhs) {
        check_width(coeffs);
        reduce(coeffs, &rhs);
        std::size_t p = first_nonzero(coeffs);
        if (p == coeffs.size()) {
            if (rhs.is_zero()) return Insert::Dependent;
            inconsistent_ = true;
            return Insert::Inconsistent;
        }
        Rational inv = Rational(1) / coeffs[p];
        for (auto& c : coeffs) c *= inv;
        rhs *= inv;
        for (auto& row : rows_) {
            if (row.a[p].is_zero()) continue;
            Rational f = row.a[p];
            for (std::size_t j = 0; j < row.a.size(); ++j) row.a[j] -= f * coeffs[j];
            row.b -= f * rhs;
        }
        Row nr{std::move(coeffs), std::move(rhs), p};
        auto it = rows_.begin();
        while (it != rows_.end() && it->pivot < p) ++it;
        rows_.insert(it, std::move(nr));
        return Insert::Independent;
    }

    // True iff the row would increase the rank (ignores right-hand sides).
    bool is_independent(std::vector<Rational> coeffs) const {
        check_width(coeffs);
        reduce(coeffs, nullptr);
        return first_nonzero(coeffs) != coeffs.size();
    }

    Solution solve() const {
        Solution s;
        s.rank = rows_.size();
        if (inconsistent_) {
            s.status = Status::Inconsistent;
            return s;
        }
        std::vector<bool> is_pivot(size(), false);
        for (const auto& row : rows_) is_pivot[row.pivot] = true;
        s.values.assign(size(), Rational(0));
        for (const auto& row : rows_) s.values[row.pivot] = row.b;
        for (std::size_t j = 0; j < size(); ++j)
            if (!is_pivot[j]) s.free_columns.push_back(j);
        for (std::size_t f : s.free_columns) {
            std::vector<Rational> v(size(), Rational(0));
            v[f] = Rational(1);
            for (const auto& row : rows_) v[row.pivot] = -row.a[f];
            s.kernel.push_back(std::move(v));
        }
        s.status = s.free_columns.empty() ? Status::Unique : Status::Underdetermined;
        return s;
    }

private:
    struct Row {
        std::vector<Rational> a;
        Rational b;
        std::size_t pivot;
    };

    void check_width(const std::vector<Rational>& coeffs) const {
        if (coeffs.size() != unknowns_.size())
            throw ValidationError("row has " + std::to_string(coeffs.size()) +
                                  " coefficients, expected " + std::to_string(unknowns_.size()));
    }

    void reduce(std::vector<Rational>& coeffs, Rational* rhs) const {
        for (const auto& row : rows_) {
            Rational f = coeffs[row.pivot];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] -= f * row.a[j];
            if (rhs) *rhs -= f * row.b;
        }
    }

    static std::size_t first_nonzero(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return i;
        return v.size();
    }

    std::vector<std::string> unknowns_;
    std::vector<Row> rows_;
    bool inconsistent_ = false;
};

}  // namespace muimage
