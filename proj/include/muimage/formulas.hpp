#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/grading.hpp"
#include "muimage/interpolation.hpp"
#include "muimage/multi_index.hpp"
#include "muimage/rational.hpp"

namespace muimage {

// The twelve 0-stable singularity types of multi-germs (C^n,0) -> (C^{n+1},0)
// for n <= 5, in the order their counting formulas are listed.
enum class InvariantLabel {
    A0_2,    // double points, dimension 1
    A0_3,    // triple points, dimension 2
    A1,      // cross-caps, dimension 2
    A0_4,    // dimension 3
    A0A1,    // dimension 3
    A0_5,    // dimension 4
    A0_2A1,  // dimension 4
    A2,      // dimension 4
    A0_6,    // dimension 5
    A0_3A1,  // dimension 5
    A0A2,    // dimension 5
    A1_2,    // dimension 5
};

inline constexpr std::size_t invariant_label_count = 12;

inline const std::array<InvariantLabel, invariant_label_count>& all_labels() {
    static const std::array<InvariantLabel, invariant_label_count> a = {
        InvariantLabel::A0_2,  InvariantLabel::A0_3,   InvariantLabel::A1,
        InvariantLabel::A0_4,  InvariantLabel::A0A1,   InvariantLabel::A0_5,
        InvariantLabel::A0_2A1, InvariantLabel::A2,    InvariantLabel::A0_6,
        InvariantLabel::A0_3A1, InvariantLabel::A0A2,  InvariantLabel::A1_2,
    };
    return a;
}

inline std::size_t label_dimension(InvariantLabel l) {
    static constexpr std::size_t dims[invariant_label_count] = {1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 5};
    return dims[static_cast<std::size_t>(l)];
}

inline const std::string& label_name(InvariantLabel l) {
    static const std::array<std::string, invariant_label_count> names = {
        "A_0^2", "A_0^3", "A_1",     "A_0^4",   "A_0A_1", "A_0^5",
        "A_0^2A_1", "A_2", "A_0^6", "A_0^3A_1", "A_0A_2", "A_1^2",
    };
    return names[static_cast<std::size_t>(l)];
}

inline std::optional<InvariantLabel> label_from_name(const std::string& name) {
    for (InvariantLabel l : all_labels())
        if (label_name(l) == name) return l;
    return std::nullopt;
}

inline std::vector<InvariantLabel> labels_at_dimension(std::size_t m) {
    std::vector<InvariantLabel> out;
    for (InvariantLabel l : all_labels())
        if (label_dimension(l) == m) out.push_back(l);
    return out;
}

inline std::vector<InvariantLabel> labels_up_to_dimension(std::size_t m) {
    std::vector<InvariantLabel> out;
    for (InvariantLabel l : all_labels())
        if (label_dimension(l) <= m) out.push_back(l);
    return out;
}

// #label = (sum_alpha numerator[alpha] c^alpha) / (denominator * sigma_n),
// every alpha of degree exactly n = dimension(label).
struct ZeroStableForm {
    std::map<MultiIndex, Integer> numerator;
    Integer denominator;
};

inline const ZeroStableForm& zero_stable_form(InvariantLabel label) {
    static const std::array<ZeroStableForm, invariant_label_count> forms = [] {
        struct E {
            const char* idx;
            long long num;
        };
        struct F {
            long long den;
            std::vector<E> entries;
        };
        const std::array<F, invariant_label_count> data = {{
            // A_0^2
            {2, {{"1", 1}, {"01", -1}}},
            // A_0^3
            {6, {{"2", 1}, {"11", -3}, {"02", 2}, {"001", 2}}},
            // A_1
            {1, {{"001", 1}}},
            // A_0^4
            {24,
             {{"3", 1}, {"21", -6}, {"12", 11}, {"101", 8}, {"03", -6}, {"011", -18}, {"0001", -12}}},
            // A_0A_1
            {1, {{"101", 1}, {"011", -2}, {"0001", -2}}},
            // A_0^5
            {120,
             {{"4", 1},
              {"31", -10},
              {"22", 35},
              {"201", 20},
              {"13", -50},
              {"111", -110},
              {"1001", -60},
              {"04", 24},
              {"021", 144},
              {"0101", 216},
              {"002", 48},
              {"00001", 144}}},
            // A_0^2A_1
            {2,
             {{"201", 1},
              {"111", -5},
              {"1001", -4},
              {"021", 6},
              {"0101", 14},
              {"002", 4},
              {"00001", 12}}},
            // A_2
            {1, {{"0101", 1}, {"002", 1}, {"00001", 2}}},
            // A_0^6
            {720,
             {{"5", 1},
              {"41", -15},
              {"32", 85},
              {"301", 40},
              {"23", -225},
              {"211", -390},
              {"2001", -180},
              {"14", 274},
              {"121", 1214},
              {"102", 328},
              {"1101", 1476},
              {"10001", 864},
              {"05", -120},
              {"031", -1200},
              {"012", -1200},
              {"0201", -3000},
              {"0011", -1440},
              {"01001", -4560},
              {"000001", -2880}}},
            // A_0^3A_1
            {6,
             {{"301", 1},
              {"211", -9},
              {"2001", -6},
              {"121", 26},
              {"102", 14},
              {"1101", 48},
              {"10001", 36},
              {"031", -24},
              {"0201", -96},
              {"012", -48},
              {"0011", -72},
              {"01001", -192},
              {"000001", -144}}},
            // A_0A_2
            {1,
             {{"102", 1},
              {"1101", 1},
              {"10001", 2},
              {"0201", -3},
              {"012", -3},
              {"0011", -6},
              {"01001", -12},
              {"000001", -12}}},
            // A_1^2
            {2,
             {{"102", 1},
              {"0201", -2},
              {"012", -4},
              {"0011", -8},
              {"01001", -10},
              {"000001", -12}}},
        }};
        std::array<ZeroStableForm, invariant_label_count> out;
        for (std::size_t i = 0; i < invariant_label_count; ++i) {
            out[i].denominator = data[i].den;
            for (const E& e : data[i].entries)
                out[i].numerator[MultiIndex::from_digits(e.idx)] = Integer(e.num);
        }
        return out;
    }();
    return forms[static_cast<std::size_t>(label)];
}

// Evaluates a 0-stable invariant at its own dimension (n must equal the
// label's dimension; lower-dimensional labels of a germ are evaluated on
// slices, see invariant_report).
inline Rational zero_stable(const Grading& g, InvariantLabel label) {
    std::size_t n = g.n();
    std::size_t m = label_dimension(label);
    if (n != m)
        throw ValidationError("#" + label_name(label) + " lives at n = " + std::to_string(m) +
                              ", got n = " + std::to_string(n));
    const ZeroStableForm& form = zero_stable_form(label);
    ChernData cd = chern_data(g);
    Rational acc(0);
    for (const auto& [mi, num] : form.numerator) acc += Rational(num) * chern_power(cd, mi);
    return acc / (Rational(form.denominator) * Rational(cd.sigma[n]));
}

inline Rational mu_image(const Grading& g) {
    std::size_t n = g.n();
    if (n < 2 || n > 5)
        throw ValidationError("mu_I formula covers 2 <= n <= 5, got n = " + std::to_string(n));
    return generic_mu(g, builtin_b_table());
}

struct InvariantEntry {
    InvariantLabel label{};
    bool via_slice = false;  // evaluated on a sliced grading; trustworthy only
                             // for corank <= 1 normal-form gradings
    std::optional<Rational> value;
    std::string error;  // set when value is absent
    bool non_integral = false;
    bool negative = false;
};

struct InvariantReport {
    std::size_t n = 0;
    std::optional<Rational> mu;
    std::string mu_error;
    bool mu_non_integral = false;
    bool mu_negative = false;
    std::vector<InvariantEntry> entries;  // labels of dimension <= n, table order
};

inline InvariantReport invariant_report(const Grading& g, bool corank1_normal_form = true) {
    std::size_t n = g.n();
    if (n > 5)
        throw ValidationError("invariants are only defined for n <= 5, got n = " +
                              std::to_string(n));
    InvariantReport rep;
    rep.n = n;
    if (n >= 2) {
        rep.mu = mu_image(g);
        rep.mu_non_integral = !rep.mu->is_integer();
        rep.mu_negative = *rep.mu < Rational(0);
    } else {
        rep.mu_error = "mu_I undefined for n = 1";
    }
    for (InvariantLabel label : labels_up_to_dimension(n)) {
        InvariantEntry e;
        e.label = label;
        std::size_t m = label_dimension(label);
        if (m == n) {
            e.value = zero_stable(g, label);
        } else {
            e.via_slice = true;
            if (!corank1_normal_form) {
                e.error = "slice evaluation disabled for this grading";
            } else {
                try {
                    e.value = zero_stable(slice(g, n - m), label);
                } catch (const ValidationError& ex) {
                    e.error = ex.what();
                }
            }
        }
        if (e.value) {
            e.non_integral = !e.value->is_integer();
            e.negative = *e.value < Rational(0);
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// The vanishing diagram: #source = 0 forces #target = 0 along every arrow
// (two-headed arrows appear as both directions).
inline const std::vector<std::pair<InvariantLabel, InvariantLabel>>& vanishing_arrows() {
    using L = InvariantLabel;
    static const std::vector<std::pair<L, L>> arrows = [] {
        std::vector<std::pair<L, L>> a = {
            {L::A0_2, L::A0_3},   {L::A0_3, L::A0_4},   {L::A0_4, L::A0_5},
            {L::A0_5, L::A0_6},   {L::A1, L::A0A1},     {L::A0A1, L::A0_2A1},
            {L::A0_2A1, L::A0_3A1}, {L::A2, L::A0A2},
        };
        const std::pair<L, L> both[] = {
            {L::A0_2, L::A1},     {L::A0_3, L::A0A1},   {L::A0_4, L::A0_2A1},
            {L::A0_5, L::A0_3A1}, {L::A0_2A1, L::A0A2}, {L::A0A1, L::A2},
            {L::A1_2, L::A0A2},
        };
        for (const auto& [x, y] : both) {
            a.emplace_back(x, y);
            a.emplace_back(y, x);
        }
        return a;
    }();
    return arrows;
}

struct ImplicationViolation {
    InvariantLabel source{};
    InvariantLabel target{};
    Rational target_value;
};

// Checks every arrow whose two endpoint values are present in the report.
inline std::vector<ImplicationViolation> check_vanishing_implications(const InvariantReport& rep) {
    std::map<InvariantLabel, Rational> values;
    for (const InvariantEntry& e : rep.entries)
        if (e.value) values[e.label] = *e.value;
    std::vector<ImplicationViolation> out;
    for (const auto& [src, dst] : vanishing_arrows()) {
        auto is_ = values.find(src);
        auto it_ = values.find(dst);
        if (is_ == values.end() || it_ == values.end()) continue;
        if (is_->second.is_zero() && !it_->second.is_zero())
            out.push_back({src, dst, it_->second});
    }
    return out;
}

struct RelationCheck {
    std::string id;  // "R1".."R5"
    bool applicable = false;
    std::string detail;
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

namespace detail {

inline InvariantLabel a0_power_label(std::size_t k) {
    switch (k) {
        case 2: return InvariantLabel::A0_2;
        case 3: return InvariantLabel::A0_3;
        case 4: return InvariantLabel::A0_4;
        case 5: return InvariantLabel::A0_5;
        case 6: return InvariantLabel::A0_6;
        default: throw ValidationError("no A_0^" + std::to_string(k) + " label");
    }
}

inline InvariantLabel a0_power_a1_label(std::size_t k) {
    switch (k) {
        case 0: return InvariantLabel::A1;
        case 1: return InvariantLabel::A0A1;
        case 2: return InvariantLabel::A0_2A1;
        case 3: return InvariantLabel::A0_3A1;
        default: throw ValidationError("no A_0^" + std::to_string(k) + "A_1 label");
    }
}

}  // namespace detail

// The five multiplicity relations tying a corank-1 grading at 3 <= n <= 5 to
// its one-fold slice (R5 relates two invariants of the grading itself).
// A grading of corank >= 2 gets every check marked not applicable.
inline std::vector<RelationCheck> check_corank1_relations(const Grading& g, int corank = 1) {
    std::size_t n = g.n();
    if (n < 3 || n > 5)
        throw ValidationError("corank-1 relations cover 3 <= n <= 5, got n = " +
                              std::to_string(n));
    std::vector<RelationCheck> out;
    auto not_applicable = [&out](const std::string& id, const std::string& why) {
        RelationCheck c;
        c.id = id;
        c.detail = why;
        out.push_back(std::move(c));
    };
    if (corank != 1) {
        const std::string why = "requires corank 1, got corank " + std::to_string(corank);
        for (const char* id : {"R1", "R2", "R3", "R4", "R5"}) not_applicable(id, why);
        return out;
    }
    Grading gp = slice(g, 1);
    Rational w1(g.weights()[0]);
    Rational wn(g.weights()[n - 1]);
    Rational d0(g.degrees()[0]);
    Rational d1(g.degrees()[1]);
    Rational nn(static_cast<long long>(n));
    auto emit = [&out](const std::string& id, const Rational& lhs, const Rational& rhs) {
        RelationCheck c;
        c.id = id;
        c.applicable = true;
        c.lhs = lhs;
        c.rhs = rhs;
        c.holds = lhs == rhs;
        out.push_back(std::move(c));
    };

    emit("R1", zero_stable(g, detail::a0_power_label(n + 1)),
         zero_stable(gp, detail::a0_power_label(n)) * (d0 - nn * w1) * (d1 - nn * w1) /
             ((nn + Rational(1)) * w1 * wn));
    emit("R2", zero_stable(g, detail::a0_power_a1_label(n - 2)),
         zero_stable(gp, detail::a0_power_a1_label(n - 3)) * (d0 - (nn - Rational(1)) * w1) *
             (d1 - (nn - Rational(1)) * w1) / ((nn - Rational(2)) * w1 * wn));
    emit("R3", zero_stable(g, detail::a0_power_a1_label(n - 2)),
         zero_stable(gp, detail::a0_power_label(n)) * nn * (nn - Rational(1)) * w1 / wn);
    if (n >= 4)
        emit("R4",
             zero_stable(g, n == 4 ? InvariantLabel::A2 : InvariantLabel::A0A2),
             zero_stable(gp, detail::a0_power_a1_label(n - 3)) * (nn - Rational(3)) * w1 / wn);
    else
        not_applicable("R4", "requires n >= 4");
    if (n == 5)
        emit("R5", zero_stable(g, InvariantLabel::A0A2),
             Rational(2) * zero_stable(g, InvariantLabel::A1_2));
    else
        not_applicable("R5", "requires n = 5");
    return out;
}

struct ScreenFlag {
    std::string item;
    Rational value;
    bool non_integral = false;
    bool negative = false;
};

// Flags non-integral or negative values among mu_I and the dimension-n
// invariants; an empty result certifies the grading clean. Sliced values of
// lower-dimensional labels are excluded (integrality is not guaranteed for
// them without corank-1 normal form).
inline std::vector<ScreenFlag> integrality_screen(const Grading& g) {
    std::size_t n = g.n();
    if (n < 2 || n > 5)
        throw ValidationError("integrality screen covers 2 <= n <= 5, got n = " +
                              std::to_string(n));
    std::vector<ScreenFlag> out;
    auto consider = [&out](const std::string& item, const Rational& v) {
        bool ni = !v.is_integer();
        bool neg = v < Rational(0);
        if (ni || neg) out.push_back({item, v, ni, neg});
    };
    consider("mu_I", mu_image(g));
    for (InvariantLabel l : labels_at_dimension(n)) consider("inv." + label_name(l), zero_stable(g, l));
    return out;
}

}  // namespace muimage
