#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "muimage/errors.hpp"
#include "muimage/formulas.hpp"
#include "muimage/germ.hpp"
#include "muimage/grading.hpp"
#include "muimage/interpolation.hpp"
#include "muimage/rational.hpp"

namespace muimage {

enum class MuKind { Finite, Infinite, Unknown };

// A stored invariant cell; `infinite` marks values the closed formulas cannot
// produce (they are germ data, recorded as overrides and never recomputed).
struct SampleValue {
    bool infinite = false;
    Integer value;
};

struct Sample {
    std::string name;
    Grading grading;
    MuKind mu_kind = MuKind::Unknown;
    Integer mu;  // meaningful when mu_kind == Finite
    bool stable = false;
    std::map<InvariantLabel, SampleValue> invariants;
    std::optional<MapGerm> map;
    std::optional<int> corank;  // builtin annotation only; not serialized
    std::string note;
};

class Catalog {
public:
    // Structural validation; throws ValidationError naming the sample.
    void add(Sample s) {
        if (s.name.empty()) throw ValidationError("sample with empty name");
        const std::string where = "sample '" + s.name + "': ";
        if (index_.count(s.name)) throw ValidationError(where + "duplicate name");
        if (s.stable && (s.mu_kind != MuKind::Finite || s.mu != 0))
            throw ValidationError(where + "stable samples must have mu = 0");
        std::size_t n = s.grading.n();
        for (const auto& [label, cell] : s.invariants)
            if (label_dimension(label) > n)
                throw ValidationError(where + "invariant " + label_name(label) +
                                      " lives at dimension " +
                                      std::to_string(label_dimension(label)) +
                                      ", beyond n = " + std::to_string(n));
        if (s.map) {
            if (s.map->vars.size() != n)
                throw ValidationError(where + "map has " + std::to_string(s.map->vars.size()) +
                                      " source variables, grading has n = " + std::to_string(n));
            HomogeneityCheck hc = check_weighted_homogeneous(*s.map, s.grading);
            if (!hc.ok)
                throw ValidationError(where + "component " +
                                      std::to_string(hc.witness->component + 1) + " monomial '" +
                                      hc.witness->monomial +
                                      "' is not weighted-homogeneous for the stored grading");
        }
        index_[s.name] = samples_.size();
        samples_.push_back(std::move(s));
    }

    const std::vector<Sample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

    const Sample* find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : &samples_[it->second];
    }

private:
    std::vector<Sample> samples_;
    std::map<std::string, std::size_t> index_;
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline Integer parse_integer(const std::string& text, std::size_t line) {
    std::string t = trim(text);
    bool ok = !t.empty();
    for (std::size_t i = 0; i < t.size() && ok; ++i) {
        if (i == 0 && t[i] == '-' && t.size() > 1) continue;
        if (t[i] < '0' || t[i] > '9') ok = false;
    }
    if (!ok)
        throw ValidationError("line " + std::to_string(line) + ": expected an integer, got '" +
                              text + "'");
    return Integer(t);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::vector<Integer> parse_integer_list(const std::string& text, std::size_t line) {
    std::vector<Integer> out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_integer(part, line));
    return out;
}

}  // namespace detail

// Sample file grammar: blocks opened by a `[sample]` line, one `key = value`
// pair per line, blocks separated by blank lines; `#` starts a comment line.
inline Catalog load_samples(std::istream& in) {
    struct RawBlock {
        std::size_t line = 0;
        std::vector<std::pair<std::string, std::string>> pairs;  // key order preserved
        std::map<std::string, std::string> byKey;
        std::map<std::string, std::size_t> keyLine;
    };
    std::vector<RawBlock> blocks;
    RawBlock* open = nullptr;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = detail::trim(raw);
        if (line.empty()) {
            open = nullptr;
            continue;
        }
        if (line[0] == '#') continue;
        if (line == "[sample]") {
            blocks.emplace_back();
            blocks.back().line = lineno;
            open = &blocks.back();
            continue;
        }
        if (open == nullptr)
            throw ValidationError("line " + std::to_string(lineno) +
                                  ": expected '[sample]' before key/value data");
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty())
            throw ValidationError("line " + std::to_string(lineno) + ": empty key");
        if (open->byKey.count(key))
            throw ValidationError("line " + std::to_string(lineno) + ": duplicate key '" + key +
                                  "'");
        open->pairs.emplace_back(key, value);
        open->byKey[key] = value;
        open->keyLine[key] = lineno;
    }

    Catalog cat;
    for (const auto& block : blocks) {
        auto require = [&block](const std::string& key) -> const std::string& {
            auto it = block.byKey.find(key);
            if (it == block.byKey.end())
                throw ValidationError("sample block at line " + std::to_string(block.line) +
                                      ": missing key '" + key + "'");
            return it->second;
        };
        auto line_of = [&block](const std::string& key) {
            auto it = block.keyLine.find(key);
            return it == block.keyLine.end() ? block.line : it->second;
        };

        const std::string& name = require("name");
        try {
            Integer n_value = detail::parse_integer(require("n"), line_of("n"));
            if (n_value < 1) throw ValidationError("n must be at least 1");
            std::size_t n = static_cast<std::size_t>(n_value.convert_to<unsigned long long>());
            std::vector<Integer> w =
                detail::parse_integer_list(require("weights"), line_of("weights"));
            std::vector<Integer> d =
                detail::parse_integer_list(require("degrees"), line_of("degrees"));
            if (w.size() != n)
                throw ValidationError("weights list has " + std::to_string(w.size()) +
                                      " entries, n = " + std::to_string(n));
            Grading g(std::move(w), std::move(d));

            Sample s{name, std::move(g)};
            const std::string& mu = require("mu");
            if (mu == "inf") {
                s.mu_kind = MuKind::Infinite;
            } else if (mu == "unknown") {
                s.mu_kind = MuKind::Unknown;
            } else {
                s.mu_kind = MuKind::Finite;
                s.mu = detail::parse_integer(mu, line_of("mu"));
            }

            std::vector<std::string> map_texts;
            for (const auto& [key, value] : block.pairs) {
                if (key == "name" || key == "n" || key == "weights" || key == "degrees" ||
                    key == "mu")
                    continue;
                if (key == "stable") {
                    if (value == "true")
                        s.stable = true;
                    else if (value == "false")
                        s.stable = false;
                    else
                        throw ValidationError("line " + std::to_string(line_of(key)) +
                                              ": stable must be 'true' or 'false'");
                } else if (key == "vars") {
                    // handled together with map below
                } else if (key == "map") {
                    for (const std::string& part : detail::split(value, ','))
                        map_texts.push_back(detail::trim(part));
                } else if (key == "note") {
                    s.note = value;
                } else if (key.rfind("inv.", 0) == 0) {
                    std::string label_text = key.substr(4);
                    auto label = label_from_name(label_text);
                    if (!label)
                        throw ValidationError("line " + std::to_string(line_of(key)) +
                                              ": unknown invariant label '" + label_text + "'");
                    SampleValue cell;
                    if (value == "inf")
                        cell.infinite = true;
                    else
                        cell.value = detail::parse_integer(value, line_of(key));
                    s.invariants[*label] = cell;
                } else {
                    throw ValidationError("line " + std::to_string(line_of(key)) +
                                          ": unknown key '" + key + "'");
                }
            }

            bool has_vars = block.byKey.count("vars") != 0;
            bool has_map = block.byKey.count("map") != 0;
            if (has_vars != has_map)
                throw ValidationError("keys 'vars' and 'map' must appear together");
            if (has_map) {
                std::vector<std::string> vars;
                for (const std::string& v : detail::split(block.byKey.at("vars"), ','))
                    vars.push_back(detail::trim(v));
                try {
                    s.map = parse_map_germ(vars, map_texts);
                } catch (const ParseError& ex) {
                    throw ValidationError(std::string("map does not parse: ") + ex.what());
                }
            }
            cat.add(std::move(s));
        } catch (const ValidationError& ex) {
            throw ValidationError("sample '" + name + "' (block at line " +
                                  std::to_string(block.line) + "): " + ex.what());
        }
    }
    return cat;
}

inline Catalog load_samples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open sample file '" + path + "'");
    return load_samples(in);
}

// Canonical serialization: fixed key order, canonical polynomial printing,
// one blank line between blocks. save(load(text)) == text for files written
// by save.
inline std::string save_samples(const Catalog& cat) {
    std::string out;
    bool first = true;
    for (const Sample& s : cat.samples()) {
        if (!first) out += "\n";
        first = false;
        out += "[sample]\n";
        out += "name = " + s.name + "\n";
        out += "n = " + std::to_string(s.grading.n()) + "\n";
        auto list = [](const std::vector<Integer>& v) {
            std::string t;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) t += ",";
                t += v[i].str();
            }
            return t;
        };
        out += "weights = " + list(s.grading.weights()) + "\n";
        out += "degrees = " + list(s.grading.degrees()) + "\n";
        switch (s.mu_kind) {
            case MuKind::Finite: out += "mu = " + s.mu.str() + "\n"; break;
            case MuKind::Infinite: out += "mu = inf\n"; break;
            case MuKind::Unknown: out += "mu = unknown\n"; break;
        }
        if (s.stable) out += "stable = true\n";
        if (s.map) {
            std::string vars, comps;
            for (std::size_t i = 0; i < s.map->vars.size(); ++i) {
                if (i) vars += ",";
                vars += s.map->vars[i];
            }
            for (std::size_t i = 0; i < s.map->components.size(); ++i) {
                if (i) comps += ", ";
                comps += s.map->components[i].str();
            }
            out += "vars = " + vars + "\n";
            out += "map = " + comps + "\n";
        }
        for (const auto& [label, cell] : s.invariants)
            out += "inv." + label_name(label) + " = " + (cell.infinite ? "inf" : cell.value.str()) +
                   "\n";
        if (!s.note.empty()) out += "note = " + s.note + "\n";
    }
    return out;
}

inline void save_samples_file(const Catalog& cat, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write sample file '" + path + "'");
    out << save_samples(cat);
}

// Equation rows in derivation order: for each target dimension 2..max_degree,
// the finite-mu samples living there (catalog order), then the trivial
// unfoldings of every lower-dimensional stable sample lifted to the target.
inline std::vector<EquationRow> interpolation_rows(const Catalog& cat, unsigned max_degree = 5,
                                                   const std::set<std::string>& drop = {},
                                                   const std::set<std::string>& only = {}) {
    auto selected = [&](const Sample& s) {
        if (!only.empty() && only.count(s.name) == 0) return false;
        return drop.count(s.name) == 0;
    };
    std::vector<EquationRow> rows;
    for (std::size_t target = 2; target <= max_degree; ++target) {
        for (const Sample& s : cat.samples()) {
            if (!selected(s) || s.grading.n() != target) continue;
            if (s.mu_kind != MuKind::Finite) continue;
            rows.push_back(sample_equation(s.grading, Rational(s.mu), s.name));
        }
        for (const Sample& s : cat.samples()) {
            if (!selected(s) || !s.stable) continue;
            std::size_t base = s.grading.n();
            if (base >= target) continue;
            rows.push_back(stable_equations(s.grading, {target - base}, s.name).front());
        }
    }
    return rows;
}

struct VerifyCheck {
    std::string sample;
    std::string item;  // "mu", "inv.A_1", "unfold_r2.inv.A_2", ...
    bool ok = false;
    std::string expected;
    std::string got;
};

// Recomputes every finite stored value from the grading alone: mu and the
// stored invariant cells of each sample, plus, for stable samples, mu = 0 and
// the zero/stored values of every trivial unfolding up to n = 5.
inline std::vector<VerifyCheck> verify_catalog(const Catalog& cat,
                                               std::optional<std::size_t> only_n = std::nullopt) {
    std::vector<VerifyCheck> out;
    auto compare = [&out](const std::string& sample, const std::string& item,
                          const Rational& expected, const std::optional<Rational>& got,
                          const std::string& error) {
        VerifyCheck chk;
        chk.sample = sample;
        chk.item = item;
        chk.expected = expected.str();
        if (got) {
            chk.got = got->str();
            chk.ok = *got == expected;
        } else {
            chk.got = error.empty() ? "unavailable" : error;
        }
        out.push_back(std::move(chk));
    };

    auto check_report = [&compare](const std::string& sample_name, const std::string& prefix,
                                   const Grading& g, const std::optional<Integer>& expected_mu,
                                   const Sample& stored, bool zero_above) {
        std::size_t base_n = stored.grading.n();
        if (expected_mu) {
            std::optional<Rational> got;
            std::string err;
            try {
                got = mu_image(g);
            } catch (const ValidationError& ex) {
                err = ex.what();
            }
            compare(sample_name, prefix + "mu", Rational(*expected_mu), got, err);
        }
        InvariantReport rep = invariant_report(g);
        for (const InvariantEntry& e : rep.entries) {
            std::size_t m = label_dimension(e.label);
            std::optional<Rational> expected;
            if (zero_above && m > base_n) {
                expected = Rational(0);
            } else {
                auto it = stored.invariants.find(e.label);
                if (it != stored.invariants.end() && !it->second.infinite)
                    expected = Rational(it->second.value);
            }
            if (!expected) continue;
            compare(sample_name, prefix + "inv." + label_name(e.label), *expected, e.value,
                    e.error);
        }
    };

    for (const Sample& s : cat.samples()) {
        if (only_n && s.grading.n() != *only_n) continue;
        std::size_t n = s.grading.n();
        std::optional<Integer> mu;
        if (s.mu_kind == MuKind::Finite && n >= 2 && n <= 5) mu = s.mu;
        check_report(s.name, "", s.grading, mu, s, false);
        if (s.stable) {
            for (std::size_t r = 1; n + r <= 5; ++r) {
                check_report(s.name, "unfold_r" + std::to_string(r) + ".",
                             unfold_trivial(s.grading, r), Integer(0), s, true);
            }
        }
    }
    return out;
}

namespace detail {

struct BuiltinInv {
    InvariantLabel label;
    long long value;
    bool infinite = false;
};

inline Sample builtin_sample(const char* name, std::vector<long long> w, std::vector<long long> d,
                             long long mu, bool stable, int corank,
                             const std::vector<BuiltinInv>& invs,
                             const std::vector<std::string>& vars = {},
                             const std::vector<std::string>& map = {}, const char* note = "") {
    std::vector<Integer> wi(w.begin(), w.end());
    std::vector<Integer> di(d.begin(), d.end());
    Sample s{name, Grading(std::move(wi), std::move(di))};
    s.mu_kind = MuKind::Finite;
    s.mu = mu;
    s.stable = stable;
    s.corank = corank;
    s.note = note;
    for (const BuiltinInv& iv : invs) {
        SampleValue cell;
        cell.infinite = iv.infinite;
        cell.value = iv.value;
        s.invariants[iv.label] = cell;
    }
    if (!vars.empty()) s.map = parse_map_germ(vars, map);
    return s;
}

}  // namespace detail

// The built-in sample catalog. Construction validates structural consistency
// plus, for corank <= 1 samples, the multiplicity relations, the vanishing
// diagram and the integrality screen.
inline const Catalog& builtin_catalog() {
    static const Catalog catalog = [] {
        using L = InvariantLabel;
        constexpr bool INF = true;
        Catalog c;
        auto add = [&c](Sample s) { c.add(std::move(s)); };
        using detail::builtin_sample;

        for (long long i = 1; i <= 2; ++i)
            add(builtin_sample(("tau_" + std::to_string(i) + "(R)").c_str(), {1, 1}, {i, 1, 1}, 0,
                               true, 0,
                               {{L::A0_2, 0}, {L::A1, 0}, {L::A0_3, 0}}, {"z", "y"},
                               {"0", "z", "y"}));
        for (long long i = 1; i <= 5; ++i)
            add(builtin_sample(("tau_" + std::to_string(i) + "(A_1)").c_str(), {1, i},
                               {2, i + 1, i}, 0, true, 1,
                               {{L::A0_2, 0, INF}, {L::A1, 1}, {L::A0_3, 0}}, {"z", "y"},
                               {"z^2", "z*y", "y"}));
        add(builtin_sample("S_1", {1, 1}, {2, 3, 1}, 1, false, 1,
                           {{L::A0_2, 1}, {L::A1, 2}, {L::A0_3, 0}}, {"z", "y"},
                           {"z^2", "z^3+z*y^2", "y"}));
        add(builtin_sample("H_2", {1, 4}, {3, 5, 4}, 2, false, 1,
                           {{L::A0_2, 4}, {L::A1, 2}, {L::A0_3, 1}}, {"z", "y"},
                           {"z^3", "z^5+z*y", "y"}));
        add(builtin_sample("P_1", {1, 2, 3}, {4, 3, 2, 3}, 1, false, 1,
                           {{L::A1, 3}, {L::A0A1, 2}, {L::A0_4, 0}}, {"z", "x", "y"},
                           {"z^4+z*y", "z^3+z*x", "x", "y"},
                           "source order chosen so slices remove y last"));
        add(builtin_sample("P_2", {1, 4, 2}, {5, 3, 4, 2}, 2, false, 1,
                           {{L::A1, 2}, {L::A0A1, 3}, {L::A0_4, 0}}, {"z", "y", "x"},
                           {"z^5+z*y", "z^3+z*x", "y", "x"}));
        add(builtin_sample("Bhat_3", {1, 1, 1}, {2, 2, 3, 1}, 33, false, 2,
                           {{L::A1, 5}, {L::A0A1, 16}, {L::A0_4, 1}}, {"z", "y", "x"},
                           {"z*x+y^2", "z^2-y*x", "-z^3+z^2*y+z*y^2+y^3", "x"}));
        add(builtin_sample("F", {1, 1, 3}, {4, 5, 1, 3}, 52, false, 1, {}, {"z", "y", "x"},
                           {"z^4-z*x",
                            "z^5+5*z^4*y+10*z^3*y^2+10*z^2*y^3+5*z*y^4+y^5+z^2*x", "y", "x"}));
        add(builtin_sample("A_2", {1, 1, 2, 2}, {3, 3, 1, 2, 2}, 0, true, 1,
                           {{L::A1, 0, INF}, {L::A0_5, 0}, {L::A0_2A1, 0}, {L::A2, 1}},
                           {"z", "y", "x", "t"}, {"z^3+z*t", "z^2*y+z*x", "y", "x", "t"},
                           "weights compatible with the stored representative"));
        for (long long i = 1; i <= 4; ++i)
            add(builtin_sample(("tau_" + std::to_string(i) + "(A_2)").c_str(), {1, i + 1, 2, i},
                               {3, i + 2, i + 1, 2, i}, 0, true, 1,
                               {{L::A1, 0, INF}, {L::A0_5, 0}, {L::A0_2A1, 0}, {L::A2, 1}}, {},
                               {}, "grading-only sample; no representative stored"));
        add(builtin_sample("L_1", {1, 1, 5, 3}, {4, 6, 1, 5, 3}, 39, false, 1,
                           {{L::A1, 15}, {L::A0_5, 0}, {L::A0_2A1, 12}, {L::A2, 8}},
                           {"z", "y", "x", "t"},
                           {"z^4-z*t",
                            "z^6+6*z^5*y+15*z^4*y^2+20*z^3*y^3+15*z^2*y^4+6*z*y^5+y^6+z*x", "y",
                            "x", "t"}));
        add(builtin_sample("L_2", {1, 1, 2, 3}, {4, 5, 1, 2, 3}, 87, false, 1,
                           {{L::A1, 12}, {L::A0_5, 0}, {L::A0_2A1, 12}, {L::A2, 12}},
                           {"z", "y", "x", "t"},
                           {"z^4+z^2*x+z*t",
                            "z^5+5*z^4*y+10*z^3*y^2+10*z^2*y^3+5*z*y^4+y^5+z*y*t+z*x^2", "y", "x",
                            "t"}));
        add(builtin_sample("L_3", {1, 1, 6, 4}, {5, 7, 1, 6, 4}, 178, false, 1,
                           {{L::A1, 24}, {L::A0_5, 3}, {L::A0_2A1, 60}, {L::A2, 15}},
                           {"z", "y", "x", "t"},
                           {"z^5-z*t",
                            "z^7+7*z^6*y+21*z^5*y^2+35*z^4*y^3+35*z^3*y^4+21*z^2*y^5+7*z*y^6+y^7"
                            "+z*x",
                            "y", "x", "t"}));
        add(builtin_sample("Dhat_1", {3, 2, 1, 2}, {4, 5, 6, 1, 2}, 27, false, 2,
                           {{L::A1, 0, INF}, {L::A0_5, 0}, {L::A0_2A1, 0}, {L::A2, 9}},
                           {"z", "y", "x", "t"},
                           {"y*x^2+z*x+y^2+y*t", "z*y", "y^3+y*t^2+z^2", "x", "t"}));
        add(builtin_sample("Ltilde_2", {1, 1, 2, 3, 1}, {4, 5, 1, 2, 3, 1}, 321, false, 1,
                           {{L::A1, 12}, {L::A0_6, 0}, {L::A0_3A1, 0}, {L::A2, 12}, {L::A0A2, 24}},
                           {"z", "y", "x", "t", "s"},
                           {"z^4+z*s^3+z^2*x+z*t",
                            "z^5+5*z^4*y+10*z^3*y^2+z^3*s^2+10*z^2*y^3+5*z*y^4+y^5+z*y*t+z*x^2",
                            "y", "x", "t", "s"}));
        add(builtin_sample("Ltilde_1", {1, 1, 5, 3, 1}, {4, 6, 1, 5, 3, 1}, 149, false, 1,
                           {{L::A1, 15}, {L::A0_6, 0}, {L::A0_3A1, 0}, {L::A2, 8}, {L::A0A2, 24}},
                           {"z", "y", "x", "t", "s"},
                           {"z^4+z^2*s^2-z*t",
                            "z^6+6*z^5*y+15*z^4*y^2+20*z^3*y^3+z^3*s^3+15*z^2*y^4+6*z*y^5+y^6+z*"
                            "x",
                            "y", "x", "t", "s"}));
        add(builtin_sample("Q_1", {1, 1, 6, 2, 1}, {4, 7, 1, 6, 2, 1}, 711, false, 1,
                           {{L::A1, 18}, {L::A0_6, 0}, {L::A0_3A1, 0}, {L::A2, 15}, {L::A0A2, 60}},
                           {"z", "y", "x", "t", "s"},
                           {"z^4+z*s^3+z^2*t+z*y*t",
                            "z^7+7*z^6*y+21*z^5*y^2+35*z^4*y^3+35*z^3*y^4+z^3*s^4+21*z^2*y^5+7*z*"
                            "y^6+y^7-z*x",
                            "y", "x", "t", "s"}));
        add(builtin_sample("Q_2", {1, 1, 4, 3, 2}, {5, 5, 1, 4, 3, 2}, 144, false, 1,
                           {{L::A1, 16}, {L::A0_6, 0}, {L::A0_3A1, 4}, {L::A2, 12}, {L::A0A2, 24}},
                           {"z", "y", "x", "t", "s"},
                           {"z^5+z^2*t+z*s^2-z*x",
                            "z^5+5*z^4*y+10*z^3*y^2+10*z^2*y^3+5*z*y^4+y^5+z^3*s+z*x", "y", "x",
                            "t", "s"}));
        add(builtin_sample("Q_3", {1, 1, 2, 4, 3}, {5, 6, 1, 2, 4, 3}, 654, false, 1,
                           {{L::A1, 20}, {L::A0_6, 0}, {L::A0_3A1, 20}, {L::A2, 30},
                            {L::A0A2, 60}},
                           {"z", "y", "x", "t", "s"},
                           {"z^5+z^3*x-z^2*s+z*x^2+z*t",
                            "z^6+6*z^5*y+15*z^4*y^2+20*z^3*y^3+15*z^2*y^4+6*z*y^5+y^6-z^2*t+z*x*"
                            "s",
                            "y", "x", "t", "s"}));
        add(builtin_sample("Q_4", {1, 1, 7, 5, 4}, {8, 6, 1, 7, 5, 4}, 862, false, 1,
                           {{L::A1, 35}, {L::A0_6, 3}, {L::A0_3A1, 120}, {L::A2, 24},
                            {L::A0A2, 90}},
                           {"z", "y", "x", "t", "s"},
                           {"z^8+z^3*y*s-z*x",
                            "z^6+6*z^5*y+15*z^4*y^2+20*z^3*y^3+15*z^2*y^4+6*z*y^5+y^6-z^2*s+z*t",
                            "y", "x", "t", "s"}));
        add(builtin_sample("Mhat_1_1", {3, 2, 1, 3, 2}, {4, 5, 6, 1, 3, 2}, 13, false, 2,
                           {{L::A1, 3}, {L::A0_6, 0}, {L::A0_3A1, 0}, {L::A2, 6}, {L::A0A2, 0}},
                           {"z", "y", "x", "t", "s"},
                           {"y*x^2+z*x+y^2+y*s", "z*y+y*t", "y^3+y*s^2+z^2", "x", "t", "s"}));
        add(builtin_sample("Phat_1", {1, 1, 1, 2, 1}, {2, 2, 3, 1, 2, 1}, 24, false, 2,
                           {{L::A1, 5}, {L::A0_6, 0}, {L::A0_3A1, 0}, {L::A2, 6}, {L::A0A2, 6}},
                           {"z", "y", "x", "t", "s"},
                           {"z*x+z*s+y^2", "z^2+y*x", "z^3+z^2*y+y^3+y*s^2+z*t", "x", "t", "s"}));
        add(builtin_sample("Nhat_1", {5, 2, 1, 4, 2}, {6, 7, 10, 1, 4, 2}, 1400, false, 2,
                           {{L::A1, 5}, {L::A0_6, 0}, {L::A0_3A1, 0}, {L::A2, 33}, {L::A0A2, 84}},
                           {"z", "y", "x", "t", "s"},
                           {"y*x^4+y^3+z*x+y*t", "z*y+z*s", "y^5+y^2*s^3+y*s^4+y*t^2+z^2", "x",
                            "t", "s"},
                           "uses the x^4*y cross term"));

        // internal consistency beyond the structural checks in add()
        for (const Sample& s : c.samples()) {
            const std::string where = "builtin catalog, sample '" + s.name + "': ";
            if (s.map && s.corank &&
                corank_at_zero(*s.map) != static_cast<std::size_t>(*s.corank))
                throw ValidationError(where + "corank annotation does not match the map");
            std::size_t n = s.grading.n();
            if (s.corank && *s.corank == 1 && n >= 3) {
                for (const RelationCheck& rc : check_corank1_relations(s.grading, 1))
                    if (rc.applicable && !rc.holds)
                        throw ValidationError(where + "relation " + rc.id + " fails (lhs " +
                                              rc.lhs.str() + ", rhs " + rc.rhs.str() + ")");
            }
            if (s.corank && *s.corank <= 1) {
                auto violations = check_vanishing_implications(invariant_report(s.grading));
                if (!violations.empty())
                    throw ValidationError(where + "vanishing implication " +
                                          label_name(violations.front().source) + " -> " +
                                          label_name(violations.front().target) + " violated");
            }
            if (!integrality_screen(s.grading).empty())
                throw ValidationError(where + "integrality screen flagged the grading");
        }
        return c;
    }();
    return catalog;
}

}  // namespace muimage
