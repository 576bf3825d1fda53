// Copyright 2026 The Duplex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file io.hpp
 * @brief Problem file formats, tableau rendering, and trace output.
 *
 * Two problem formats, both exact: a line-oriented text format and a
 * JSON schema whose numbers travel as strings (native JSON floats are
 * rejected, never coerced — exactness would die in the decimal point).
 * Both round-trip losslessly. Tableau rendering mirrors the layout used
 * throughout: a column-index header, the w-row, then one row per
 * variable.
 */

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "duplex/errors.hpp"
#include "duplex/linalg.hpp"
#include "duplex/model.hpp"
#include "duplex/rational.hpp"
#include "duplex/solve.hpp"
#include "duplex/tableau.hpp"

namespace duplex {

// ---------------------------------------------------------------------------
// Text format
//
//   # any comment
//   vars 3
//   min -8 -4 -2          (optional; presence makes the problem an LP)
//   row 1 3 0 >= 2        (zero or more)
// ---------------------------------------------------------------------------

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

inline Rational parse_number(std::size_t line, const std::string& token) {
    try {
        return Rational::parse(token);
    } catch (const ParseError& e) {
        parse_fail(line, std::string(e.what()));
    }
}

} // namespace detail

/// Parses the text format. The `vars` line must come first; `min`, if
/// present, must precede every `row`. Malformed input raises ParseError
/// with the offending line number.
inline Problem parse_text(std::istream& in) {
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::optional<RationalVector> objective;
    std::vector<RationalVector> rows;
    RationalVector rhs;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream words(line);
        std::string keyword;
        if (!(words >> keyword) || keyword[0] == '#') continue;

        std::vector<std::string> tokens;
        for (std::string t; words >> t;) tokens.push_back(std::move(t));

        if (keyword == "vars") {
            if (n) detail::parse_fail(line_no, "duplicate vars line");
            if (tokens.size() != 1) detail::parse_fail(line_no, "vars takes one count");
            const Rational count = detail::parse_number(line_no, tokens[0]);
            if (!count.is_integer() || count.sign() <= 0) {
                detail::parse_fail(line_no, "vars count must be a positive integer");
            }
            if (count > Rational(1 << 20)) detail::parse_fail(line_no, "vars count too large");
            n = static_cast<std::size_t>(count.numerator().convert_to<unsigned long long>());
        } else if (keyword == "min") {
            if (!n) detail::parse_fail(line_no, "min before vars");
            if (objective) detail::parse_fail(line_no, "duplicate min line");
            if (!rows.empty()) detail::parse_fail(line_no, "min must precede rows");
            if (tokens.size() != *n) {
                detail::parse_fail(line_no, "min needs " + std::to_string(*n) +
                                                " coefficients, got " +
                                                std::to_string(tokens.size()));
            }
            RationalVector c;
            for (const auto& t : tokens) c.push_back(detail::parse_number(line_no, t));
            objective = std::move(c);
        } else if (keyword == "row") {
            if (!n) detail::parse_fail(line_no, "row before vars");
            if (tokens.size() != *n + 2 || tokens[*n] != ">=") {
                detail::parse_fail(line_no, "row needs " + std::to_string(*n) +
                                                " coefficients, '>=', and a bound");
            }
            RationalVector row;
            for (std::size_t j = 0; j < *n; ++j) {
                row.push_back(detail::parse_number(line_no, tokens[j]));
            }
            rows.push_back(std::move(row));
            rhs.push_back(detail::parse_number(line_no, tokens[*n + 1]));
        } else {
            detail::parse_fail(line_no, "unknown keyword '" + keyword + "'");
        }
    }
    if (!n) throw ParseError("missing vars line");

    InequalitySystem system(std::move(rows), std::move(rhs), *n);
    if (objective) return LinearProgram(std::move(*objective), std::move(system));
    return system;
}

inline Problem parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse_text(in);
}

/// Canonical text form: `vars`, then `min` for LPs, then the rows, all
/// numbers as canonical fractions. parse_text inverts this exactly.
inline std::string emit_text(const Problem& problem) {
    const InequalitySystem& sys = system_of(problem);
    std::string out = "vars " + std::to_string(sys.num_vars()) + "\n";
    if (const auto* lp = std::get_if<LinearProgram>(&problem)) {
        out += "min";
        for (const auto& cj : lp->objective()) out += " " + cj.to_string();
        out += "\n";
    }
    for (std::size_t i = 0; i < sys.num_rows(); ++i) {
        out += "row";
        for (const auto& a : sys.rows()[i]) out += " " + a.to_string();
        out += " >= " + sys.rhs()[i].to_string() + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON format: {"n": 3, "A": [["1","3","0"], ...], "b": ["2", ...],
// "c": ["-8", ...]} — c optional, every number a string.
// ---------------------------------------------------------------------------

namespace detail {

inline Rational json_number(const nlohmann::json& v, const std::string& key) {
    if (!v.is_string()) {
        throw ParseError(key + ": numbers must be strings, got " + std::string(v.type_name()));
    }
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(key + ": " + e.what());
    }
}

inline RationalVector json_vector(const nlohmann::json& v, const std::string& key) {
    if (!v.is_array()) throw ParseError(key + ": expected an array");
    RationalVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(json_number(v[i], key + "[" + std::to_string(i) + "]"));
    }
    return out;
}

} // namespace detail

inline Problem parse_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "n" && key != "A" && key != "b" && key != "c") {
            throw ParseError(key + ": unknown key");
        }
    }
    for (const char* required : {"n", "A", "b"}) {
        if (!doc.contains(required)) throw ParseError(std::string(required) + ": missing");
    }

    const auto& jn = doc["n"];
    if (!jn.is_number_integer() || jn.get<long long>() < 1) {
        throw ParseError("n: expected a positive integer");
    }
    const auto n = jn.get<std::size_t>();

    if (!doc["A"].is_array()) throw ParseError("A: expected an array of arrays");
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < doc["A"].size(); ++i) {
        RationalVector row = detail::json_vector(doc["A"][i], "A[" + std::to_string(i) + "]");
        if (row.size() != n) {
            throw ParseError("A[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                             " entries, got " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    RationalVector rhs = detail::json_vector(doc["b"], "b");
    if (rhs.size() != rows.size()) {
        throw ParseError("b: expected " + std::to_string(rows.size()) + " entries, got " +
                         std::to_string(rhs.size()));
    }

    InequalitySystem system(std::move(rows), std::move(rhs), n);
    if (doc.contains("c")) {
        RationalVector c = detail::json_vector(doc["c"], "c");
        if (c.size() != n) {
            throw ParseError("c: expected " + std::to_string(n) + " entries, got " +
                             std::to_string(c.size()));
        }
        return LinearProgram(std::move(c), std::move(system));
    }
    return system;
}

inline std::string emit_json(const Problem& problem) {
    const InequalitySystem& sys = system_of(problem);
    nlohmann::json doc;
    doc["n"] = sys.num_vars();
    auto strings = [](const RationalVector& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : v) arr.push_back(x.to_string());
        return arr;
    };
    doc["A"] = nlohmann::json::array();
    for (const auto& row : sys.rows()) doc["A"].push_back(strings(row));
    doc["b"] = strings(sys.rhs());
    if (const auto* lp = std::get_if<LinearProgram>(&problem)) {
        doc["c"] = strings(lp->objective());
    }
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Tableau rendering
// ---------------------------------------------------------------------------

struct RenderStyle {
    bool use_decimal = false;
    unsigned places = 3;
    bool comma = false; // decimal separator ',' instead of '.'

    static RenderStyle fraction() { return {}; }
    static RenderStyle decimal(unsigned places, bool comma = false) {
        return {true, places, comma};
    }
};

/// Column-index header (1-based), the w-row, then the variable rows,
/// right-aligned. Fraction style is exact and re-parseable; decimal
/// style rounds half-away-from-zero to the given places.
inline std::string render_tableau(const DualTableau& tab, const RenderStyle& style = {}) {
    const std::size_t width = tab.width();
    std::vector<std::vector<std::string>> grid;
    grid.reserve(2 + tab.num_vars());

    std::vector<std::string> header(width);
    for (std::size_t c = 0; c < width; ++c) header[c] = std::to_string(c + 1);
    grid.push_back(std::move(header));

    auto render_row = [&](const RationalVector& row) {
        std::vector<std::string> cells(width);
        for (std::size_t c = 0; c < width; ++c) {
            cells[c] = style.use_decimal ? row[c].to_decimal(style.places, style.comma)
                                         : row[c].to_string();
        }
        grid.push_back(std::move(cells));
    };
    render_row(tab.w_row());
    for (const auto& row : tab.rows()) render_row(row);

    std::vector<std::size_t> widths(width, 0);
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < width; ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < width; ++c) {
            if (c > 0) out += "  ";
            out += std::string(widths[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trace output: one JSON record per line — each pivot, then the verdict.
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json trace_strings(const RationalVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : v) arr.push_back(x.to_string());
    return arr;
}

} // namespace detail

/// JSONL: pivot records {"step", "entering_col", "leaving_row",
/// "pivot_value", "w_row_after"} with 1-based indices and string-encoded
/// values, closed by a terminal record carrying the verdict and the
/// solution point or certificate.
inline std::string emit_trace(const SolveOutcome& outcome) {
    std::string out;
    std::size_t step = 0;
    for (const auto& rec : outcome.trace) {
        nlohmann::json j;
        j["step"] = ++step;
        j["entering_col"] = rec.entering_col + 1;
        j["leaving_row"] = rec.leaving_row + 1;
        j["pivot_value"] = rec.pivot_value.to_string();
        j["w_row_after"] = detail::trace_strings(rec.w_after);
        out += j.dump() + "\n";
    }
    nlohmann::json last;
    last["pivots"] = outcome.pivots;
    switch (outcome.verdict) {
    case Verdict::Feasible:
        last["verdict"] = "feasible";
        last["x"] = detail::trace_strings(outcome.x);
        break;
    case Verdict::Infeasible:
        last["verdict"] = "infeasible";
        last["entering_col"] = *outcome.entering_col + 1;
        last["farkas_y"] = detail::trace_strings(outcome.farkas_y);
        last["farkas_s"] = detail::trace_strings(outcome.farkas_s);
        last["last_point"] = detail::trace_strings(outcome.x);
        break;
    case Verdict::LimitExceeded:
        last["verdict"] = "limit";
        last["last_point"] = detail::trace_strings(outcome.x);
        break;
    }
    out += last.dump() + "\n";
    return out;
}

} // namespace duplex
