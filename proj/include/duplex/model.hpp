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
 * @file model.hpp
 * @brief Problem data model: inequality systems Ax >= b with x >= 0
 *        implicit, linear programs min c'x over such a system, threshold
 *        specs, problem transformations, and built-in instances.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "duplex/errors.hpp"
#include "duplex/linalg.hpp"
#include "duplex/rational.hpp"

namespace duplex {

/// The system Ax >= b with x >= 0 implicit. A is m x n; m = 0 is a valid
/// (always feasible) system, so the variable count is stored explicitly.
class InequalitySystem {
public:
    explicit InequalitySystem(std::size_t num_vars) : n_(num_vars) {
        if (n_ < 1) throw ModelError("system: needs at least one variable");
    }

    InequalitySystem(std::vector<RationalVector> rows, RationalVector rhs, std::size_t num_vars)
        : InequalitySystem(num_vars) {
        if (rows.size() != rhs.size()) {
            throw ModelError("system: " + std::to_string(rows.size()) + " rows but " +
                             std::to_string(rhs.size()) + " right-hand sides");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != n_) {
                throw ModelError("system: row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(n_));
            }
        }
        rows_ = std::move(rows);
        rhs_ = std::move(rhs);
    }

    void add_row(RationalVector row, Rational rhs) {
        if (row.size() != n_) {
            throw ModelError("system: appended row has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n_));
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
    }

    std::size_t num_vars() const { return n_; }
    std::size_t num_rows() const { return rows_.size(); }
    const std::vector<RationalVector>& rows() const { return rows_; }
    const RationalVector& rhs() const { return rhs_; }
    const RationalVector& row(std::size_t i) const { return rows_.at(i); }
    const Rational& rhs(std::size_t i) const { return rhs_.at(i); }

    bool operator==(const InequalitySystem& o) const = default;

private:
    std::size_t n_;
    std::vector<RationalVector> rows_; // m rows of length n
    RationalVector rhs_;               // length m
};

/// minimize c'x subject to an InequalitySystem.
class LinearProgram {
public:
    LinearProgram(RationalVector objective, InequalitySystem system)
        : c_(std::move(objective)), system_(std::move(system)) {
        if (c_.size() != system_.num_vars()) {
            throw ModelError("lp: objective has " + std::to_string(c_.size()) +
                             " coefficients for " + std::to_string(system_.num_vars()) +
                             " variables");
        }
    }

    const RationalVector& objective() const { return c_; }
    const InequalitySystem& system() const { return system_; }
    std::size_t num_vars() const { return system_.num_vars(); }

    bool operator==(const LinearProgram& o) const = default;

private:
    RationalVector c_;
    InequalitySystem system_;
};

/// Either problem kind, as parsed from a file or looked up by name.
using Problem = std::variant<InequalitySystem, LinearProgram>;

inline const InequalitySystem& system_of(const Problem& p) {
    if (const auto* sys = std::get_if<InequalitySystem>(&p)) return *sys;
    return std::get<LinearProgram>(p).system();
}

/// A constraint row a point fails, by how much.
struct RowViolation {
    std::size_t row = 0;
    Rational shortfall; // rhs - a'x, positive
};

/// A coordinate a point holds below zero.
struct VariableViolation {
    std::size_t var = 0;
    Rational value; // negative
};

/// Strictly increasing objective bounds t1 < ... < tk, each standing for
/// the constraint -c'x >= t.
class ThresholdSpec {
public:
    explicit ThresholdSpec(RationalVector values) : values_(std::move(values)) {
        if (values_.empty()) throw ModelError("thresholds: empty");
        for (std::size_t i = 1; i < values_.size(); ++i) {
            if (!(values_[i - 1] < values_[i])) {
                throw ModelError("thresholds: values must be strictly increasing");
            }
        }
    }

    const RationalVector& values() const { return values_; }
    std::size_t count() const { return values_.size(); }

private:
    RationalVector values_;
};

inline InequalitySystem make_system(std::vector<RationalVector> rows, RationalVector rhs,
                                    std::size_t num_vars) {
    return InequalitySystem(std::move(rows), std::move(rhs), num_vars);
}

/// Multiplies row i (0-based) and its right-hand side by alpha > 0. The
/// solution set is unchanged, but the pivot path may not be: a rescaled
/// row can win or lose the entering-column argmax.
[[nodiscard]] inline InequalitySystem scale_row(const InequalitySystem& system, std::size_t i,
                                                const Rational& alpha) {
    if (i >= system.num_rows()) {
        throw ModelError("scale_row: row " + std::to_string(i) + " out of range");
    }
    if (alpha.sign() <= 0) {
        throw ModelError("scale_row: factor must be positive, got " + alpha.to_string());
    }
    std::vector<RationalVector> rows = system.rows();
    RationalVector rhs = system.rhs();
    rows[i] = scaled(rows[i], alpha);
    rhs[i] *= alpha;
    return InequalitySystem(std::move(rows), std::move(rhs), system.num_vars());
}

/// The appended constraint -c'x >= t as a (row, rhs) pair.
inline std::pair<RationalVector, Rational> objective_threshold_row(const LinearProgram& lp,
                                                                   const Rational& t) {
    return {negated(lp.objective()), t};
}

/**
 * The combined primal-dual system over n+m unknowns (x then y):
 *
 *   -c'x + b'y >= 0        (zero duality gap, one row)
 *    Ax         >= b        (primal feasibility, m rows)
 *        -A'y   >= -c       (dual feasibility, n rows)
 *
 * together with the implicit x, y >= 0. Every feasible point is an
 * optimal primal-dual pair of the program.
 */
inline InequalitySystem primal_dual_system(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars();
    const std::size_t m = lp.system().num_rows();
    const auto& a = lp.system().rows();
    const auto& b = lp.system().rhs();
    const auto& c = lp.objective();

    std::vector<RationalVector> rows;
    RationalVector rhs;
    rows.reserve(1 + m + n);

    RationalVector gap_row = negated(c);
    gap_row.insert(gap_row.end(), b.begin(), b.end());
    rows.push_back(std::move(gap_row));
    rhs.push_back(Rational(0));

    for (std::size_t i = 0; i < m; ++i) {
        RationalVector row = a[i];
        row.resize(n + m);
        rows.push_back(std::move(row));
        rhs.push_back(b[i]);
    }

    for (std::size_t j = 0; j < n; ++j) {
        RationalVector row(n + m);
        for (std::size_t i = 0; i < m; ++i) row[n + i] = -a[i][j];
        rows.push_back(std::move(row));
        rhs.push_back(-c[j]);
    }

    return InequalitySystem(std::move(rows), std::move(rhs), n + m);
}

/**
 * The d-variable worst-case cube family:
 *
 *   minimize  sum_j -2^(d-j) x_j
 *   subject to  -sum_{j<i} 2^(i-j+1) x_j - x_i >= -5^i,  i = 1..d
 *
 * The optimum is z = -5^d at x = (0, ..., 0, 5^d). Coefficients grow as
 * 2^d and 5^d, which is why the scalar type is arbitrary precision.
 */
inline LinearProgram klee_minty(std::size_t d) {
    if (d < 1) throw ModelError("klee_minty: dimension must be >= 1");

    RationalVector c(d);
    for (std::size_t j = 1; j <= d; ++j) {
        c[j - 1] = Rational(-boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(d - j)));
    }

    std::vector<RationalVector> rows(d, RationalVector(d));
    RationalVector rhs(d);
    for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t j = 1; j < i; ++j) {
            rows[i - 1][j - 1] =
                Rational(-boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(i - j + 1)));
        }
        rows[i - 1][i - 1] = Rational(-1);
        rhs[i - 1] = Rational(-boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(i)));
    }

    return LinearProgram(std::move(c), InequalitySystem(std::move(rows), std::move(rhs), d));
}

namespace corpus_detail {

inline InequalitySystem example_3_1() {
    return make_system({{1, 3, 0}, {0, 1, 0}, {-1, 0, 1}}, {2, 1, -2}, 3);
}

// The cycling example: two homogeneous rows plus the bound c'x >= 18,
// stored exactly as printed (a lower bound on the objective value).
inline InequalitySystem example_3_2_system() {
    return make_system({{2, 9, -1, -9},
                        {rat("-1/3"), -1, rat("1/3"), 2},
                        {-2, -3, 1, 12}},
                       {0, 0, 18}, 4);
}

inline LinearProgram example_3_2_lp() {
    return LinearProgram({-2, -3, 1, 12}, example_3_2_system());
}

} // namespace corpus_detail

/// Built-in instances by name: "example_3_1", "example_3_2_system",
/// "example_3_2_lp", "klee_minty_4".
inline Problem corpus(std::string_view name) {
    if (name == "example_3_1") return corpus_detail::example_3_1();
    if (name == "example_3_2_system") return corpus_detail::example_3_2_system();
    if (name == "example_3_2_lp") return corpus_detail::example_3_2_lp();
    if (name == "klee_minty_4") return klee_minty(4);
    throw ModelError("corpus: unknown instance '" + std::string(name) + "'");
}

inline std::vector<std::string> corpus_names() {
    return {"example_3_1", "example_3_2_system", "example_3_2_lp", "klee_minty_4"};
}

} // namespace duplex
