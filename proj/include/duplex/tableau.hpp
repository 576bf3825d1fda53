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
 * @file tableau.hpp
 * @brief The dual tableau and its pivot rules.
 *
 * To find x >= 0 with Ax >= b we maximize w = y'b subject to
 * yA + Is = 0, y >= 0, s >= 0. The slack block I is an immediate unit
 * basis and every right-hand side is zero, so the problem is fully
 * degenerate: all basic values stay zero and progress is decided purely
 * by sign tests on the w-row. If the dual is unbounded the system has no
 * solution (the unbounded direction is a Farkas certificate); otherwise
 * the terminal w-row carries a solution, x_j = -w[slack j].
 *
 * An objective bound -c'x >= t appears as an extra column (a dual
 * variable for the appended constraint). Several bounds can share one
 * tableau; only the active one may enter the basis, the rest ride along.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "duplex/errors.hpp"
#include "duplex/linalg.hpp"
#include "duplex/model.hpp"
#include "duplex/rational.hpp"

namespace duplex {

enum class ColumnKind { Threshold, Dual, Slack };

struct ColumnMeta {
    ColumnKind kind;
    Rational bound;    // Threshold only: the current objective bound t
    std::size_t index; // Dual: constraint i; Slack: variable j; Threshold: position
};

class DualTableau {
public:
    /// Lays out columns as [thresholds, descending t | duals, constraint
    /// order | slacks, variable order]. Row j holds (-c_j repeated k
    /// times | column j of A, transposed | e_j); the w-row starts as
    /// (t_k ... t_1 | b | 0). With thresholds present the smallest bound
    /// is active.
    DualTableau(InequalitySystem system, std::optional<RationalVector> objective = std::nullopt,
                std::optional<ThresholdSpec> thresholds = std::nullopt)
        : system_(std::move(system)) {
        n_ = system_.num_vars();
        m_ = system_.num_rows();
        if (thresholds && !objective) {
            throw ModelError("tableau: thresholds require an objective");
        }
        if (objective) {
            if (objective->size() != n_) {
                throw ModelError("tableau: objective has " + std::to_string(objective->size()) +
                                 " coefficients for " + std::to_string(n_) + " variables");
            }
            objective_ = std::move(*objective);
        }
        k_ = thresholds ? thresholds->count() : 0;

        const std::size_t width = k_ + m_ + n_;
        cols_.reserve(width);
        for (std::size_t p = 0; p < k_; ++p) {
            // Descending bound order: column p carries t_{k-p}.
            cols_.push_back({ColumnKind::Threshold, thresholds->values()[k_ - 1 - p], p});
        }
        for (std::size_t i = 0; i < m_; ++i) cols_.push_back({ColumnKind::Dual, Rational(0), i});
        for (std::size_t j = 0; j < n_; ++j) cols_.push_back({ColumnKind::Slack, Rational(0), j});

        rows_.assign(n_, RationalVector(width));
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t p = 0; p < k_; ++p) rows_[j][p] = -objective_[j];
            for (std::size_t i = 0; i < m_; ++i) rows_[j][k_ + i] = system_.rows()[i][j];
            rows_[j][k_ + m_ + j] = Rational(1);
        }

        w_.assign(width, Rational(0));
        for (std::size_t p = 0; p < k_; ++p) w_[p] = cols_[p].bound;
        for (std::size_t i = 0; i < m_; ++i) w_[k_ + i] = system_.rhs()[i];

        basis_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) basis_[j] = k_ + m_ + j;

        if (k_ > 0) active_ = k_ - 1; // smallest bound
    }

    std::size_t num_vars() const { return n_; }
    std::size_t num_constraints() const { return m_; }
    std::size_t num_thresholds() const { return k_; }
    std::size_t width() const { return cols_.size(); }

    const std::vector<RationalVector>& rows() const { return rows_; }
    const RationalVector& w_row() const { return w_; }
    const std::vector<ColumnMeta>& cols() const { return cols_; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    std::optional<std::size_t> active_threshold() const { return active_; }
    std::size_t pivot_count() const { return pivot_count_; }

    std::size_t dual_col(std::size_t i) const { return k_ + i; }
    std::size_t slack_col(std::size_t j) const { return k_ + m_ + j; }

    /// A column may enter unless it is an inactive threshold column.
    bool eligible(std::size_t col) const {
        return cols_[col].kind != ColumnKind::Threshold || (active_ && *active_ == col);
    }

    /// Largest positive w-row entry among eligible columns, ties to the
    /// highest column index; nullopt at a terminal state.
    std::optional<std::size_t> select_entering() const {
        std::optional<std::size_t> best;
        for (std::size_t c = 0; c < width(); ++c) {
            if (!eligible(c) || w_[c].sign() <= 0) continue;
            if (!best || w_[c] >= w_[*best]) best = c;
        }
        return best;
    }

    /// Lowest-index eligible column with positive w-row entry. Fallback
    /// rule once a basis repeats; finite by construction.
    std::optional<std::size_t> select_entering_lowest_index() const {
        for (std::size_t c = 0; c < width(); ++c) {
            if (eligible(c) && w_[c].sign() > 0) return c;
        }
        return std::nullopt;
    }

    /// Among rows with a positive entry in `col`, the row whose quotient
    /// by that entry is lexicographically minimal. nullopt means the dual
    /// is unbounded along `col`: the system is infeasible.
    std::optional<std::size_t> select_leaving(std::size_t col) const {
        std::optional<std::size_t> best;
        for (std::size_t r = 0; r < n_; ++r) {
            if (rows_[r][col].sign() <= 0) continue;
            if (!best || quotient_less(r, *best, col)) best = r;
        }
        return best;
    }

    /// Gauss-Jordan step: divide row r by the pivot entry, clear column c
    /// everywhere else including the w-row, and make c basic in r.
    void pivot(std::size_t r, std::size_t c) {
        if (r >= n_ || c >= width()) throw ContractError("pivot: index out of range");
        const Rational entry = rows_[r][c];
        if (entry.is_zero()) throw ContractError("pivot: zero pivot entry");

        if (entry != Rational(1)) {
            const Rational inv = Rational(1) / entry;
            for (auto& v : rows_[r]) v *= inv;
        }
        for (std::size_t rr = 0; rr < n_; ++rr) {
            if (rr == r) continue;
            subtract_scaled(rows_[rr], rows_[rr][c], rows_[r]);
        }
        subtract_scaled(w_, w_[c], rows_[r]);

        basis_[r] = c;
        ++pivot_count_;
    }

    /// The trial point x_j = -w[slack j]; feasible exactly at a feasible
    /// terminal state, an infeasibility diagnostic otherwise.
    RationalVector current_point() const {
        RationalVector x(n_);
        for (std::size_t j = 0; j < n_; ++j) x[j] = -w_[slack_col(j)];
        return x;
    }

    void set_active_threshold(std::size_t col) {
        if (col >= width() || cols_[col].kind != ColumnKind::Threshold) {
            throw ContractError("set_active_threshold: column " + std::to_string(col) +
                                " is not a threshold column");
        }
        active_ = col;
    }

    /// Moves the active bound to t + delta by adding delta to its w-row
    /// entry. Positive delta demands a better objective value, negative
    /// relaxes. Re-run the solver afterwards to warm-restart.
    void adjust_threshold(const Rational& delta) {
        if (k_ == 0 || !active_) {
            throw ContractError("adjust_threshold: no threshold column");
        }
        w_[*active_] += delta;
        cols_[*active_].bound += delta;
    }

    /**
     * The unbounded dual direction at an entering column whose tableau
     * entries are all <= 0. The returned vector is indexed by column:
     * 1 at `col`, -rows[r][col] at each basic column, 0 elsewhere. Its
     * threshold+dual part u satisfies u >= 0, u'A_ext <= 0, u'b_ext > 0
     * over the extended system, i.e. it is a Farkas certificate.
     */
    RationalVector extract_farkas_ray(std::size_t col) const {
        if (col >= width() || w_[col].sign() <= 0) {
            throw ContractError("extract_farkas_ray: column w-row entry must be positive");
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (rows_[r][col].sign() > 0) {
                throw ContractError("extract_farkas_ray: column has a positive row entry");
            }
        }
        RationalVector ray(width());
        ray[col] = Rational(1);
        for (std::size_t r = 0; r < n_; ++r) ray[basis_[r]] = -rows_[r][col];
        return ray;
    }

    /// Threshold + dual coordinates of a column-indexed ray, ordered like
    /// the rows of extended_system().
    RationalVector farkas_y_part(const RationalVector& ray) const {
        return RationalVector(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(k_ + m_));
    }

    RationalVector farkas_s_part(const RationalVector& ray) const {
        return RationalVector(ray.begin() + static_cast<std::ptrdiff_t>(k_ + m_), ray.end());
    }

    /// The system this tableau pivots over: one row -c >= t per threshold
    /// column (current bounds, descending), then the original rows.
    InequalitySystem extended_system() const {
        InequalitySystem ext(n_);
        for (std::size_t p = 0; p < k_; ++p) {
            ext.add_row(negated(objective_), cols_[p].bound);
        }
        for (std::size_t i = 0; i < m_; ++i) {
            ext.add_row(system_.rows()[i], system_.rhs()[i]);
        }
        return ext;
    }

    const InequalitySystem& base_system() const { return system_; }
    const RationalVector& objective() const { return objective_; }

    bool operator==(const DualTableau& o) const {
        return rows_ == o.rows_ && w_ == o.w_ && basis_ == o.basis_;
    }

    /// Structural invariants, asserted after every pivot in debug builds:
    /// basis columns are unit with zero w-row entry, threshold columns
    /// have pairwise identical row entries, and their w-row differences
    /// equal their bound differences.
    void check_invariants() const {
        for (std::size_t r = 0; r < n_; ++r) {
            const std::size_t c = basis_[r];
            if (!w_[c].is_zero()) throw ContractError("invariant: basic column with nonzero w");
            for (std::size_t rr = 0; rr < n_; ++rr) {
                const Rational expect = rr == r ? Rational(1) : Rational(0);
                if (rows_[rr][c] != expect) {
                    throw ContractError("invariant: basis column not a unit vector");
                }
            }
        }
        for (std::size_t p = 1; p < k_; ++p) {
            for (std::size_t r = 0; r < n_; ++r) {
                if (rows_[r][p] != rows_[r][0]) {
                    throw ContractError("invariant: threshold columns diverged");
                }
            }
            if (w_[0] - w_[p] != cols_[0].bound - cols_[p].bound) {
                throw ContractError("invariant: threshold w-row difference mismatch");
            }
        }
    }

private:
    // Compares rows a and b scaled by their (positive) entries in the
    // pivot column, without materializing the quotient vectors.
    bool quotient_less(std::size_t a, std::size_t b, std::size_t col) const {
        const Rational& qa = rows_[a][col];
        const Rational& qb = rows_[b][col];
        for (std::size_t i = 0; i < width(); ++i) {
            const Rational lhs = rows_[a][i] * qb;
            const Rational rhs = rows_[b][i] * qa;
            if (lhs != rhs) return lhs < rhs;
        }
        return false;
    }

    InequalitySystem system_;
    RationalVector objective_; // empty when the tableau has no objective
    std::size_t n_ = 0;        // rows (primal variables)
    std::size_t m_ = 0;        // dual columns (constraints)
    std::size_t k_ = 0;        // threshold columns
    std::vector<ColumnMeta> cols_;
    std::vector<RationalVector> rows_; // n x (k+m+n)
    RationalVector w_;
    std::vector<std::size_t> basis_; // row -> basic column
    std::optional<std::size_t> active_;
    std::size_t pivot_count_ = 0;
};

inline DualTableau build_tableau(InequalitySystem system,
                                 std::optional<RationalVector> objective = std::nullopt,
                                 std::optional<ThresholdSpec> thresholds = std::nullopt) {
    return DualTableau(std::move(system), std::move(objective), std::move(thresholds));
}

inline DualTableau build_tableau(const LinearProgram& lp, const ThresholdSpec& thresholds) {
    return DualTableau(lp.system(), lp.objective(), thresholds);
}

} // namespace duplex
