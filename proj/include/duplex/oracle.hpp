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
 * @file oracle.hpp
 * @brief Brute-force ground truth for small instances.
 *
 * Everything here answers questions by definition-chasing: substitute a
 * point, enumerate candidate vertices, solve square systems exactly.
 * Nothing touches the pivoting engine, so agreement between the two is
 * evidence, not tautology. The enumeration cost is binomial in the
 * instance size; a budget guards against accidental blowups.
 */

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "duplex/errors.hpp"
#include "duplex/linalg.hpp"
#include "duplex/model.hpp"
#include "duplex/rational.hpp"

namespace duplex {

struct FeasibilityReport {
    bool feasible = false;
    std::vector<RowViolation> violations;
    std::vector<VariableViolation> negative_vars;
};

/// Substitutes x into every row and the sign constraints; feasible means
/// both violation lists are empty.
inline FeasibilityReport check_solution(const InequalitySystem& system, const RationalVector& x) {
    if (x.size() != system.num_vars()) {
        throw ContractError("check_solution: point has " + std::to_string(x.size()) +
                            " coordinates for " + std::to_string(system.num_vars()) +
                            " variables");
    }
    FeasibilityReport report;
    for (std::size_t i = 0; i < system.num_rows(); ++i) {
        const Rational lhs = dot(system.rows()[i], x);
        if (lhs < system.rhs()[i]) report.violations.push_back({i, system.rhs()[i] - lhs});
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].sign() < 0) report.negative_vars.push_back({j, x[j]});
    }
    report.feasible = report.violations.empty() && report.negative_vars.empty();
    return report;
}

/// True when u certifies infeasibility: u >= 0, u'A <= 0 componentwise,
/// and u'b > 0. Any x >= 0 would then give 0 >= u'Ax = u'(Ax) >= u'b > 0.
inline bool check_farkas(const InequalitySystem& system, const RationalVector& u) {
    if (u.size() != system.num_rows()) {
        throw ContractError("check_farkas: multiplier count " + std::to_string(u.size()) +
                            " does not match " + std::to_string(system.num_rows()) + " rows");
    }
    for (const Rational& ui : u) {
        if (ui.sign() < 0) return false;
    }
    for (std::size_t j = 0; j < system.num_vars(); ++j) {
        Rational col_sum(0);
        for (std::size_t i = 0; i < system.num_rows(); ++i) {
            col_sum += u[i] * system.rows()[i][j];
        }
        if (col_sum.sign() > 0) return false;
    }
    Rational ub(0);
    for (std::size_t i = 0; i < system.num_rows(); ++i) ub += u[i] * system.rhs()[i];
    return ub.sign() > 0;
}

/// Enumeration is refused beyond these sizes; the subset count is
/// binomial(rows + vars, vars).
struct OracleBudget {
    std::size_t max_vars = 8;
    std::size_t max_rows = 10;
};

/**
 * Every vertex of {x : Ax >= b, x >= 0}, sorted lexicographically.
 * A vertex is a feasible point where some n of the m + n bounding
 * hyperplanes (constraint rows and coordinate planes) meet with full
 * rank, so all n-subsets are tried. The region lies in the nonnegative
 * orthant and therefore contains no line: it is nonempty exactly when
 * this list is nonempty.
 */
inline std::vector<RationalVector> enumerate_vertices(const InequalitySystem& system,
                                                      const OracleBudget& budget = {}) {
    const std::size_t n = system.num_vars();
    const std::size_t m = system.num_rows();
    if (n > budget.max_vars || m > budget.max_rows) {
        throw OracleError("enumerate_vertices: instance " + std::to_string(n) + " vars x " +
                          std::to_string(m) + " rows exceeds budget " +
                          std::to_string(budget.max_vars) + " x " +
                          std::to_string(budget.max_rows));
    }

    std::set<RationalVector> found;
    // Hyperplane h < m is row h as an equality; h >= m is x_{h-m} = 0.
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;

    const std::size_t total = m + n;
    while (true) {
        std::vector<RationalVector> mat(n);
        RationalVector rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::size_t h = pick[r];
            if (h < m) {
                mat[r] = system.rows()[h];
                rhs[r] = system.rhs()[h];
            } else {
                mat[r] = zeros(n);
                mat[r][h - m] = Rational(1);
                rhs[r] = Rational(0);
            }
        }
        if (auto x = solve_linear_system(std::move(mat), std::move(rhs))) {
            if (check_solution(system, *x).feasible) found.insert(std::move(*x));
        }

        // next n-combination of {0, ..., total-1}
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == total - n + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

inline bool oracle_feasible(const InequalitySystem& system, const OracleBudget& budget = {}) {
    return !enumerate_vertices(system, budget).empty();
}

enum class OracleVerdict { Infeasible, Unbounded, Optimal };

struct OracleResult {
    OracleVerdict verdict = OracleVerdict::Infeasible;
    Rational value;        // Optimal only
    RationalVector vertex; // Optimal only: lexicographically least argmin
};

/// The recession cone of a nonempty region contains a direction with
/// c'd <= -1 exactly when the objective is unbounded below on it.
inline InequalitySystem recession_witness_system(const LinearProgram& lp) {
    InequalitySystem sys(lp.system().num_vars());
    for (std::size_t i = 0; i < lp.system().num_rows(); ++i) {
        sys.add_row(lp.system().rows()[i], Rational(0));
    }
    sys.add_row(negated(lp.objective()), Rational(1));
    return sys;
}

/**
 * Minimizes by inspecting every vertex. Sound because the region is
 * pointed: a bounded-below objective attains its minimum at a vertex,
 * and unboundedness is equivalent to a recession direction along which
 * the objective falls, itself detected by a second enumeration.
 */
inline OracleResult oracle_min(const LinearProgram& lp, const OracleBudget& budget = {}) {
    const auto vertices = enumerate_vertices(lp.system(), budget);
    if (vertices.empty()) return {OracleVerdict::Infeasible, Rational(0), {}};

    OracleBudget recession_budget = budget;
    ++recession_budget.max_rows;
    if (oracle_feasible(recession_witness_system(lp), recession_budget)) {
        return {OracleVerdict::Unbounded, Rational(0), {}};
    }

    OracleResult best{OracleVerdict::Optimal, dot(lp.objective(), vertices.front()),
                      vertices.front()};
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const Rational z = dot(lp.objective(), vertices[i]);
        if (z < best.value) {
            best.value = z;
            best.vertex = vertices[i];
        }
    }
    return best;
}

} // namespace duplex
