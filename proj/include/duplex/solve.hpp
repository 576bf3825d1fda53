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
 * @file solve.hpp
 * @brief Driving the tableau: feasibility runs, threshold sweeps,
 *        bisection optimization and the combined primal-dual system.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "duplex/errors.hpp"
#include "duplex/linalg.hpp"
#include "duplex/model.hpp"
#include "duplex/rational.hpp"
#include "duplex/tableau.hpp"

namespace duplex {

enum class Verdict { Feasible, Infeasible, LimitExceeded };

struct SolveOptions {
    /// Pivot budget for one solve() call; 0 means 10 * (columns).
    std::size_t max_pivots = 0;
    bool record_trace = false;
    bool record_tableaux = false;
};

struct PivotRecord {
    std::size_t entering_col = 0;
    std::size_t leaving_row = 0;
    Rational pivot_value;
    RationalVector w_after;
};

struct SolveOutcome {
    Verdict verdict = Verdict::Feasible;
    RationalVector x;          // solution if feasible, last trial point otherwise
    std::size_t pivots = 0;    // pivots performed by this call
    bool fallback_used = false;

    // Infeasible only: the certifying column and the unbounded dual
    // direction, split into its dual part y (over the extended system's
    // rows) and slack part s.
    std::optional<std::size_t> entering_col;
    RationalVector farkas_ray; // column-indexed, empty unless infeasible
    RationalVector farkas_y;
    RationalVector farkas_s;
    std::vector<RowViolation> violated_rows;     // extended rows x fails
    std::vector<VariableViolation> negative_vars;

    std::vector<PivotRecord> trace;       // populated when record_trace
    std::vector<DualTableau> tableaux;    // initial + one per pivot, when record_tableaux
};

namespace detail {

inline std::size_t default_pivot_limit(const DualTableau& tab) {
    return 10 * tab.width();
}

/// Rows of the extended system the point fails, with shortfalls, plus
/// any negative coordinates. Inlined here (rather than calling the
/// oracle) so solver diagnostics and oracle checks stay independent.
inline void diagnose(const DualTableau& tab, const RationalVector& x, SolveOutcome& out) {
    const InequalitySystem ext = tab.extended_system();
    for (std::size_t i = 0; i < ext.num_rows(); ++i) {
        const Rational lhs = dot(ext.rows()[i], x);
        if (lhs < ext.rhs()[i]) out.violated_rows.push_back({i, ext.rhs()[i] - lhs});
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].sign() < 0) out.negative_vars.push_back({j, x[j]});
    }
}

} // namespace detail

/**
 * Pivots the tableau to a terminal state. Feasible: no eligible column
 * has a positive w-row entry and the slack part of the w-row encodes a
 * solution. Infeasible: some column certifies dual unboundedness and the
 * outcome carries the Farkas ray. Cycling (a repeated basis) flips the
 * entering rule to lowest-eligible-index for the rest of the call, which
 * cannot cycle; a pivot budget still caps pathological runs.
 */
inline SolveOutcome solve(DualTableau& tab, const SolveOptions& opts = {}) {
    SolveOutcome out;
    const std::size_t limit = opts.max_pivots ? opts.max_pivots : detail::default_pivot_limit(tab);

    std::set<std::vector<std::size_t>> seen;
    bool fallback = false;
    auto signature = [&tab]() {
        std::vector<std::size_t> sig = tab.basis();
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    seen.insert(signature());
    if (opts.record_tableaux) out.tableaux.push_back(tab);

    while (true) {
        const auto entering =
            fallback ? tab.select_entering_lowest_index() : tab.select_entering();
        if (!entering) {
            out.verdict = Verdict::Feasible;
            out.x = tab.current_point();
            return out;
        }
        const auto leaving = tab.select_leaving(*entering);
        if (!leaving) {
            out.verdict = Verdict::Infeasible;
            out.entering_col = *entering;
            out.farkas_ray = tab.extract_farkas_ray(*entering);
            out.farkas_y = tab.farkas_y_part(out.farkas_ray);
            out.farkas_s = tab.farkas_s_part(out.farkas_ray);
            out.x = tab.current_point();
            detail::diagnose(tab, out.x, out);
            return out;
        }
        if (out.pivots == limit) {
            out.verdict = Verdict::LimitExceeded;
            out.x = tab.current_point();
            return out;
        }

        const Rational pivot_value = tab.rows()[*leaving][*entering];
        tab.pivot(*leaving, *entering);
        ++out.pivots;
        if (opts.record_trace) {
            out.trace.push_back({*entering, *leaving, pivot_value, tab.w_row()});
        }
        if (opts.record_tableaux) out.tableaux.push_back(tab);
        if (!fallback && !seen.insert(signature()).second) {
            fallback = true;
            out.fallback_used = true;
        }
    }
}

/// Builds a tableau for the system alone and solves it.
inline SolveOutcome solve_system(const InequalitySystem& system, const SolveOptions& opts = {}) {
    DualTableau tab(system);
    return solve(tab, opts);
}

struct ThresholdStep {
    Rational t;
    SolveOutcome outcome;
};

struct ThresholdRun {
    std::vector<ThresholdStep> steps;
    DualTableau tableau; // final state, reusable for further adjustments
    std::size_t total_pivots = 0;
};

/**
 * One tableau, every threshold: activates the bound columns in ascending
 * bound order, re-solving from the previous terminal state each time.
 * Stops after the first step that is not feasible — demanding even more
 * afterwards cannot succeed.
 */
inline ThresholdRun solve_lp_thresholds(const LinearProgram& lp, const ThresholdSpec& thresholds,
                                        const SolveOptions& opts = {}) {
    DualTableau tab = build_tableau(lp, thresholds);
    ThresholdRun run{.steps = {}, .tableau = std::move(tab), .total_pivots = 0};
    const std::size_t k = thresholds.count();
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t col = k - 1 - i; // ascending bounds live right-to-left
        run.tableau.set_active_threshold(col);
        SolveOutcome outcome = solve(run.tableau, opts);
        run.total_pivots += outcome.pivots;
        const Verdict verdict = outcome.verdict;
        run.steps.push_back({thresholds.values()[i], std::move(outcome)});
        if (verdict != Verdict::Feasible) break;
    }
    return run;
}

enum class OptimizeVerdict { Optimal, Unbounded, Infeasible, LimitExceeded };

struct OptimizeResult {
    OptimizeVerdict verdict = OptimizeVerdict::Optimal;
    RationalVector best_x; // best feasible point found (empty if none)
    Rational z_upper;      // objective at best_x
    Rational z_lower;      // valid only when has_lower
    bool has_lower = false;
    std::size_t total_pivots = 0;
    /// Infeasible only: the base-system outcome with its Farkas ray.
    std::optional<SolveOutcome> certificate;
};

/**
 * Minimizes c'x over the system by driving one objective-bound column.
 * Starting from bound t = 0 the bound is doubled outward (+-2^i) until
 * an infeasible bound brackets the optimum, then bisected. Feasible
 * states are snapshotted and probes restart from the last snapshot, so
 * each probe is a warm restart. Returns when the enclosure z_upper -
 * z_lower is at most eps. If no bound up to 2^60 is infeasible the
 * objective is unbounded below; bounds below -2^60 exhaust the probe
 * budget instead.
 */
inline OptimizeResult optimize(const LinearProgram& lp, const Rational& eps,
                               const SolveOptions& opts = {}) {
    if (eps.sign() <= 0) throw ContractError("optimize: eps must be positive");
    constexpr int kMaxDoublings = 60;

    OptimizeResult res;

    // An infeasible base system stays infeasible under any bound; check
    // it first so the Farkas certificate refers to the original rows.
    {
        DualTableau base(lp.system());
        SolveOutcome outcome = solve(base, opts);
        res.total_pivots += outcome.pivots;
        if (outcome.verdict == Verdict::LimitExceeded) {
            res.verdict = OptimizeVerdict::LimitExceeded;
            return res;
        }
        if (outcome.verdict == Verdict::Infeasible) {
            res.verdict = OptimizeVerdict::Infeasible;
            res.certificate = std::move(outcome);
            return res;
        }
    }

    DualTableau tab = build_tableau(lp, ThresholdSpec({Rational(0)}));
    Rational t(0);

    // Probes the bound `target`, warm-restarting `tab` (currently at
    // bound `t`). Returns the verdict; leaves tab at `target`.
    auto probe = [&](const Rational& target) {
        tab.adjust_threshold(target - t);
        t = target;
        SolveOutcome outcome = solve(tab, opts);
        res.total_pivots += outcome.pivots;
        if (outcome.verdict == Verdict::Feasible) {
            res.best_x = outcome.x;
            res.z_upper = dot(lp.objective(), res.best_x);
        }
        return outcome.verdict;
    };

    std::optional<Rational> t_feasible;
    std::optional<Rational> t_infeasible;
    DualTableau snapshot = tab;
    Rational t_snapshot = t;

    Verdict v = probe(Rational(0));
    if (v == Verdict::LimitExceeded) {
        res.verdict = OptimizeVerdict::LimitExceeded;
        return res;
    }
    if (v == Verdict::Feasible) {
        t_feasible = t;
        snapshot = tab;
        t_snapshot = t;
        // Demand ever-better objective values until one is unreachable.
        for (int i = 0; i <= kMaxDoublings && !t_infeasible; ++i) {
            const Rational target = Rational(BigInt(1) << i);
            v = probe(target);
            if (v == Verdict::LimitExceeded) {
                res.verdict = OptimizeVerdict::LimitExceeded;
                return res;
            }
            if (v == Verdict::Feasible) {
                t_feasible = t;
                snapshot = tab;
                t_snapshot = t;
            } else {
                t_infeasible = t;
            }
        }
        if (!t_infeasible) {
            res.verdict = OptimizeVerdict::Unbounded;
            return res;
        }
    } else {
        // Even the zero bound fails: relax until some bound is reachable.
        t_infeasible = t;
        for (int i = 0; i <= kMaxDoublings && !t_feasible; ++i) {
            const Rational target = -Rational(BigInt(1) << i);
            v = probe(target);
            if (v == Verdict::LimitExceeded) {
                res.verdict = OptimizeVerdict::LimitExceeded;
                return res;
            }
            if (v == Verdict::Feasible) {
                t_feasible = t;
                snapshot = tab;
                t_snapshot = t;
            } else {
                t_infeasible = t; // tightest infeasible bound so far
            }
        }
        if (!t_feasible) {
            res.verdict = OptimizeVerdict::LimitExceeded;
            return res;
        }
    }

    res.has_lower = true;
    res.z_lower = -*t_infeasible;

    while (res.z_upper - res.z_lower > eps) {
        const Rational mid = (*t_feasible + *t_infeasible) / Rational(2);
        tab = snapshot;
        t = t_snapshot;
        v = probe(mid);
        if (v == Verdict::LimitExceeded) {
            res.verdict = OptimizeVerdict::LimitExceeded;
            return res;
        }
        if (v == Verdict::Feasible) {
            t_feasible = t;
            snapshot = tab;
            t_snapshot = t;
        } else {
            t_infeasible = t;
            res.z_lower = -mid;
        }
    }

    res.verdict = OptimizeVerdict::Optimal;
    return res;
}

struct PrimalDualResult {
    SolveOutcome outcome; // Infeasible here means: no optimum (primal
                          // infeasible or unbounded), with certificate
    RationalVector x;     // primal part, when feasible
    RationalVector y;     // dual part, when feasible
    Rational z;           // c'x == b'y, when feasible
};

/**
 * Solves primal and dual together: any feasible point of the combined
 * system has c'x == b'y, so x is optimal outright and no search over
 * objective values is needed. The price is a larger system; the reward
 * is an exact optimum in one feasibility run.
 */
inline PrimalDualResult solve_primal_dual(const LinearProgram& lp, const SolveOptions& opts = {}) {
    const std::size_t n = lp.system().num_vars();
    DualTableau tab(primal_dual_system(lp));
    PrimalDualResult res;
    res.outcome = solve(tab, opts);
    if (res.outcome.verdict == Verdict::Feasible) {
        const RationalVector& xy = res.outcome.x;
        res.x.assign(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(n));
        res.y.assign(xy.begin() + static_cast<std::ptrdiff_t>(n), xy.end());
        res.z = dot(lp.objective(), res.x);
        if (res.z != dot(lp.system().rhs(), res.y)) {
            throw ContractError("solve_primal_dual: objective values disagree");
        }
    }
    return res;
}

} // namespace duplex
