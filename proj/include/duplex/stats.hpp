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
 * @file stats.hpp
 * @brief Pivot-count measurements over random and named instances.
 *
 * The interesting empirical question is how often the pivot count stays
 * at or below the number of inequalities. The harness generates seeded
 * random systems, solves each, and reports the fraction — it measures,
 * it does not assert: there is no canonical distribution to test
 * against, so the number is informational.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "duplex/model.hpp"
#include "duplex/rational.hpp"
#include "duplex/solve.hpp"

namespace duplex {

/// A random system with integer entries in [-9, 9], both coefficients
/// and right-hand sides. Small magnitudes keep exact intermediate
/// fractions small. mt19937_64 is byte-for-byte identical everywhere,
/// so a seed pins the instance on every platform.
inline InequalitySystem random_system(std::size_t num_vars, std::size_t num_rows,
                                      std::mt19937_64& rng) {
    auto entry = [&rng]() {
        return Rational(static_cast<long long>(rng() % 19) - 9);
    };
    InequalitySystem sys(num_vars);
    for (std::size_t i = 0; i < num_rows; ++i) {
        RationalVector row(num_vars);
        for (auto& v : row) v = entry();
        sys.add_row(std::move(row), entry());
    }
    return sys;
}

struct StatsConfig {
    std::size_t vars = 5;
    std::size_t rows = 5;
    std::size_t count = 0;
    std::uint64_t seed = 0;
};

struct StatsRow {
    std::string instance;
    std::uint64_t seed = 0;
    std::size_t vars = 0;
    std::size_t rows = 0; // rows of the system actually pivoted over
    std::string verdict;  // "feasible" | "infeasible" | "limit"
    std::size_t pivots = 0;
};

struct StatsReport {
    std::vector<StatsRow> rows;
    std::optional<Rational> fraction_pivots_le_m; // absent when rows empty
    bool any_limit_exceeded = false;
    bool any_fallback = false;
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Feasible: return "feasible";
    case Verdict::Infeasible: return "infeasible";
    default: return "limit";
    }
}

namespace detail {

inline void finish_report(StatsReport& report) {
    if (report.rows.empty()) return;
    std::size_t within = 0;
    for (const auto& row : report.rows) {
        if (row.pivots <= row.rows) ++within;
    }
    report.fraction_pivots_le_m =
        Rational(BigInt(within), BigInt(report.rows.size()));
}

} // namespace detail

/// Instance i is drawn from its own generator seeded with seed + i, so
/// any single row of the report can be regenerated in isolation.
inline StatsReport pivot_stats(const StatsConfig& config, const SolveOptions& opts = {}) {
    StatsReport report;
    for (std::size_t i = 0; i < config.count; ++i) {
        const std::uint64_t instance_seed = config.seed + i;
        std::mt19937_64 rng(instance_seed);
        const InequalitySystem sys = random_system(config.vars, config.rows, rng);
        DualTableau tab(sys);
        const SolveOutcome out = solve(tab, opts);
        report.any_limit_exceeded |= out.verdict == Verdict::LimitExceeded;
        report.any_fallback |= out.fallback_used;
        report.rows.push_back({"random_" + std::to_string(i), instance_seed, config.vars,
                               config.rows, verdict_name(out.verdict), out.pivots});
    }
    detail::finish_report(report);
    return report;
}

/// The named instances as a fixed batch: the two example systems plus
/// the three-bound run on the hard instance (whose row count includes
/// the three bound rows).
inline StatsReport corpus_stats(const SolveOptions& opts = {}) {
    StatsReport report;

    for (const char* name : {"example_3_1", "example_3_2_system"}) {
        const auto sys = std::get<InequalitySystem>(corpus(name));
        DualTableau tab(sys);
        const SolveOutcome out = solve(tab, opts);
        report.any_limit_exceeded |= out.verdict == Verdict::LimitExceeded;
        report.any_fallback |= out.fallback_used;
        report.rows.push_back({name, 0, sys.num_vars(), sys.num_rows(),
                               verdict_name(out.verdict), out.pivots});
    }

    const auto lp = std::get<LinearProgram>(corpus("klee_minty_4"));
    const ThresholdSpec bounds({Rational(500), Rational(600), Rational(700)});
    const ThresholdRun run = solve_lp_thresholds(lp, bounds, opts);
    const SolveOutcome& last = run.steps.back().outcome;
    report.any_limit_exceeded |= last.verdict == Verdict::LimitExceeded;
    for (const auto& step : run.steps) report.any_fallback |= step.outcome.fallback_used;
    report.rows.push_back({"klee_minty_4", 0, lp.system().num_vars(),
                           lp.system().num_rows() + bounds.count(), verdict_name(last.verdict),
                           run.total_pivots});

    detail::finish_report(report);
    return report;
}

/// Header, one line per instance, and a trailing comment with the
/// fraction (4 decimal places) unless the report is empty.
inline std::string emit_csv(const StatsReport& report) {
    std::string out = "instance,seed,n,m,verdict,pivots\n";
    for (const auto& row : report.rows) {
        out += row.instance;
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += std::to_string(row.vars);
        out += ',';
        out += std::to_string(row.rows);
        out += ',';
        out += row.verdict;
        out += ',';
        out += std::to_string(row.pivots);
        out += '\n';
    }
    if (report.fraction_pivots_le_m) {
        out += "# fraction_pivots_le_m=" + report.fraction_pivots_le_m->to_decimal(4) + "\n";
    }
    return out;
}

} // namespace duplex
