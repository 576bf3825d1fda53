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

// Minimization by moving a bound: ask for objective value at most -t
// for a few increasing t, reusing one tableau across the whole sweep. The
// first contradictory bound comes with a certificate, so both sides of
// the answer are checkable. Then the same idea, automated: optimize()
// tightens the bound until the optimum is enclosed within eps.

#include <iostream>

#include "duplex/linalg.hpp"
#include "duplex/model.hpp"
#include "duplex/oracle.hpp"
#include "duplex/solve.hpp"

int main() {
    using duplex::Rational;

    // A four-dimensional instance whose optimum is -625, reached only
    // after visiting many vertices — a stress test for pivot rules.
    const duplex::LinearProgram lp = duplex::klee_minty(4);

    // Bound t demands -c'x >= t, i.e. objective value at most -t: first
    // -500, then -600, then -700. The first two succeed; the optimum is
    // -625, so -700 is out of reach and the last bound is contradictory.
    const duplex::ThresholdSpec bounds({Rational(500), Rational(600), Rational(700)});
    const duplex::ThresholdRun run = duplex::solve_lp_thresholds(lp, bounds);
    for (const auto& step : run.steps) {
        std::cout << "bound " << step.t << ": ";
        if (step.outcome.verdict == duplex::Verdict::Feasible) {
            std::cout << "reached by x = " << duplex::format_vector(step.outcome.x);
        } else {
            std::cout << "contradictory";
        }
        std::cout << " (" << step.outcome.pivots
                  << (step.outcome.pivots == 1 ? " pivot)\n" : " pivots)\n");
    }

    // The certificate from the failed bound is checkable on its own.
    const auto& last = run.steps.back().outcome;
    if (last.verdict == duplex::Verdict::Infeasible) {
        const bool valid = duplex::check_farkas(run.tableau.extended_system(), last.farkas_y);
        std::cout << "certificate " << (valid ? "verified" : "INVALID") << "\n";
    }

    // Automatic enclosure: doubling outward, then bisecting inward.
    const duplex::OptimizeResult best = duplex::optimize(lp, Rational(1));
    std::cout << "\noptimum in [" << best.z_lower << ", " << best.z_upper << "] at x = "
              << duplex::format_vector(best.best_x) << " (" << best.total_pivots
              << " pivots)\n";
    return 0;
}
