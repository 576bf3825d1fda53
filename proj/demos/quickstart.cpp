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

// Smallest useful program: build a system of inequalities, solve it
// exactly, and inspect the result. Every number is a Rational, so the
// answer is an answer, not an approximation.

#include <iostream>

#include "duplex/io.hpp"
#include "duplex/model.hpp"
#include "duplex/oracle.hpp"
#include "duplex/solve.hpp"

int main() {
    using duplex::Rational;

    //   x1 + 3*x2      >=  2
    //        x2        >=  1
    //  -x1      +  x3  >= -2     over x1, x2, x3 >= 0
    const duplex::InequalitySystem sys =
        duplex::make_system({{1, 3, 0}, {0, 1, 0}, {-1, 0, 1}}, {2, 1, -2}, 3);

    duplex::SolveOptions opts;
    opts.record_tableaux = true; // keep the intermediate states around
    duplex::DualTableau tab(sys);
    const duplex::SolveOutcome out = duplex::solve(tab, opts);

    if (out.verdict != duplex::Verdict::Feasible) {
        std::cout << "no solution\n";
        return 1;
    }
    std::cout << "x = " << duplex::format_vector(out.x) << " after " << out.pivots
              << " pivots\n\n";

    // The final tableau, rendered with exact fractions.
    std::cout << duplex::render_tableau(tab) << "\n";

    // An independent check that never trusts the solver: substitute the
    // point back into every inequality.
    const auto report = duplex::check_solution(sys, out.x);
    std::cout << (report.feasible ? "verified feasible\n" : "verification failed\n");
    return report.feasible ? 0 : 1;
}
