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

// Known-good tableau states for the bundled instances, derived by hand
// with exact arithmetic and frozen here as test expectations. Each
// sequence starts at the freshly built tableau and advances one pivot
// per state, so tests can diff the full run, not just the endpoint.

#include <vector>

#include "duplex/linalg.hpp"
#include "duplex/rational.hpp"

namespace frozen {

using duplex::rat;
using duplex::Rational;
using duplex::RationalVector;

struct TableauState {
    RationalVector w;
    std::vector<RationalVector> rows;
};

// corpus "example_3_1": three variables, three rows, solved in three
// pivots at (row 1, col 1), (row 2, col 2), (row 1, col 4) — 1-based.
inline std::vector<TableauState> example_3_1_states() {
    return {
        {{2, 1, -2, 0, 0, 0},
         {{1, 0, -1, 1, 0, 0}, {3, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}},
        {{0, 1, 0, -2, 0, 0},
         {{1, 0, -1, 1, 0, 0}, {0, 1, 3, -3, 1, 0}, {0, 0, 1, 0, 0, 1}}},
        {{0, 0, -3, 1, -1, 0},
         {{1, 0, -1, 1, 0, 0}, {0, 1, 3, -3, 1, 0}, {0, 0, 1, 0, 0, 1}}},
        {{-1, 0, -2, 0, -1, 0},
         {{1, 0, -1, 1, 0, 0}, {3, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}}},
    };
}

// corpus "example_3_2_system": four variables, three rows, solved in
// three pivots at (row 3, col 3), (row 4, col 1), (row 2, col 6).
inline std::vector<TableauState> example_3_2_states() {
    return {
        {{0, 0, 18, 0, 0, 0, 0},
         {{2, rat("-1/3"), -2, 1, 0, 0, 0},
          {9, -1, -3, 0, 1, 0, 0},
          {-1, rat("1/3"), 1, 0, 0, 1, 0},
          {-9, 2, 12, 0, 0, 0, 1}}},
        {{18, -6, 0, 0, 0, -18, 0},
         {{0, rat("1/3"), 0, 1, 0, 2, 0},
          {6, 0, 0, 0, 1, 3, 0},
          {-1, rat("1/3"), 1, 0, 0, 1, 0},
          {3, -2, 0, 0, 0, -12, 1}}},
        {{0, 6, 0, 0, 0, 54, -6},
         {{0, rat("1/3"), 0, 1, 0, 2, 0},
          {0, 4, 0, 0, 1, 27, -2},
          {0, rat("-1/3"), 1, 0, 0, -3, rat("1/3")},
          {1, rat("-2/3"), 0, 0, 0, -4, rat("1/3")}}},
        {{0, -2, 0, 0, -2, 0, -2},
         {{0, rat("1/27"), 0, 1, rat("-2/27"), 0, rat("4/27")},
          {0, rat("4/27"), 0, 0, rat("1/27"), 1, rat("-2/27")},
          {0, rat("1/9"), 1, 0, rat("1/9"), 0, rat("1/9")},
          {1, rat("-2/27"), 0, 0, rat("4/27"), 0, rat("1/27")}}},
    };
}

// corpus "klee_minty_4" with objective bounds 500 < 600 < 700 carried as
// three extra columns, activated in ascending order. Eight pivots:
// four to satisfy the 500 bound, three more for 600, and a final pivot
// that exposes the contradiction at 700. States 0-8 cover the initial
// tableau plus each pivot.
inline std::vector<TableauState> klee_minty_run_states() {
    return {
        // state 0: as built
        {{700, 600, 500, -5, -25, -125, -625, 0, 0, 0, 0},
         {{8, 8, 8, -1, -4, -8, -16, 1, 0, 0, 0},
          {4, 4, 4, 0, -1, -4, -8, 0, 1, 0, 0},
          {2, 2, 2, 0, 0, -1, -4, 0, 0, 1, 0},
          {1, 1, 1, 0, 0, 0, -1, 0, 0, 0, 1}}},
        // state 1: pivot (row 1, col 3)
        {{200, 100, 0, rat("115/2"), 225, 375, 375, rat("-125/2"), 0, 0, 0},
         {{1, 1, 1, rat("-1/8"), rat("-1/2"), -1, -2, rat("1/8"), 0, 0, 0},
          {0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1, 0, 0},
          {0, 0, 0, rat("1/4"), 1, 1, 0, rat("-1/4"), 0, 1, 0},
          {0, 0, 0, rat("1/8"), rat("1/2"), 1, 1, rat("-1/8"), 0, 0, 1}}},
        // state 2: pivot (row 4, col 7)
        {{200, 100, 0, rat("85/8"), rat("75/2"), 0, 0, rat("-125/8"), 0, 0, -375},
         {{1, 1, 1, rat("1/8"), rat("1/2"), 1, 0, rat("-1/8"), 0, 0, 2},
          {0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1, 0, 0},
          {0, 0, 0, rat("1/4"), 1, 1, 0, rat("-1/4"), 0, 1, 0},
          {0, 0, 0, rat("1/8"), rat("1/2"), 1, 1, rat("-1/8"), 0, 0, 1}}},
        // state 3: pivot (row 3, col 5)
        {{200, 100, 0, rat("5/4"), 0, rat("-75/2"), 0, rat("-25/4"), 0, rat("-75/2"), -375},
         {{1, 1, 1, 0, 0, rat("1/2"), 0, 0, 0, rat("-1/2"), 2},
          {0, 0, 0, rat("1/4"), 0, -1, 0, rat("-1/4"), 1, -1, 0},
          {0, 0, 0, rat("1/4"), 1, 1, 0, rat("-1/4"), 0, 1, 0},
          {0, 0, 0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1}}},
        // state 4: pivot (row 2, col 4) — bound 500 satisfied
        {{200, 100, 0, 0, 0, rat("-65/2"), 0, -5, -5, rat("-65/2"), -375},
         {{1, 1, 1, 0, 0, rat("1/2"), 0, 0, 0, rat("-1/2"), 2},
          {0, 0, 0, 1, 0, -4, 0, -1, 4, -4, 0},
          {0, 0, 0, 0, 1, 2, 0, 0, -1, 2, 0},
          {0, 0, 0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1}}},
        // state 5: pivot (row 1, col 2) after activating the 600 bound
        {{100, 0, -100, 0, 0, rat("-165/2"), 0, -5, -5, rat("35/2"), -575},
         {{1, 1, 1, 0, 0, rat("1/2"), 0, 0, 0, rat("-1/2"), 2},
          {0, 0, 0, 1, 0, -4, 0, -1, 4, -4, 0},
          {0, 0, 0, 0, 1, 2, 0, 0, -1, 2, 0},
          {0, 0, 0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1}}},
        // state 6: pivot (row 3, col 10)
        {{100, 0, -100, 0, rat("-35/4"), -100, 0, -5, rat("15/4"), 0, -575},
         {{1, 1, 1, 0, rat("1/4"), 1, 0, 0, rat("-1/4"), 0, 2},
          {0, 0, 0, 1, 2, 0, 0, -1, 2, 0, 0},
          {0, 0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1, 0},
          {0, 0, 0, 0, rat("1/4"), 1, 1, 0, rat("-1/4"), 0, 1}}},
        // state 7: pivot (row 2, col 9) — bound 600 satisfied
        {{100, 0, -100, rat("-15/8"), rat("-25/2"), -100, 0, rat("-25/8"), 0, 0, -575},
         {{1, 1, 1, rat("1/8"), rat("1/2"), 1, 0, rat("-1/8"), 0, 0, 2},
          {0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1, 0, 0},
          {0, 0, 0, rat("1/4"), 1, 1, 0, rat("-1/4"), 0, 1, 0},
          {0, 0, 0, rat("1/8"), rat("1/2"), 1, 1, rat("-1/8"), 0, 0, 1}}},
        // state 8: pivot (row 1, col 1) after activating the 700 bound;
        // column 8 then certifies the contradiction.
        {{0, -100, -200, rat("-115/8"), rat("-125/2"), -200, 0, rat("75/8"), 0, 0, -775},
         {{1, 1, 1, rat("1/8"), rat("1/2"), 1, 0, rat("-1/8"), 0, 0, 2},
          {0, 0, 0, rat("1/2"), 1, 0, 0, rat("-1/2"), 1, 0, 0},
          {0, 0, 0, rat("1/4"), 1, 1, 0, rat("-1/4"), 0, 1, 0},
          {0, 0, 0, rat("1/8"), rat("1/2"), 1, 1, rat("-1/8"), 0, 0, 1}}},
    };
}

} // namespace frozen
