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

#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <variant>
#include <vector>

#include "duplex/errors.hpp"
#include "duplex/model.hpp"
#include "duplex/oracle.hpp"
#include "duplex/solve.hpp"

using duplex::InequalitySystem;
using duplex::LinearProgram;
using duplex::make_system;
using duplex::OracleVerdict;
using duplex::rat;
using duplex::Rational;
using duplex::RationalVector;

TEST_CASE("check_solution reports shortfalls and negative coordinates") {
    const auto sys = std::get<InequalitySystem>(duplex::corpus("example_3_1"));

    CHECK(duplex::check_solution(sys, {0, 1, 0}).feasible);
    CHECK(duplex::check_solution(sys, {2, 1, 0}).feasible);

    const auto at_origin = duplex::check_solution(sys, {0, 0, 0});
    CHECK_FALSE(at_origin.feasible);
    REQUIRE(at_origin.violations.size() == 2);
    CHECK(at_origin.violations[0].row == 0);
    CHECK(at_origin.violations[0].shortfall == Rational(2));
    CHECK(at_origin.violations[1].row == 1);
    CHECK(at_origin.violations[1].shortfall == Rational(1));
    CHECK(at_origin.negative_vars.empty());

    const auto below = duplex::check_solution(sys, {0, -1, 0});
    CHECK_FALSE(below.feasible);
    REQUIRE(below.negative_vars.size() == 1);
    CHECK(below.negative_vars[0].var == 1);
    CHECK(below.negative_vars[0].value == Rational(-1));

    CHECK_THROWS_AS(duplex::check_solution(sys, {0, 0}), duplex::ContractError);
}

TEST_CASE("check_farkas accepts exactly the contradiction certificates") {
    const InequalitySystem sys = make_system({{1}, {-1}}, {1, 0}, 1);

    CHECK(duplex::check_farkas(sys, {1, 1}));
    CHECK(duplex::check_farkas(sys, {2, 2})); // scaling preserves validity
    CHECK_FALSE(duplex::check_farkas(sys, {0, 0}));  // u'b = 0
    CHECK_FALSE(duplex::check_farkas(sys, {-1, 2})); // negative multiplier
    CHECK_FALSE(duplex::check_farkas(sys, {1, 0}));  // u'A = 1 > 0
    CHECK_THROWS_AS(duplex::check_farkas(sys, {1}), duplex::ContractError);

    // Bound 700 on the hard instance, as one explicit system.
    const InequalitySystem bounded = make_system({{8, 4, 2, 1},
                                                  {-1, 0, 0, 0},
                                                  {-4, -1, 0, 0},
                                                  {-8, -4, -1, 0},
                                                  {-16, -8, -4, -1}},
                                                 {700, -5, -25, -125, -625}, 4);
    CHECK(duplex::check_farkas(bounded, {rat("1/8"), 0, 0, 0, rat("1/8")}));
    CHECK_FALSE(duplex::check_farkas(bounded, {1, 0, 0, 0, 0}));
}

TEST_CASE("enumerate_vertices lists every vertex in order") {
    const auto sys = std::get<InequalitySystem>(duplex::corpus("example_3_1"));
    const auto vertices = duplex::enumerate_vertices(sys);
    REQUIRE(vertices.size() == 2);
    CHECK(vertices[0] == RationalVector{0, 1, 0});
    CHECK(vertices[1] == RationalVector{2, 1, 0});

    // A rowless system has the origin as its only vertex.
    const auto origin_only = duplex::enumerate_vertices(InequalitySystem(2));
    REQUIRE(origin_only.size() == 1);
    CHECK(origin_only[0] == RationalVector{0, 0});

    // The two-variable worst-case region is a warped square.
    const auto square = duplex::enumerate_vertices(duplex::klee_minty(2).system());
    REQUIRE(square.size() == 4);
    CHECK(square[0] == RationalVector{0, 0});
    CHECK(square[1] == RationalVector{0, 25});
    CHECK(square[2] == RationalVector{5, 0});
    CHECK(square[3] == RationalVector{5, 5});

    CHECK(duplex::enumerate_vertices(make_system({{1}, {-1}}, {1, 0}, 1)).empty());
}

TEST_CASE("every enumerated vertex is feasible") {
    for (const char* name : {"example_3_1", "example_3_2_system"}) {
        const auto sys = std::get<InequalitySystem>(duplex::corpus(name));
        const auto vertices = duplex::enumerate_vertices(sys);
        CHECK_FALSE(vertices.empty());
        for (const auto& v : vertices) CHECK(duplex::check_solution(sys, v).feasible);
    }
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto sys = duplex::klee_minty(d).system();
        for (const auto& v : duplex::enumerate_vertices(sys)) {
            CHECK(duplex::check_solution(sys, v).feasible);
        }
    }
}

TEST_CASE("the budget refuses oversized enumerations") {
    CHECK_THROWS_AS(duplex::enumerate_vertices(InequalitySystem(9)), duplex::OracleError);

    InequalitySystem wide(2);
    for (int i = 0; i < 11; ++i) wide.add_row({1, 1}, Rational(0));
    CHECK_THROWS_AS(duplex::enumerate_vertices(wide), duplex::OracleError);

    duplex::OracleBudget roomy;
    roomy.max_rows = 12;
    CHECK_NOTHROW(duplex::enumerate_vertices(wide, roomy));
}

TEST_CASE("oracle_feasible distinguishes the basic cases") {
    CHECK(duplex::oracle_feasible(std::get<InequalitySystem>(duplex::corpus("example_3_1"))));
    CHECK(duplex::oracle_feasible(InequalitySystem(3)));
    CHECK_FALSE(duplex::oracle_feasible(make_system({{1}, {-1}}, {1, 0}, 1)));
}

TEST_CASE("recession_witness_system asks for a falling feasible direction") {
    const LinearProgram down({-1}, InequalitySystem(1));
    const InequalitySystem witness = duplex::recession_witness_system(down);
    REQUIRE(witness.num_rows() == 1);
    CHECK(witness.row(0) == RationalVector{1});
    CHECK(witness.rhs(0) == Rational(1));
    CHECK(duplex::oracle_feasible(witness));

    // Bounded: x <= 5 kills the downhill direction.
    const LinearProgram capped({-1}, make_system({{-1}}, {-5}, 1));
    CHECK_FALSE(duplex::oracle_feasible(duplex::recession_witness_system(capped)));
}

TEST_CASE("oracle_min classifies and minimizes small programs") {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto res = duplex::oracle_min(duplex::klee_minty(d));
        REQUIRE(res.verdict == OracleVerdict::Optimal);
        const Rational opt(-boost::multiprecision::pow(duplex::BigInt(5), static_cast<unsigned>(d)));
        CHECK(res.value == opt);
        RationalVector vertex(d);
        vertex[d - 1] = -opt;
        CHECK(res.vertex == vertex);
    }

    const auto lp = std::get<LinearProgram>(duplex::corpus("example_3_2_lp"));
    const auto res = duplex::oracle_min(lp);
    REQUIRE(res.verdict == OracleVerdict::Optimal);
    CHECK(res.value == Rational(18));
    CHECK(res.vertex == RationalVector{0, 2, 0, 2});

    CHECK(duplex::oracle_min(LinearProgram({-1}, InequalitySystem(1))).verdict ==
          OracleVerdict::Unbounded);
    CHECK(duplex::oracle_min(LinearProgram({1}, make_system({{-1}}, {1}, 1))).verdict ==
          OracleVerdict::Infeasible);

    const auto floor3 = duplex::oracle_min(LinearProgram({1}, make_system({{1}}, {3}, 1)));
    REQUIRE(floor3.verdict == OracleVerdict::Optimal);
    CHECK(floor3.value == Rational(3));
    CHECK(floor3.vertex == RationalVector{3});
}

TEST_CASE("oracle agrees with the solver on the bundled instances") {
    const auto sys = std::get<InequalitySystem>(duplex::corpus("example_3_2_system"));
    const auto out = duplex::solve_system(sys);
    REQUIRE(out.verdict == duplex::Verdict::Feasible);
    CHECK(duplex::check_solution(sys, out.x).feasible);
    CHECK(duplex::oracle_feasible(sys));

    const auto lp = std::get<LinearProgram>(duplex::corpus("example_3_2_lp"));
    CHECK(duplex::oracle_min(lp).value == duplex::solve_primal_dual(lp).z);
}
