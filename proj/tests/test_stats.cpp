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

#include <random>
#include <string>

#include "duplex/model.hpp"
#include "duplex/solve.hpp"
#include "duplex/stats.hpp"
#include "duplex/tableau.hpp"

using duplex::Rational;
using duplex::StatsConfig;
using duplex::Verdict;

TEST_CASE("random_system is seed-deterministic with small integer entries") {
    std::mt19937_64 rng_a(7);
    const auto a = duplex::random_system(3, 4, rng_a);
    CHECK(a.num_vars() == 3);
    CHECK(a.num_rows() == 4);
    for (std::size_t i = 0; i < a.num_rows(); ++i) {
        for (const auto& entry : a.rows()[i]) {
            CHECK(entry.is_integer());
            CHECK(Rational(-9) <= entry);
            CHECK(entry <= Rational(9));
        }
        CHECK(a.rhs(i).is_integer());
        CHECK(Rational(-9) <= a.rhs(i));
        CHECK(a.rhs(i) <= Rational(9));
    }

    std::mt19937_64 rng_b(7);
    CHECK(a == duplex::random_system(3, 4, rng_b));

    std::mt19937_64 rng_c(8);
    CHECK(a != duplex::random_system(3, 4, rng_c));
}

TEST_CASE("verdict_name spells each verdict") {
    CHECK(std::string(duplex::verdict_name(Verdict::Feasible)) == "feasible");
    CHECK(std::string(duplex::verdict_name(Verdict::Infeasible)) == "infeasible");
    CHECK(std::string(duplex::verdict_name(Verdict::LimitExceeded)) == "limit");
}

TEST_CASE("pivot_stats rows can be regenerated from their own seed") {
    StatsConfig config;
    config.vars = 2;
    config.rows = 2;
    config.count = 3;
    config.seed = 11;
    const auto report = duplex::pivot_stats(config);

    REQUIRE(report.rows.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& row = report.rows[i];
        CHECK(row.instance == "random_" + std::to_string(i));
        CHECK(row.seed == 11 + i);
        CHECK(row.vars == 2);
        CHECK(row.rows == 2);
    }
    CHECK(report.fraction_pivots_le_m.has_value());

    // The middle row, rebuilt in isolation from its recorded seed.
    std::mt19937_64 rng(report.rows[1].seed);
    const auto sys = duplex::random_system(2, 2, rng);
    const auto out = duplex::solve_system(sys);
    CHECK(duplex::verdict_name(out.verdict) == report.rows[1].verdict);
    CHECK(out.pivots == report.rows[1].pivots);

    // Same config, same report, byte for byte.
    CHECK(duplex::emit_csv(duplex::pivot_stats(config)) == duplex::emit_csv(report));
}

TEST_CASE("an empty batch yields a header-only table") {
    StatsConfig config;
    config.count = 0;
    const auto report = duplex::pivot_stats(config);
    CHECK(report.rows.empty());
    CHECK_FALSE(report.fraction_pivots_le_m.has_value());
    CHECK(duplex::emit_csv(report) == "instance,seed,n,m,verdict,pivots\n");
}

TEST_CASE("corpus_stats reports the bundled instances") {
    const auto report = duplex::corpus_stats();
    REQUIRE(report.rows.size() == 3);

    CHECK(report.rows[0].instance == "example_3_1");
    CHECK(report.rows[0].seed == 0);
    CHECK(report.rows[0].vars == 3);
    CHECK(report.rows[0].rows == 3);
    CHECK(report.rows[0].verdict == "feasible");
    CHECK(report.rows[0].pivots == 3);

    CHECK(report.rows[1].instance == "example_3_2_system");
    CHECK(report.rows[1].vars == 4);
    CHECK(report.rows[1].rows == 3);
    CHECK(report.rows[1].verdict == "feasible");
    CHECK(report.rows[1].pivots == 3);

    // Three bound rows join the four original inequalities.
    CHECK(report.rows[2].instance == "klee_minty_4");
    CHECK(report.rows[2].vars == 4);
    CHECK(report.rows[2].rows == 7);
    CHECK(report.rows[2].verdict == "infeasible");
    CHECK(report.rows[2].pivots == 8);

    REQUIRE(report.fraction_pivots_le_m.has_value());
    CHECK(*report.fraction_pivots_le_m == Rational(2, 3));
    CHECK_FALSE(report.any_limit_exceeded);
    CHECK_FALSE(report.any_fallback);
}

TEST_CASE("emit_csv writes the corpus table verbatim") {
    CHECK(duplex::emit_csv(duplex::corpus_stats()) ==
          "instance,seed,n,m,verdict,pivots\n"
          "example_3_1,0,3,3,feasible,3\n"
          "example_3_2_system,0,4,3,feasible,3\n"
          "klee_minty_4,0,4,7,infeasible,8\n"
          "# fraction_pivots_le_m=0.6667\n");
}
