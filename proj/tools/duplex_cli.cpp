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

// Command-line front end: solve, thresholds, optimize, gen, check, bench.
//
// Exit codes: 0 feasible/optimal, 1 infeasible (certificate printed),
// 2 unbounded or pivot limit, 64 usage error, 65 parse error. Output is
// deterministic: identical invocations produce identical bytes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duplex/duplex.hpp"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUnboundedOrLimit = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

/// File contents, with "-" meaning stdin. Unreadable files are usage
/// errors, reported by the caller's catch.
std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Problems arrive as text or JSON; a leading '{' picks JSON.
duplex::Problem load_problem(const std::string& path) {
    const std::string content = slurp(path);
    for (char ch : content) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return duplex::parse_json(content);
        break;
    }
    return duplex::parse_text(content);
}

/// Comma-separated rationals ("500,600,700" or "1/8,0,0"). The comma is
/// the list separator, so decimals inside a list must use '.'.
duplex::RationalVector parse_list(const std::string& text) {
    duplex::RationalVector out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) out.push_back(duplex::Rational::parse(token));
    return out;
}

struct RenderFlags {
    std::string style = "fraction";
    unsigned places = 3;
    bool comma = false;

    duplex::RenderStyle to_style() const {
        return style == "decimal" ? duplex::RenderStyle::decimal(places, comma)
                                  : duplex::RenderStyle::fraction();
    }
};

void add_render_flags(CLI::App* cmd, RenderFlags& flags) {
    cmd->add_option("--style", flags.style, "Tableau number style")
        ->check(CLI::IsMember({"fraction", "decimal"}));
    cmd->add_option("--places", flags.places, "Decimal places for --style decimal");
    cmd->add_flag("--comma", flags.comma, "Decimal separator ',' instead of '.'");
}

void print_tableaux(const std::vector<duplex::DualTableau>& tabs,
                    const duplex::RenderStyle& style) {
    for (std::size_t i = 0; i < tabs.size(); ++i) {
        std::cout << "tableau " << i << ":\n" << render_tableau(tabs[i], style) << "\n";
    }
}

void print_certificate(const duplex::SolveOutcome& out) {
    std::cout << "farkas_y = " << duplex::format_vector(out.farkas_y) << "\n";
    std::cout << "farkas_s = " << duplex::format_vector(out.farkas_s) << "\n";
    std::cout << "last_point = " << duplex::format_vector(out.x) << "\n";
    for (const auto& v : out.violated_rows) {
        std::cout << "violated row " << v.row + 1 << " short by " << v.shortfall << "\n";
    }
    for (const auto& v : out.negative_vars) {
        std::cout << "negative x" << v.var + 1 << " = " << v.value << "\n";
    }
}

int run_solve(const std::string& file, bool trace, bool json, const RenderFlags& render,
              std::size_t max_pivots) {
    duplex::Problem problem = load_problem(file);
    if (std::holds_alternative<duplex::LinearProgram>(problem)) {
        std::cerr << "note: input declares an objective; solving its constraint system\n";
    }
    duplex::SolveOptions opts;
    opts.max_pivots = max_pivots;
    opts.record_trace = trace || json;
    opts.record_tableaux = trace && !json;
    duplex::DualTableau tab(duplex::system_of(problem));
    const duplex::SolveOutcome out = duplex::solve(tab, opts);

    if (json) {
        std::cout << duplex::emit_trace(out);
    } else {
        if (trace) print_tableaux(out.tableaux, render.to_style());
        switch (out.verdict) {
        case duplex::Verdict::Feasible:
            std::cout << "x = " << duplex::format_vector(out.x) << "\n";
            std::cout << "pivots = " << out.pivots << "\n";
            break;
        case duplex::Verdict::Infeasible:
            std::cout << "infeasible after " << out.pivots << " pivots\n";
            print_certificate(out);
            break;
        case duplex::Verdict::LimitExceeded:
            std::cout << "pivot limit exceeded after " << out.pivots << " pivots\n";
            break;
        }
    }
    switch (out.verdict) {
    case duplex::Verdict::Feasible: return kExitFeasible;
    case duplex::Verdict::Infeasible: return kExitInfeasible;
    default: return kExitUnboundedOrLimit;
    }
}

int run_thresholds(const std::string& file, const std::string& t_list, std::size_t max_pivots) {
    duplex::Problem problem = load_problem(file);
    const auto* lp = std::get_if<duplex::LinearProgram>(&problem);
    if (!lp) throw CLI::ValidationError("thresholds requires an objective ('min' line)");
    const duplex::ThresholdSpec spec(parse_list(t_list));

    duplex::SolveOptions opts;
    opts.max_pivots = max_pivots;
    const duplex::ThresholdRun run = duplex::solve_lp_thresholds(*lp, spec, opts);

    int exit_code = kExitFeasible;
    for (const auto& step : run.steps) {
        std::cout << "t=" << step.t << " ";
        switch (step.outcome.verdict) {
        case duplex::Verdict::Feasible:
            std::cout << "feasible x = " << duplex::format_vector(step.outcome.x);
            break;
        case duplex::Verdict::Infeasible:
            std::cout << "contradictory";
            exit_code = kExitInfeasible;
            break;
        case duplex::Verdict::LimitExceeded:
            std::cout << "pivot limit exceeded";
            exit_code = kExitUnboundedOrLimit;
            break;
        }
        std::cout << " pivots=" << step.outcome.pivots << "\n";
    }
    const auto& last = run.steps.back().outcome;
    if (last.verdict == duplex::Verdict::Infeasible) print_certificate(last);
    std::cout << "total pivots = " << run.total_pivots << "\n";
    return exit_code;
}

int run_optimize(const std::string& file, const std::string& eps_text, const std::string& mode,
                 std::size_t max_pivots) {
    duplex::Problem problem = load_problem(file);
    const auto* lp = std::get_if<duplex::LinearProgram>(&problem);
    if (!lp) throw CLI::ValidationError("optimize requires an objective ('min' line)");
    duplex::SolveOptions opts;
    opts.max_pivots = max_pivots;

    if (mode == "primal-dual") {
        const duplex::PrimalDualResult res = duplex::solve_primal_dual(*lp, opts);
        switch (res.outcome.verdict) {
        case duplex::Verdict::Feasible:
            std::cout << "z = " << res.z << "\n";
            std::cout << "x = " << duplex::format_vector(res.x) << "\n";
            std::cout << "y = " << duplex::format_vector(res.y) << "\n";
            std::cout << "pivots = " << res.outcome.pivots << "\n";
            return kExitFeasible;
        case duplex::Verdict::Infeasible:
            std::cout << "no optimum: the program is infeasible or unbounded "
                         "(combined system contradictory)\n";
            print_certificate(res.outcome);
            return kExitInfeasible;
        default:
            std::cout << "pivot limit exceeded\n";
            return kExitUnboundedOrLimit;
        }
    }

    const duplex::Rational eps = duplex::Rational::parse(eps_text);
    const duplex::OptimizeResult res = duplex::optimize(*lp, eps, opts);
    switch (res.verdict) {
    case duplex::OptimizeVerdict::Optimal:
        std::cout << "z_upper = " << res.z_upper << "\n";
        std::cout << "z_lower = " << res.z_lower << "\n";
        std::cout << "x = " << duplex::format_vector(res.best_x) << "\n";
        std::cout << "pivots = " << res.total_pivots << "\n";
        return kExitFeasible;
    case duplex::OptimizeVerdict::Unbounded:
        std::cout << "unbounded: no objective bound up to 2^60 is contradictory\n";
        if (!res.best_x.empty()) {
            std::cout << "best found x = " << duplex::format_vector(res.best_x)
                      << " with z = " << res.z_upper << "\n";
        }
        return kExitUnboundedOrLimit;
    case duplex::OptimizeVerdict::Infeasible:
        std::cout << "infeasible constraint system\n";
        if (res.certificate) print_certificate(*res.certificate);
        return kExitInfeasible;
    default:
        std::cout << "pivot limit exceeded\n";
        return kExitUnboundedOrLimit;
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot write '" + path + "'");
    out << content;
}

int run_gen_klee_minty(unsigned dim, const std::string& out_path) {
    write_output(out_path, duplex::emit_text(duplex::klee_minty(dim)));
    return kExitFeasible;
}

int run_gen_random(std::size_t vars, std::size_t cons, std::uint64_t seed,
                   const std::string& out_path) {
    std::mt19937_64 rng(seed);
    write_output(out_path, duplex::emit_text(duplex::random_system(vars, cons, rng)));
    return kExitFeasible;
}

int run_check(const std::string& file, const std::string& x_list, const std::string& u_list) {
    duplex::Problem problem = load_problem(file);
    const duplex::InequalitySystem& sys = duplex::system_of(problem);
    if (x_list.empty() == u_list.empty()) {
        throw CLI::ValidationError("pass exactly one of --x or --farkas");
    }

    if (!x_list.empty()) {
        const duplex::FeasibilityReport report =
            duplex::check_solution(sys, parse_list(x_list));
        if (report.feasible) {
            std::cout << "feasible\n";
            return kExitFeasible;
        }
        for (const auto& v : report.violations) {
            std::cout << "violated row " << v.row + 1 << " short by " << v.shortfall << "\n";
        }
        for (const auto& v : report.negative_vars) {
            std::cout << "negative x" << v.var + 1 << " = " << v.value << "\n";
        }
        return kExitInfeasible;
    }

    if (duplex::check_farkas(sys, parse_list(u_list))) {
        std::cout << "valid certificate: the system is contradictory\n";
        return kExitFeasible;
    }
    std::cout << "not a certificate\n";
    return kExitInfeasible;
}

int run_bench(std::size_t vars, std::size_t cons, std::size_t count, std::uint64_t seed,
              bool corpus_batch, const std::string& out_path) {
    duplex::StatsReport report;
    if (corpus_batch) {
        report = duplex::corpus_stats();
    } else {
        duplex::StatsConfig config;
        config.vars = vars;
        config.rows = cons;
        config.count = count;
        config.seed = seed;
        report = duplex::pivot_stats(config);
    }
    write_output(out_path, duplex::emit_csv(report));
    if (report.fraction_pivots_le_m) {
        std::cerr << "fraction_pivots_le_m = " << report.fraction_pivots_le_m->to_decimal(4)
                  << "\n";
    }
    return kExitFeasible;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact feasibility and linear-programming solver"};
    app.require_subcommand(1);

    std::string file;
    std::string t_list;
    std::string eps_text = "1/1000000";
    std::string mode = "threshold";
    std::string x_list;
    std::string u_list;
    std::string out_path;
    RenderFlags render;
    bool trace = false;
    bool json = false;
    std::size_t max_pivots = 0;
    unsigned dim = 0;
    std::size_t vars = 5;
    std::size_t cons = 5;
    std::size_t count = 0;
    std::uint64_t seed = 0;

    auto* solve_cmd = app.add_subcommand("solve", "Solve a system of inequalities");
    solve_cmd->add_option("file", file, "Problem file, '-' for stdin")->required();
    solve_cmd->add_flag("--trace", trace, "Print every tableau");
    solve_cmd->add_flag("--json", json, "Machine-readable JSONL output");
    solve_cmd->add_option("--max-pivots", max_pivots, "Pivot budget (0 = automatic)");
    add_render_flags(solve_cmd, render);

    auto* thresholds_cmd =
        app.add_subcommand("thresholds", "Solve under successive objective bounds");
    thresholds_cmd->add_option("file", file, "LP file, '-' for stdin")->required();
    thresholds_cmd->add_option("--t", t_list, "Comma-separated increasing bounds")->required();
    thresholds_cmd->add_option("--max-pivots", max_pivots, "Pivot budget (0 = automatic)");

    auto* optimize_cmd = app.add_subcommand("optimize", "Minimize the objective");
    optimize_cmd->add_option("file", file, "LP file, '-' for stdin")->required();
    optimize_cmd->add_option("--eps", eps_text, "Enclosure width for threshold mode");
    optimize_cmd->add_option("--mode", mode, "Search strategy")
        ->check(CLI::IsMember({"threshold", "primal-dual"}));
    optimize_cmd->add_option("--max-pivots", max_pivots, "Pivot budget (0 = automatic)");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a problem file");
    gen_cmd->require_subcommand(1);
    auto* gen_km = gen_cmd->add_subcommand("klee-minty", "Exponential-path LP family");
    gen_km->add_option("--dim", dim, "Dimension d >= 1")->required();
    gen_km->add_option("-o,--output", out_path, "Output file (default stdout)");
    auto* gen_rand = gen_cmd->add_subcommand("random", "Random system, entries in [-9,9]");
    gen_rand->add_option("--vars", vars, "Variable count")->required();
    gen_rand->add_option("--cons", cons, "Constraint count")->required();
    gen_rand->add_option("--seed", seed, "Generator seed")->required();
    gen_rand->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* check_cmd = app.add_subcommand("check", "Check a point or a certificate");
    check_cmd->add_option("file", file, "Problem file, '-' for stdin")->required();
    check_cmd->add_option("--x", x_list, "Candidate point, comma-separated");
    check_cmd->add_option("--farkas", u_list, "Candidate certificate, comma-separated");

    auto* bench_cmd = app.add_subcommand("bench", "Pivot-count statistics CSV");
    bench_cmd->add_option("--vars", vars, "Variables per random instance");
    bench_cmd->add_option("--cons", cons, "Constraints per random instance");
    bench_cmd->add_option("--count", count, "Number of random instances");
    bench_cmd->add_option("--seed", seed, "Base seed; instance i uses seed+i");
    bool corpus_batch = false;
    bench_cmd->add_flag("--corpus", corpus_batch, "Run the fixed named batch instead");
    bench_cmd->add_option("-o,--output", out_path, "Output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(file, trace, json, render, max_pivots);
        if (thresholds_cmd->parsed()) return run_thresholds(file, t_list, max_pivots);
        if (optimize_cmd->parsed()) return run_optimize(file, eps_text, mode, max_pivots);
        if (gen_km->parsed()) return run_gen_klee_minty(dim, out_path);
        if (gen_rand->parsed()) return run_gen_random(vars, cons, seed, out_path);
        if (check_cmd->parsed()) return run_check(file, x_list, u_list);
        if (bench_cmd->parsed()) {
            return run_bench(vars, cons, count, seed, corpus_batch, out_path);
        }
    } catch (const duplex::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const duplex::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const duplex::ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const duplex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
