#include <iostream>

#include "CLI11.hpp"
#include "lcbs/cli.hpp"

int main(int argc, char** argv) {
    namespace cli = lcbs::cli;

    CLI::App app{"Longest common bitonic subsequence of two integer sequences"};
    app.require_subcommand(1);

    cli::SolveOptions solve;
    std::string dump_dag;
    auto* solve_cmd = app.add_subcommand("solve", "Compute the LCBS of two sequence files");
    solve_cmd->add_option("A", solve.a, "First sequence file")->required();
    solve_cmd->add_option("B", solve.b, "Second sequence file")->required();
    solve_cmd->add_option("--engine", solve.engine, "dense | rolling | sparse | auto | oracle")
        ->check(CLI::IsMember({"dense", "rolling", "sparse", "auto", "oracle"}))
        ->capture_default_str();
    solve_cmd->add_flag("--witness", solve.witness, "Also print one optimal subsequence");
    solve_cmd->add_flag("--json", solve.json, "Machine-readable output");
    solve_cmd->add_option("--dump-dag", dump_dag, "Write the match DAG with inc/dec labels as JSON lines");

    cli::GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
    gen_cmd->add_option("--n", gen.n, "Length of A")->required();
    gen_cmd->add_option("--m", gen.m, "Length of B")->required();
    gen_cmd->add_option("--sigma", gen.sigma, "Alphabet size; symbols are drawn from [1..sigma]")->required();
    gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
    gen_cmd->add_option("--out-a", gen.out_a, "Output file for A")->required();
    gen_cmd->add_option("--out-b", gen.out_b, "Output file for B")->required();

    std::filesystem::path va, vb, vw;
    auto* verify_cmd = app.add_subcommand("verify", "Check a witness file against two sequences");
    verify_cmd->add_option("A", va)->required();
    verify_cmd->add_option("B", vb)->required();
    verify_cmd->add_option("W", vw, "Lines of 'i j' plus 'peak <h>'")->required();

    std::string sizes, sigmas, engines = "all", csv;
    cli::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time engines on generated instances");
    bench_cmd->add_option("--sizes", sizes, "Comma list of N or NxM")->required();
    bench_cmd->add_option("--sigmas", sigmas, "Comma list of alphabet sizes")->required();
    bench_cmd->add_option("--engines", engines, "Comma list of engines, or 'all'")->capture_default_str();
    bench_cmd->add_option("--reps", bench.reps, "Instances per (size, sigma)")->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
    bench_cmd->add_option("--csv", csv, "Output CSV path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kInputError;
    }

    if (*solve_cmd) {
        if (!dump_dag.empty()) solve.dump_dag = dump_dag;
        return cli::solve(solve, std::cout, std::cerr);
    }
    if (*gen_cmd) return cli::gen(gen, std::cout, std::cerr);
    if (*verify_cmd) return cli::verify(va, vb, vw, std::cout, std::cerr);
    if (*bench_cmd) {
        try {
            bench.sizes = cli::parse_sizes(sizes);
            bench.sigmas = cli::parse_sigmas(sigmas);
            bench.engines = cli::parse_engines(engines);
        } catch (const cli::InputError& e) {
            std::cerr << "error: " << e.what() << '\n';
            return cli::kInputError;
        }
        if (!csv.empty()) bench.csv = csv;
        return cli::bench(bench, std::cout, std::cerr);
    }
    return cli::kInputError;
}
