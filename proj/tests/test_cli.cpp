#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "lcbs/cli.hpp"
#include "support/instances.hpp"

using namespace lcbs;
using namespace lcbs::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("lcbs_cli_test_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    fs::path file(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run_solve(const SolveOptions& opts) {
    std::ostringstream out, err;
    const int code = solve(opts, out, err);
    return {code, out.str(), err.str()};
}

Run run_verify(const fs::path& a, const fs::path& b, const fs::path& w) {
    std::ostringstream out, err;
    const int code = verify(a, b, w, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("sequence parsing") {
    CHECK(parse_sequence("2 1 3\n4\t6  5 4\n") == std::vector<Symbol>{2, 1, 3, 4, 6, 5, 4});
    CHECK(parse_sequence("") == std::vector<Symbol>{});
    CHECK(parse_sequence("  \n") == std::vector<Symbol>{});
    CHECK(parse_sequence("-9223372036854775808 9223372036854775807") ==
          std::vector<Symbol>{INT64_MIN, INT64_MAX});
    CHECK(parse_sequence("+3 -2") == std::vector<Symbol>{3, -2});
    CHECK_THROWS_AS(parse_sequence("1 x 2"), InputError);
    CHECK_THROWS_AS(parse_sequence("1.5"), InputError);
    CHECK_THROWS_AS(parse_sequence("9223372036854775808"), InputError);
    CHECK(format_sequence({1, -2, 3}) == "1 -2 3\n");
    CHECK(parse_sequence(format_sequence({5, 4})) == std::vector<Symbol>{5, 4});
}

TEST_CASE("witness file parsing") {
    const auto file = parse_witness_file("# chain\n1 0\n2 2\n\n5 3\n6 5\npeak 2\n");
    CHECK(file.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 0}, {2, 2}, {5, 3}, {6, 5}});
    CHECK(file.peak == std::optional<std::size_t>{2});
    CHECK(parse_witness_file("").pairs.empty());
    CHECK_THROWS_AS(parse_witness_file("1 0\n"), InputError);
    CHECK_THROWS_AS(parse_witness_file("1 0\npeak 1\n"), InputError);
    CHECK_THROWS_AS(parse_witness_file("1 0 3\npeak 0\n"), InputError);
    CHECK_THROWS_AS(parse_witness_file("1 0\npeak 0\npeak 0\n"), InputError);
    CHECK_THROWS_AS(parse_witness_file("a b\npeak 0\n"), InputError);

    const Witness w{{{1, 0, 1}, {2, 2, 3}}, 1};
    const auto back = witness_from_file(testing::running_example(), parse_witness_file(format_witness_file(w)));
    CHECK(back.points == w.points);
    CHECK(back.peak_pos == w.peak_pos);
}

TEST_CASE("solve through files") {
    TempDir dir;
    const auto a = dir.file("a.txt", "2 1 3 4 6 5 4\n");
    const auto b = dir.file("b.txt", "1 2 3 5 6 4\n");

    for (const auto* engine : {"dense", "rolling", "sparse", "auto", "oracle"}) {
        CAPTURE(engine);
        const auto run = run_solve({a, b, engine, true, false, std::nullopt});
        CHECK(run.code == kOk);
        CHECK(run.out.find("length 4\n") != std::string::npos);
        CHECK(run.out.find("witness ") != std::string::npos);
    }

    SUBCASE("json output carries a valid witness") {
        const auto run = run_solve({a, b, "sparse", true, true, std::nullopt});
        REQUIRE(run.code == kOk);
        const auto j = nlohmann::json::parse(run.out);
        CHECK(j.at("length") == 4);
        CHECK(j.at("engine") == "sparse");
        CHECK(j.at("matches") == 7);
        CHECK(j.contains("probes"));
        const auto w = witness_from_json(j.at("witness"));
        CHECK(validate_witness(testing::running_example(), w).ok);
        CHECK(j.at("peak").at("value") == 6);

        // Round trip through the witness file format and the verify command.
        const auto wf = dir.file("w.txt", format_witness_file(w));
        CHECK(run_verify(a, b, wf).code == kOk);
    }
    SUBCASE("json is deterministic apart from timing") {
        auto first = nlohmann::json::parse(run_solve({a, b, "dense", true, true, std::nullopt}).out);
        auto second = nlohmann::json::parse(run_solve({a, b, "dense", true, true, std::nullopt}).out);
        first.erase("elapsed_ms");
        second.erase("elapsed_ms");
        CHECK(first == second);
    }
    SUBCASE("dag dump") {
        const auto dump = dir / "dag.jsonl";
        REQUIRE(run_solve({a, b, "dense", false, false, dump}).code == kOk);
        std::istringstream lines(slurp(dump));
        std::string line;
        std::vector<nlohmann::json> rows;
        while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
        REQUIRE(rows.size() == 8);
        CHECK(rows[4].at("i") == 4);
        CHECK(rows[4].at("inc") == 3);
        CHECK(rows[4].at("dec") == 2);
        CHECK(rows.back().at("peak") == 4);
        CHECK(rows[1].at("pred").is_null());
    }
}

TEST_CASE("solve edge cases and exit codes") {
    TempDir dir;
    const auto empty = dir.file("empty.txt", "");
    const auto b = dir.file("b.txt", "1 2 3\n");
    const auto bad = dir.file("bad.txt", "1 two 3\n");

    auto run = run_solve({empty, b, "auto", true, false, std::nullopt});
    CHECK(run.code == kOk);
    CHECK(run.out.find("length 0\n") != std::string::npos);

    run = run_solve({bad, b, "dense", false, false, std::nullopt});
    CHECK(run.code == kInputError);
    CHECK(run.err.find("bad.txt") != std::string::npos);

    CHECK(run_solve({dir / "missing.txt", b, "dense", false, false, std::nullopt}).code == kInputError);
    CHECK(run_solve({b, b, "quantum", false, false, std::nullopt}).code == kInputError);

    const auto ones = dir.file("ones.txt", format_sequence(std::vector<Symbol>(30, 1)));
    run = run_solve({ones, ones, "oracle", false, false, std::nullopt});
    CHECK(run.code == kRefused);
}

TEST_CASE("auto engine selection") {
    std::vector<Symbol> perm(100000);
    std::iota(perm.begin(), perm.end(), 1);
    std::mt19937_64 rng(5);
    SequencePair p;
    std::shuffle(perm.begin(), perm.end(), rng);
    p.a = perm;
    std::shuffle(perm.begin(), perm.end(), rng);
    p.b = perm;
    CHECK(choose_engine(p) == EngineId::sparse);

    CHECK(choose_engine(generate_instance(500, 500, 2, 1)) == EngineId::rolling);
    CHECK(choose_engine(generate_instance(500, 500, 1000000, 1)) == EngineId::sparse);
    // 0 < 0 is false, so empty inputs go to the rolling engine.
    CHECK(choose_engine({{}, {}}) == EngineId::rolling);
}

TEST_CASE("gen is deterministic and seeded") {
    TempDir dir;
    auto make = [&](std::uint64_t seed, const std::string& tag) {
        GenOptions opts{50, 40, 7, seed, dir / ("a" + tag), dir / ("b" + tag)};
        std::ostringstream out, err;
        REQUIRE(gen(opts, out, err) == kOk);
        return std::make_pair(slurp(opts.out_a), slurp(opts.out_b));
    };
    const auto first = make(9, "1");
    const auto second = make(9, "2");
    const auto other = make(10, "3");
    CHECK(first == second);
    CHECK(first != other);

    const auto a = parse_sequence(first.first);
    CHECK(a.size() == 50);
    CHECK(parse_sequence(first.second).size() == 40);
    CHECK(std::all_of(a.begin(), a.end(), [](Symbol s) { return s >= 1 && s <= 7; }));

    const auto inst = generate_instance(50, 40, 7, 9);
    CHECK(format_sequence(inst.a) == first.first);
    CHECK(format_sequence(inst.b) == first.second);

    const auto ones = generate_instance(5, 3, 1, 0);
    CHECK(ones.a == std::vector<Symbol>(5, 1));
    CHECK(ones.b == std::vector<Symbol>(3, 1));

    std::ostringstream out, err;
    CHECK(gen({1, 1, 0, 0, dir / "x", dir / "y"}, out, err) == kInputError);
}

TEST_CASE("gen match density is close to 1 / sigma") {
    const std::size_t n = 2000;
    const double sigma = 1000;
    const auto p = generate_instance(n, n, 1000, 77);
    const auto matches = static_cast<double>(count_matches(p));
    const double cells = static_cast<double>(n) * n;
    const double expected = cells / sigma;
    const double sd = std::sqrt(cells * (1 / sigma) * (1 - 1 / sigma));
    CHECK(std::abs(matches - expected) <= 3 * sd);
}

TEST_CASE("verify exit codes") {
    TempDir dir;
    const auto a = dir.file("a.txt", "2 1 3 4 6 5 4\n");
    const auto b = dir.file("b.txt", "1 2 3 5 6 4\n");

    auto run = run_verify(a, b, dir.file("good.txt", "1 0\n2 2\n5 3\n6 5\npeak 2\n"));
    CHECK(run.code == kOk);
    CHECK(run.out.find("length 4") != std::string::npos);

    run = run_verify(a, b, dir.file("swapped.txt", "2 2\n1 0\n5 3\n6 5\npeak 2\n"));
    CHECK(run.code == kCheckFailed);
    CHECK(run.out.find("violation: ") != std::string::npos);

    CHECK(run_verify(a, b, dir.file("far.txt", "1 0\n2 2\npeak 5\n")).code == kInputError);
    CHECK(run_verify(a, b, dir.file("outside.txt", "1 0\n20 2\npeak 0\n")).code == kCheckFailed);
    CHECK(run_verify(a, b, dir.file("empty.txt", "")).code == kOk);
    CHECK(run_verify(a, b, dir / "missing.txt").code == kInputError);
}

TEST_CASE("bench") {
    TempDir dir;
    SUBCASE("no repetitions prints only the header") {
        std::ostringstream out, err;
        BenchOptions opts{{{20, 20}}, {4}, {EngineId::dense}, 0, 1, std::nullopt};
        CHECK(bench(opts, out, err) == kOk);
        CHECK(out.str() == std::string(kBenchHeader) + "\n");
    }
    SUBCASE("one row per size, sigma, rep and engine") {
        BenchOptions opts{parse_sizes("30,40x20"), parse_sigmas("2,9"), parse_engines("all"), 3, 4, dir / "b.csv"};
        std::ostringstream out, err;
        REQUIRE(bench(opts, out, err) == kOk);
        std::istringstream csv(slurp(dir / "b.csv"));
        std::string line;
        std::getline(csv, line);
        CHECK(line == kBenchHeader);
        std::size_t rows = 0;
        while (std::getline(csv, line)) {
            ++rows;
            CHECK(std::count(line.begin(), line.end(), ',') == 8);
        }
        CHECK(rows == 2 * 2 * 3 * 3);

        const auto report = run_bench(opts);
        CHECK_FALSE(report.mismatch);
        for (std::size_t k = 0; k < report.rows.size(); k += 3) {
            CHECK(report.rows[k].length == report.rows[k + 1].length);
            CHECK(report.rows[k].length == report.rows[k + 2].length);
            CHECK(report.rows[k].matches == report.rows[k + 2].matches);
            CHECK_FALSE(report.rows[k].probes);
            CHECK(report.rows[k + 2].probes);
        }
    }
    SUBCASE("list parsing") {
        CHECK(parse_sizes("10, 20x30") == std::vector<std::pair<std::size_t, std::size_t>>{{10, 10}, {20, 30}});
        CHECK_THROWS_AS(parse_sizes("10y"), InputError);
        CHECK_THROWS_AS(parse_sigmas("0"), InputError);
        CHECK(parse_engines("sparse,dense") == std::vector<EngineId>{EngineId::sparse, EngineId::dense});
        CHECK_THROWS_AS(parse_engines("fast"), InputError);
    }
    SUBCASE("format_bench_row") {
        BenchRow row{EngineId::sparse, 10, 12, 3, 40, 5, 1.23456, 99, 120};
        CHECK(format_bench_row(row) == "sparse,10,12,3,40,5,1.235,99,120");
        row.probes.reset();
        CHECK(format_bench_row(row) == "sparse,10,12,3,40,5,1.235,99,");
    }
}
