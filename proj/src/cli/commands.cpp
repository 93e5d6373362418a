#include <bit>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>

#include "lcbs/cli.hpp"
#include "lcbs/dense.hpp"
#include "lcbs/oracle.hpp"
#include "lcbs/rolling.hpp"

namespace lcbs::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out.flush()) throw InputError("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::vector<std::string_view> split_list(std::string_view list) {
    std::vector<std::string_view> items;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        if (comma == std::string_view::npos) comma = list.size();
        auto item = list.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) items.push_back(item);
        pos = comma + 1;
    }
    return items;
}

template <typename T>
T to_number(std::string_view token) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw InputError("invalid number '" + std::string(token) + "'");
    }
    return value;
}

void print_plain(const LcbsOutcome& outcome, const SequencePair& pair, std::ostream& out) {
    out << "engine " << to_string(outcome.stats.engine) << '\n'
        << "n " << pair.n() << '\n'
        << "m " << pair.m() << '\n'
        << "matches " << outcome.stats.match_count << '\n'
        << "length " << outcome.length << '\n';
    if (outcome.witness) {
        out << "witness";
        for (auto v : outcome.witness->values()) out << ' ' << v;
        out << "\npairs";
        for (const auto& p : outcome.witness->points) out << " (" << p.i << ',' << p.j << ')';
        out << '\n';
        if (outcome.peak && outcome.witness->peak_pos) {
            out << "peak " << *outcome.witness->peak_pos << " (" << outcome.peak->i << ',' << outcome.peak->j
                << ") value " << outcome.peak->value << '\n';
        }
    }
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t ordinal) {
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(ordinal), static_cast<std::uint32_t>(ordinal >> 32)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (std::uint64_t{words[0]} << 32) | words[1];
}

}  // namespace

EngineId choose_engine(const SequencePair& pair) {
    const auto cells = static_cast<unsigned __int128>(pair.n()) * pair.m();
    const auto limit = cells / 8;
    const auto capped = limit > SIZE_MAX ? SIZE_MAX : static_cast<std::size_t>(limit);
    const auto matches = count_matches_bounded(pair, capped);
    if (matches > capped) return EngineId::rolling;
    const auto log_term = static_cast<unsigned __int128>(std::bit_width(matches + 1));  // ceil(log2(M + 2))
    return static_cast<unsigned __int128>(matches) * log_term * log_term < limit ? EngineId::sparse
                                                                                  : EngineId::rolling;
}

LcbsOutcome run_engine(EngineId engine, const SequencePair& pair, bool want_witness) {
    switch (engine) {
        case EngineId::dense: return dense_lcbs(pair, want_witness);
        case EngineId::rolling: return rolling_lcbs(pair, want_witness);
        case EngineId::sparse: return sparse_lcbs(pair, want_witness);
        case EngineId::oracle: {
            const auto t0 = std::chrono::steady_clock::now();
            auto brute = oracle::brute_lcbs(pair);
            LcbsOutcome out;
            out.length = brute.length;
            if (brute.witness.peak_pos) out.peak = brute.witness.points[*brute.witness.peak_pos];
            if (want_witness) out.witness = std::move(brute.witness);
            out.stats.engine = EngineId::oracle;
            out.stats.match_count = count_matches(pair);
            out.stats.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            return out;
        }
    }
    throw ContractViolation("run_engine: unknown engine");
}

int solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const SequencePair pair{read_sequence(opts.a), read_sequence(opts.b)};
        EngineId engine;
        if (opts.engine == "auto") {
            engine = choose_engine(pair);
        } else if (auto parsed = parse_engine(opts.engine)) {
            engine = *parsed;
        } else {
            err << "error: unknown engine '" << opts.engine << "'\n";
            return kInputError;
        }

        const auto outcome = run_engine(engine, pair, opts.witness);
        if (opts.json) {
            out << outcome_to_json(outcome, pair).dump() << '\n';
        } else {
            print_plain(outcome, pair, out);
        }

        if (opts.dump_dag) {
            SparseDag dag(pair, true);
            ProbeCounter probes;
            auto fwd = make_forward_index(dag);
            forward_inc(dag, fwd, probes);
            auto bwd = make_backward_index(dag);
            backward_dec(dag, bwd, probes);
            write_file(*opts.dump_dag, vertices_to_jsonl(dag, peak_scan(dag).peak));
        }
        return kOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const oracle::OracleRefused& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    }
}

SequencePair generate_instance(std::size_t n, std::size_t m, std::int64_t sigma, std::uint64_t seed) {
    if (sigma < 1) throw std::invalid_argument("generate_instance: sigma must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> symbol(1, sigma);
    SequencePair pair;
    pair.a.resize(n);
    pair.b.resize(m);
    for (auto& s : pair.a) s = symbol(rng);
    for (auto& s : pair.b) s = symbol(rng);
    return pair;
}

int gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.sigma < 1) {
        err << "error: sigma must be at least 1\n";
        return kInputError;
    }
    try {
        const auto pair = generate_instance(opts.n, opts.m, opts.sigma, opts.seed);
        write_file(opts.out_a, format_sequence(pair.a));
        write_file(opts.out_b, format_sequence(pair.b));
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    out << "wrote " << opts.n << " + " << opts.m << " symbols\n";
    return kOk;
}

int verify(const std::filesystem::path& a, const std::filesystem::path& b, const std::filesystem::path& witness,
           std::ostream& out, std::ostream& err) {
    SequencePair pair;
    WitnessFile file;
    try {
        pair = SequencePair{read_sequence(a), read_sequence(b)};
        file = parse_witness_file(read_text(witness));
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    const auto report = validate_witness(pair, witness_from_file(pair, file));
    if (report.ok) {
        out << "ok: valid bitonic witness of length " << file.pairs.size() << '\n';
        return kOk;
    }
    for (const auto& v : report.violations) out << "violation: " << v << '\n';
    return kCheckFailed;
}

std::string format_bench_row(const BenchRow& row) {
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.3f", row.elapsed_ms);
    std::string line = std::string(to_string(row.engine)) + ',' + std::to_string(row.n) + ',' +
                       std::to_string(row.m) + ',' + std::to_string(row.sigma) + ',' + std::to_string(row.matches) +
                       ',' + std::to_string(row.length) + ',' + elapsed + ',' + std::to_string(row.aux_elements) + ',';
    if (row.probes) line += std::to_string(*row.probes);
    return line;
}

BenchReport run_bench(const BenchOptions& opts) {
    BenchReport report;
    std::uint64_t ordinal = 0;
    for (const auto& [n, m] : opts.sizes) {
        for (auto sigma : opts.sigmas) {
            for (std::size_t rep = 0; rep < opts.reps; ++rep) {
                const auto pair = generate_instance(n, m, sigma, instance_seed(opts.seed, ordinal++));
                std::optional<std::size_t> agreed;
                for (auto engine : opts.engines) {
                    const auto outcome = run_engine(engine, pair, false);
                    report.rows.push_back({engine, n, m, sigma, outcome.stats.match_count, outcome.length,
                                           outcome.stats.elapsed_ms, outcome.stats.aux_elements,
                                           outcome.stats.probes});
                    if (agreed && *agreed != outcome.length) {
                        report.mismatch = pair;
                        return report;
                    }
                    agreed = outcome.length;
                }
            }
        }
    }
    return report;
}

int bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    BenchReport report;
    try {
        report = run_bench(opts);
    } catch (const oracle::OracleRefused& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    }

    std::string csv = std::string(kBenchHeader) + '\n';
    for (const auto& row : report.rows) csv += format_bench_row(row) + '\n';
    try {
        if (opts.csv) {
            write_file(*opts.csv, csv);
        } else {
            out << csv;
        }
        if (report.mismatch) {
            auto stem = opts.csv ? opts.csv->string() : std::string("bench");
            write_file(stem + ".mismatch_a.txt", format_sequence(report.mismatch->a));
            write_file(stem + ".mismatch_b.txt", format_sequence(report.mismatch->b));
            err << "error: engines disagree on an instance; dumped to " << stem << ".mismatch_{a,b}.txt\n";
            return kCheckFailed;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(std::string_view list) {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (auto item : split_list(list)) {
        const auto x = item.find('x');
        if (x == std::string_view::npos) {
            const auto s = to_number<std::size_t>(item);
            sizes.emplace_back(s, s);
        } else {
            sizes.emplace_back(to_number<std::size_t>(item.substr(0, x)), to_number<std::size_t>(item.substr(x + 1)));
        }
    }
    return sizes;
}

std::vector<std::int64_t> parse_sigmas(std::string_view list) {
    std::vector<std::int64_t> sigmas;
    for (auto item : split_list(list)) {
        const auto s = to_number<std::int64_t>(item);
        if (s < 1) throw InputError("sigma must be at least 1");
        sigmas.push_back(s);
    }
    return sigmas;
}

std::vector<EngineId> parse_engines(std::string_view list) {
    std::vector<EngineId> engines;
    for (auto item : split_list(list)) {
        if (item == "all") {
            engines.insert(engines.end(), {EngineId::dense, EngineId::rolling, EngineId::sparse});
        } else if (auto e = parse_engine(item)) {
            engines.push_back(*e);
        } else {
            throw InputError("unknown engine '" + std::string(item) + "'");
        }
    }
    return engines;
}

}  // namespace lcbs::cli
