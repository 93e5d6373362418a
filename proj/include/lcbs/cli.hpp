#pragma once

// Command implementations behind the `lcbs` executable. Each command writes
// to the given streams and returns the process exit code, so tests can drive
// them without spawning a process.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lcbs/core.hpp"
#include "lcbs/sparse.hpp"

namespace lcbs::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,  // invalid witness or engines disagree
    kInputError = 2,   // unreadable / ill-formed input, unwritable output
    kRefused = 3,      // instance too large for the oracle engine
};

/// Unreadable or ill-formed input file.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- file formats ----------------------------------------------------------

/// Whitespace-separated signed 64-bit decimal integers, no header.
std::vector<Symbol> parse_sequence(std::string_view text);
std::vector<Symbol> read_sequence(const std::filesystem::path& path);
std::string format_sequence(const std::vector<Symbol>& seq);

/// One "i j" line per witness point plus a "peak <h>" line (omitted for an
/// empty witness). Blank lines and lines starting with '#' are skipped.
struct WitnessFile {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::optional<std::size_t> peak;
};

WitnessFile parse_witness_file(std::string_view text);
std::string format_witness_file(const Witness& w);

/// Attaches symbols to the index pairs (read from a, or b when i is out of
/// range) so that validate_witness can judge them.
Witness witness_from_file(const SequencePair& pair, const WitnessFile& file);

nlohmann::json outcome_to_json(const LcbsOutcome& outcome, const SequencePair& pair);
/// Inverse of the "witness" member written by outcome_to_json.
Witness witness_from_json(const nlohmann::json& witness);

/// One JSON object per line: {id, i, j, value, inc, dec, pred, succ},
/// followed by a final {"peak": id} line. Requires scanned links.
std::string vertices_to_jsonl(const SparseDag& dag, std::optional<VertexId> peak);

// ---- engines ---------------------------------------------------------------

/// Sparse when M * ceil(log2(M + 2))^2 < n*m / 8, rolling otherwise.
/// Counting stops as soon as M alone exceeds n*m / 8.
EngineId choose_engine(const SequencePair& pair);

/// Throws oracle::OracleRefused for oversized oracle requests.
LcbsOutcome run_engine(EngineId engine, const SequencePair& pair, bool want_witness);

// ---- commands --------------------------------------------------------------

struct SolveOptions {
    std::filesystem::path a;
    std::filesystem::path b;
    std::string engine = "auto";
    bool witness = false;
    bool json = false;
    std::optional<std::filesystem::path> dump_dag;
};

int solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

/// n + m i.i.d. uniform symbols in [1..sigma] from a seeded mt19937_64;
/// `a` is drawn first.
SequencePair generate_instance(std::size_t n, std::size_t m, std::int64_t sigma, std::uint64_t seed);

struct GenOptions {
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t sigma = 1;
    std::uint64_t seed = 0;
    std::filesystem::path out_a;
    std::filesystem::path out_b;
};

int gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

int verify(const std::filesystem::path& a, const std::filesystem::path& b, const std::filesystem::path& witness,
           std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;  // (n, m)
    std::vector<std::int64_t> sigmas;
    std::vector<EngineId> engines;
    std::size_t reps = 1;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> csv;
};

struct BenchRow {
    EngineId engine = EngineId::dense;
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t sigma = 0;
    std::size_t matches = 0;
    std::size_t length = 0;
    double elapsed_ms = 0.0;
    std::size_t aux_elements = 0;
    std::optional<std::uint64_t> probes;
};

inline constexpr std::string_view kBenchHeader = "engine,n,m,sigma,M,length,elapsed_ms,aux_elements,probes";
std::string format_bench_row(const BenchRow& row);

struct BenchReport {
    std::vector<BenchRow> rows;
    // Set when two engines disagreed; the offending instance is kept here.
    std::optional<SequencePair> mismatch;
};

/// Runs every (size, sigma, rep, engine) combination in that nesting order.
/// Stops at the first instance on which engines disagree.
BenchReport run_bench(const BenchOptions& opts);

int bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

/// "2000" -> (2000, 2000); "300x200" -> (300, 200). Comma-separated lists.
std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(std::string_view list);
std::vector<std::int64_t> parse_sigmas(std::string_view list);
/// "all" expands to dense, rolling, sparse.
std::vector<EngineId> parse_engines(std::string_view list);

}  // namespace lcbs::cli
