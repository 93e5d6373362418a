#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcbs {

using Symbol = std::int64_t;

/// Raised when a caller breaks an operation's precondition (bad lengths,
/// out-of-capacity ranks, corrupted parent maps).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SequencePair {
    std::vector<Symbol> a;
    std::vector<Symbol> b;

    std::size_t n() const noexcept { return a.size(); }
    std::size_t m() const noexcept { return b.size(); }
};

/// An index pair (i, j) with a[i] == b[j] == value.
struct MatchPoint {
    std::size_t i = 0;
    std::size_t j = 0;
    Symbol value = 0;

    friend bool operator==(const MatchPoint&, const MatchPoint&) = default;
};

/// Lexicographic (i, j) order; the topological order of the match DAG.
inline bool precedes(const MatchPoint& lhs, const MatchPoint& rhs) noexcept {
    return lhs.i != rhs.i ? lhs.i < rhs.i : lhs.j < rhs.j;
}

/// A common bitonic chain. Values rise strictly up to points[*peak_pos]
/// and fall strictly after it; peak_pos is empty iff points is empty.
struct Witness {
    std::vector<MatchPoint> points;
    std::optional<std::size_t> peak_pos;

    std::size_t size() const noexcept { return points.size(); }
    std::vector<Symbol> values() const;
};

enum class EngineId { dense, rolling, sparse, oracle };

std::string_view to_string(EngineId engine) noexcept;
std::optional<EngineId> parse_engine(std::string_view name) noexcept;

struct RunStats {
    std::size_t match_count = 0;
    EngineId engine = EngineId::dense;
    double elapsed_ms = 0.0;
    // Peak number of auxiliary elements held by the engine (array slots,
    // table entries, index cells); inputs and the returned witness excluded.
    std::size_t aux_elements = 0;
    // Dense engine only: entries in each of the inc/dec lookup tables.
    std::optional<std::size_t> table_entries;
    // Sparse engine only: dominance-index cells touched by both scans.
    std::optional<std::uint64_t> probes;
};

struct LcbsOutcome {
    std::size_t length = 0;
    std::optional<Witness> witness;
    std::optional<MatchPoint> peak;
    RunStats stats;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks every bitonic-chain rule of `w` against `pair`. Never throws;
/// each broken rule is reported as one human-readable line.
ValidationReport validate_witness(const SequencePair& pair, const Witness& w);

/// Exact number of index pairs (i, j) with a[i] == b[j].
/// Sorts a copy of `a` and binary-searches every element of `b`.
std::size_t count_matches(const SequencePair& pair);

/// Same count, but stops early and returns a value > `limit` as soon as
/// the running total exceeds it.
std::size_t count_matches_bounded(const SequencePair& pair, std::size_t limit);

}  // namespace lcbs
