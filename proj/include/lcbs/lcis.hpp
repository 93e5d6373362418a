#pragma once

// Row-scan LCIS kernel with per-match length tables and parent pointers.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lcbs/core.hpp"

namespace lcbs {

inline constexpr std::ptrdiff_t kNoRow = -1;

/// Column state after some prefix of rows of `a` has been scanned.
///   dp[j]        longest common strictly increasing chain ending at b[j]
///   dp_row[j]    row that produced dp[j], kNoRow when dp[j] == 0
///   dp_parent[j] predecessor of the chain ending at (dp_row[j], j)
struct LcisRowState {
    std::vector<std::size_t> dp;
    std::vector<std::ptrdiff_t> dp_row;
    std::vector<std::optional<MatchPoint>> dp_parent;

    explicit LcisRowState(std::size_t m = 0) : dp(m, 0), dp_row(m, kNoRow), dp_parent(m) {}
};

/// One per match column of a scanned row.
struct LcisEvent {
    std::size_t column = 0;
    std::size_t length = 0;
    std::optional<MatchPoint> parent;
};

/// Scans one row of `a` (value `row_symbol`, index `row`) against `b`.
/// Emits an event for every column j with b[j] == row_symbol, reporting
/// max(best + 1, dp_before[j]); dp[j] is only overwritten on a strict
/// improvement. Throws ContractViolation if the state does not have length m.
std::vector<LcisEvent> lcis_row_update(Symbol row_symbol, std::size_t row, std::span<const Symbol> b,
                                       LcisRowState& state);

struct LcisEntry {
    MatchPoint at;
    std::size_t length = 0;
    std::optional<MatchPoint> parent;
};

/// One entry per match, sorted by (i, j).
class LcisTables {
public:
    LcisTables() = default;
    explicit LcisTables(std::vector<LcisEntry> entries) : entries_(std::move(entries)) {}

    std::span<const LcisEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const LcisEntry* find(std::size_t i, std::size_t j) const noexcept;
    std::optional<std::size_t> length_at(std::size_t i, std::size_t j) const noexcept;
    std::optional<MatchPoint> parent_of(const MatchPoint& p) const noexcept;

private:
    std::vector<LcisEntry> entries_;
};

/// inc[(i, j)]: longest common strictly increasing chain ending at match (i, j).
LcisTables lcis_tables(std::span<const Symbol> a, std::span<const Symbol> b);

/// dec[(i, j)]: longest common strictly decreasing chain starting at (i, j),
/// computed on the reversed inputs and mapped back to original coordinates.
/// Parents point forward (toward larger i and j).
LcisTables reversed_tables(std::span<const Symbol> a, std::span<const Symbol> b);

}  // namespace lcbs
