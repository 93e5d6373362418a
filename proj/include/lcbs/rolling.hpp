#pragma once

// Linear-extra-space engine. A single forward pass over the rows keeps two
// phase arrays per column: `up` (still rising) and `down2` (past the peak).
// Any common bitonic chain read left to right is an up-phase prefix followed
// by a down2-phase suffix, so max over both arrays is the optimum.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lcbs/core.hpp"

namespace lcbs {

enum class Phase { up, down };

struct TwoPhaseRowState {
    std::vector<std::size_t> up;
    std::vector<std::size_t> down2;
    std::vector<std::ptrdiff_t> up_row;
    std::vector<std::ptrdiff_t> down2_row;

    explicit TwoPhaseRowState(std::size_t m = 0) : up(m, 0), down2(m, 0), up_row(m, -1), down2_row(m, -1) {}

    void reset() noexcept;
    std::size_t element_count() const noexcept {
        return up.size() + down2.size() + up_row.size() + down2_row.size();
    }
};

/// Best chain end produced while scanning one row: first column (and the
/// up phase on a tie) attaining the row maximum. `matches` counts the
/// columns equal to the row symbol.
struct RowSummary {
    std::size_t length = 0;
    std::size_t column = 0;
    Phase phase = Phase::up;
    std::size_t matches = 0;
};

/// Processes row `row` (value `row_symbol`) of the longer sequence against
/// `b`. Both running maxima are accumulated during one left-to-right scan;
/// columns whose symbol differs from `row_symbol` are read but never written
/// in this row, so every value read comes from earlier rows.
/// Throws ContractViolation on a state/sequence length mismatch.
RowSummary twophase_row_update(Symbol row_symbol, std::size_t row, std::span<const Symbol> b,
                            TwoPhaseRowState& state);

struct RollingLength {
    std::size_t length = 0;
    // Last element of the optimum chain (not the peak); first in (i, j)
    // order among ends of maximal chains.
    std::optional<MatchPoint> end;
};

RollingLength rolling_length(const SequencePair& pair);

/// Length plus a witness recovered by backtracking with prefix recomputation:
/// O(length * n * m) time, four arrays of min(n, m) elements.
LcbsOutcome rolling_witness(const SequencePair& pair);

/// Length-only run with stats filled in.
LcbsOutcome rolling_lcbs(const SequencePair& pair, bool want_witness);

}  // namespace lcbs
