#include "lcbs/rolling.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace lcbs {

namespace {

// Rows run over the longer sequence so the column arrays hold min(n, m).
struct Orientation {
    std::span<const Symbol> rows;
    std::span<const Symbol> cols;
    bool swapped = false;

    explicit Orientation(const SequencePair& pair) : rows(pair.a), cols(pair.b), swapped(pair.m() > pair.n()) {
        if (swapped) std::swap(rows, cols);
    }

    MatchPoint to_original(std::size_t row, std::size_t col) const {
        return swapped ? MatchPoint{col, row, rows[row]} : MatchPoint{row, col, rows[row]};
    }
};

struct ChainElement {
    std::size_t row = 0;
    std::size_t col = 0;
    Phase phase = Phase::up;
    std::size_t length = 0;
};

struct ForwardResult {
    std::optional<ChainElement> end;
    std::size_t matches = 0;
};

ForwardResult forward_pass(const Orientation& o, TwoPhaseRowState& state) {
    ForwardResult result;
    for (std::size_t r = 0; r < o.rows.size(); ++r) {
        const auto row = twophase_row_update(o.rows[r], r, o.cols, state);
        result.matches += row.matches;
        if (row.length == 0) continue;
        bool take = !result.end || row.length > result.end->length;
        if (!take && row.length == result.end->length && o.swapped) {
            // Row order is original-j order here; re-apply the (i, j) tie rule.
            take = row.column < result.end->col;
        }
        if (take) result.end = ChainElement{r, row.column, row.phase, row.length};
    }
    return result;
}

ChainElement predecessor(const Orientation& o, const ChainElement& cur, TwoPhaseRowState& state) {
    state.reset();
    for (std::size_t r = 0; r < cur.row; ++r) twophase_row_update(o.rows[r], r, o.cols, state);

    const Symbol v = o.cols[cur.col];
    const auto want = cur.length - 1;
    for (std::size_t j = 0; j < cur.col; ++j) {
        const Symbol s = o.cols[j];
        if (cur.phase == Phase::up) {
            if (s < v && state.up[j] == want) {
                return {static_cast<std::size_t>(state.up_row[j]), j, Phase::up, want};
            }
        } else if (s > v) {
            if (state.down2[j] == want) {
                return {static_cast<std::size_t>(state.down2_row[j]), j, Phase::down, want};
            }
            if (state.up[j] == want) {
                return {static_cast<std::size_t>(state.up_row[j]), j, Phase::up, want};
            }
        }
    }
    throw ContractViolation("rolling_witness: no predecessor found for chain element at row " +
                            std::to_string(cur.row) + ", column " + std::to_string(cur.col));
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

void TwoPhaseRowState::reset() noexcept {
    std::fill(up.begin(), up.end(), 0);
    std::fill(down2.begin(), down2.end(), 0);
    std::fill(up_row.begin(), up_row.end(), -1);
    std::fill(down2_row.begin(), down2_row.end(), -1);
}

RowSummary twophase_row_update(Symbol row_symbol, std::size_t row, std::span<const Symbol> b,
                               TwoPhaseRowState& state) {
    const auto m = b.size();
    if (state.up.size() != m || state.down2.size() != m || state.up_row.size() != m ||
        state.down2_row.size() != m) {
        throw ContractViolation("twophase_row_update: state length does not match sequence length " +
                                std::to_string(m));
    }

    RowSummary summary;
    std::size_t rising = 0;   // max up[j'] over j' < j with b[j'] < row_symbol
    std::size_t falling = 0;  // max(up, down2)[j'] over j' < j with b[j'] > row_symbol
    const auto r = static_cast<std::ptrdiff_t>(row);
    for (std::size_t j = 0; j < m; ++j) {
        const Symbol s = b[j];
        if (s == row_symbol) {
            ++summary.matches;
            const auto up_len = rising + 1;
            if (up_len > state.up[j]) {
                state.up[j] = up_len;
                state.up_row[j] = r;
            }
            if (up_len > summary.length) summary = {up_len, j, Phase::up, summary.matches};
            // A chain cannot start past its peak.
            if (falling > 0) {
                const auto down_len = falling + 1;
                if (down_len > state.down2[j]) {
                    state.down2[j] = down_len;
                    state.down2_row[j] = r;
                }
                if (down_len > summary.length) summary = {down_len, j, Phase::down, summary.matches};
            }
        } else if (s < row_symbol) {
            rising = std::max(rising, state.up[j]);
        } else {
            falling = std::max(falling, std::max(state.up[j], state.down2[j]));
        }
    }
    return summary;
}

RollingLength rolling_length(const SequencePair& pair) {
    const Orientation o(pair);
    TwoPhaseRowState state(o.cols.size());
    const auto fwd = forward_pass(o, state);
    RollingLength out;
    if (fwd.end) {
        out.length = fwd.end->length;
        out.end = o.to_original(fwd.end->row, fwd.end->col);
    }
    return out;
}

LcbsOutcome rolling_witness(const SequencePair& pair) {
    const auto t0 = std::chrono::steady_clock::now();
    const Orientation o(pair);
    TwoPhaseRowState state(o.cols.size());
    const auto fwd = forward_pass(o, state);

    LcbsOutcome out;
    out.witness = Witness{};
    if (fwd.end) {
        out.length = fwd.end->length;
        std::vector<ChainElement> chain{*fwd.end};
        while (chain.back().length > 1) chain.push_back(predecessor(o, chain.back(), state));
        std::reverse(chain.begin(), chain.end());

        const auto rising = static_cast<std::size_t>(
            std::count_if(chain.begin(), chain.end(), [](const ChainElement& e) { return e.phase == Phase::up; }));
        auto& w = *out.witness;
        for (const auto& e : chain) w.points.push_back(o.to_original(e.row, e.col));
        w.peak_pos = rising - 1;
        out.peak = w.points[*w.peak_pos];
    }

    out.stats.engine = EngineId::rolling;
    out.stats.match_count = fwd.matches;
    out.stats.aux_elements = state.element_count();
    out.stats.elapsed_ms = elapsed_since(t0);
    return out;
}

LcbsOutcome rolling_lcbs(const SequencePair& pair, bool want_witness) {
    if (want_witness) return rolling_witness(pair);

    const auto t0 = std::chrono::steady_clock::now();
    const Orientation o(pair);
    TwoPhaseRowState state(o.cols.size());
    const auto fwd = forward_pass(o, state);

    LcbsOutcome out;
    if (fwd.end) out.length = fwd.end->length;
    out.stats.engine = EngineId::rolling;
    out.stats.match_count = fwd.matches;
    out.stats.aux_elements = state.element_count();
    out.stats.elapsed_ms = elapsed_since(t0);
    return out;
}

}  // namespace lcbs
