#include "lcbs/lcis.hpp"

#include <algorithm>
#include <string>

namespace lcbs {

std::vector<LcisEvent> lcis_row_update(Symbol row_symbol, std::size_t row, std::span<const Symbol> b,
                                       LcisRowState& state) {
    const auto m = b.size();
    if (state.dp.size() != m || state.dp_row.size() != m || state.dp_parent.size() != m) {
        throw ContractViolation("lcis_row_update: state length " + std::to_string(state.dp.size()) +
                                " does not match sequence length " + std::to_string(m));
    }

    std::vector<LcisEvent> events;
    std::size_t best = 0;
    std::ptrdiff_t best_j = -1;
    for (std::size_t j = 0; j < m; ++j) {
        if (b[j] == row_symbol) {
            const std::size_t fresh = best + 1;
            const std::size_t before = state.dp[j];
            LcisEvent ev{j, fresh, std::nullopt};
            if (fresh >= before) {
                if (best_j >= 0) {
                    const auto pj = static_cast<std::size_t>(best_j);
                    ev.parent = MatchPoint{static_cast<std::size_t>(state.dp_row[pj]), pj, b[pj]};
                }
                if (fresh > before) {
                    state.dp[j] = fresh;
                    state.dp_row[j] = static_cast<std::ptrdiff_t>(row);
                    state.dp_parent[j] = ev.parent;
                }
            } else {
                // The chain already ending in this column is re-terminated at
                // this row: same column, same value, smaller row.
                ev.length = before;
                ev.parent = state.dp_parent[j];
            }
            events.push_back(ev);
        } else if (b[j] < row_symbol && state.dp[j] > best) {
            best = state.dp[j];
            best_j = static_cast<std::ptrdiff_t>(j);
        }
    }
    return events;
}

const LcisEntry* LcisTables::find(std::size_t i, std::size_t j) const noexcept {
    const MatchPoint key{i, j, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const LcisEntry& e, const MatchPoint& k) { return precedes(e.at, k); });
    if (it == entries_.end() || it->at.i != i || it->at.j != j) return nullptr;
    return &*it;
}

std::optional<std::size_t> LcisTables::length_at(std::size_t i, std::size_t j) const noexcept {
    if (const auto* e = find(i, j)) return e->length;
    return std::nullopt;
}

std::optional<MatchPoint> LcisTables::parent_of(const MatchPoint& p) const noexcept {
    if (const auto* e = find(p.i, p.j)) return e->parent;
    return std::nullopt;
}

LcisTables lcis_tables(std::span<const Symbol> a, std::span<const Symbol> b) {
    LcisRowState state(b.size());
    std::vector<LcisEntry> entries;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (const auto& ev : lcis_row_update(a[i], i, b, state)) {
            entries.push_back({MatchPoint{i, ev.column, a[i]}, ev.length, ev.parent});
        }
    }
    return LcisTables(std::move(entries));
}

LcisTables reversed_tables(std::span<const Symbol> a, std::span<const Symbol> b) {
    const std::vector<Symbol> ar(a.rbegin(), a.rend());
    const std::vector<Symbol> br(b.rbegin(), b.rend());
    const auto n = a.size();
    const auto m = b.size();
    auto flip = [n, m](const MatchPoint& p) { return MatchPoint{n - 1 - p.i, m - 1 - p.j, p.value}; };

    const auto reversed = lcis_tables(ar, br);
    std::vector<LcisEntry> entries;
    entries.reserve(reversed.size());
    // Reversed (i_r, j_r) order is descending original order.
    for (auto it = reversed.entries().rbegin(); it != reversed.entries().rend(); ++it) {
        LcisEntry e{flip(it->at), it->length, std::nullopt};
        if (it->parent) e.parent = flip(*it->parent);
        entries.push_back(e);
    }
    return LcisTables(std::move(entries));
}

}  // namespace lcbs
