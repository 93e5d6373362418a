#include "lcbs/dense.hpp"

#include <algorithm>
#include <chrono>

namespace lcbs {

std::vector<MatchPoint> reconstruct_points(const LcisTables& parents, const MatchPoint& start, bool reverse) {
    std::vector<MatchPoint> seq;
    std::optional<MatchPoint> node = start;
    while (node) {
        if (seq.size() > parents.size()) {
            throw ContractViolation("reconstruct: parent map contains a cycle");
        }
        seq.push_back(*node);
        node = parents.parent_of(*node);
    }
    if (reverse) std::reverse(seq.begin(), seq.end());
    return seq;
}

std::vector<Symbol> reconstruct(const LcisTables& parents, const MatchPoint& start, bool reverse,
                                std::span<const Symbol> a) {
    std::vector<Symbol> out;
    for (const auto& p : reconstruct_points(parents, start, reverse)) {
        if (p.i >= a.size()) throw ContractViolation("reconstruct: row index out of range");
        out.push_back(a[p.i]);
    }
    return out;
}

LcbsOutcome dense_lcbs(const SequencePair& pair, bool want_witness) {
    const auto started = std::chrono::steady_clock::now();

    const auto inc = lcis_tables(pair.a, pair.b);
    const auto dec = reversed_tables(pair.a, pair.b);
    if (inc.size() != dec.size()) {
        throw ContractViolation("dense_lcbs: inc and dec tables disagree on the match set");
    }

    LcbsOutcome out;
    const LcisEntry* peak_inc = nullptr;
    const LcisEntry* peak_dec = nullptr;
    const auto inc_entries = inc.entries();
    const auto dec_entries = dec.entries();
    for (std::size_t k = 0; k < inc_entries.size(); ++k) {
        const auto cand = inc_entries[k].length + dec_entries[k].length - 1;
        if (cand > out.length) {
            out.length = cand;
            peak_inc = &inc_entries[k];
            peak_dec = &dec_entries[k];
        }
    }

    if (peak_inc) {
        out.peak = peak_inc->at;
        if (want_witness) {
            Witness w;
            w.points = reconstruct_points(inc, peak_inc->at, true);
            w.peak_pos = w.points.size() - 1;
            const auto falling = reconstruct_points(dec, peak_dec->at, false);
            w.points.insert(w.points.end(), falling.begin() + 1, falling.end());
            out.witness = std::move(w);
        }
    } else if (want_witness) {
        out.witness = Witness{};
    }

    out.stats.engine = EngineId::dense;
    out.stats.match_count = inc.size();
    out.stats.table_entries = inc.size();
    // Two tables plus the three column arrays of one LCIS sweep.
    out.stats.aux_elements = inc.size() + dec.size() + 3 * pair.m();
    out.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return out;
}

}  // namespace lcbs
