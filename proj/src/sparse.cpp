#include "lcbs/sparse.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace lcbs {

std::size_t MatchLayout::row_of(VertexId v) const {
    if (v >= columns.size()) throw ContractViolation("MatchLayout::row_of: vertex id out of range");
    const auto it = std::upper_bound(row_offsets.begin(), row_offsets.end(), static_cast<std::size_t>(v));
    return static_cast<std::size_t>(it - row_offsets.begin()) - 1;
}

MatchLayout join_matches(const SequencePair& pair) {
    const auto n = pair.n();
    const auto m = pair.m();
    if (m > std::numeric_limits<std::uint32_t>::max()) {
        throw std::length_error("join_matches: second sequence too long for 32-bit columns");
    }

    std::vector<std::pair<Symbol, std::size_t>> sorted_a(n);
    for (std::size_t i = 0; i < n; ++i) sorted_a[i] = {pair.a[i], i};
    std::sort(sorted_a.begin(), sorted_a.end());
    auto hits = [&sorted_a](Symbol s) {
        auto lo = std::lower_bound(sorted_a.begin(), sorted_a.end(), std::pair<Symbol, std::size_t>{s, 0});
        auto hi = lo;
        while (hi != sorted_a.end() && hi->first == s) ++hi;
        return std::pair{lo, hi};
    };

    MatchLayout layout;
    layout.row_offsets.assign(n + 1, 0);
    std::size_t total = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const auto [lo, hi] = hits(pair.b[j]);
        for (auto it = lo; it != hi; ++it) ++layout.row_offsets[it->second + 1];
        total += static_cast<std::size_t>(hi - lo);
    }
    if (total >= kNoVertex) throw std::length_error("join_matches: match count exceeds 32-bit vertex ids");
    for (std::size_t i = 0; i < n; ++i) layout.row_offsets[i + 1] += layout.row_offsets[i];

    layout.columns.resize(total);
    std::vector<std::size_t> cursor(layout.row_offsets.begin(), layout.row_offsets.end() - 1);
    // Columns arrive in ascending j, so each row ends up sorted.
    for (std::size_t j = 0; j < m; ++j) {
        const auto [lo, hi] = hits(pair.b[j]);
        for (auto it = lo; it != hi; ++it) layout.columns[cursor[it->second]++] = static_cast<std::uint32_t>(j);
    }
    return layout;
}

std::vector<MatchPoint> enumerate_matches(const SequencePair& pair) {
    const auto layout = join_matches(pair);
    std::vector<MatchPoint> out;
    out.reserve(layout.size());
    for (std::size_t i = 0; i < pair.n(); ++i) {
        for (auto v = layout.row_offsets[i]; v < layout.row_offsets[i + 1]; ++v) {
            out.push_back({i, layout.columns[v], pair.a[i]});
        }
    }
    return out;
}

std::uint32_t Ranks::value_rank(Symbol s) const {
    const auto it = std::lower_bound(values.begin(), values.end(), s);
    if (it == values.end() || *it != s) throw ContractViolation("Ranks::value_rank: unknown symbol");
    return static_cast<std::uint32_t>(it - values.begin()) + 1;
}

Ranks compress(const SequencePair& pair, const MatchLayout& layout) {
    Ranks ranks;
    ranks.values.reserve(pair.n() + pair.m());
    ranks.values.insert(ranks.values.end(), pair.a.begin(), pair.a.end());
    ranks.values.insert(ranks.values.end(), pair.b.begin(), pair.b.end());
    std::sort(ranks.values.begin(), ranks.values.end());
    ranks.values.erase(std::unique(ranks.values.begin(), ranks.values.end()), ranks.values.end());

    ranks.column_rank.assign(pair.m(), 0);
    for (auto j : layout.columns) ranks.column_rank[j] = 1;
    for (auto& r : ranks.column_rank) {
        if (r != 0) r = ++ranks.max_j;
    }

    ranks.row_value_rank.resize(pair.n());
    for (std::size_t i = 0; i < pair.n(); ++i) ranks.row_value_rank[i] = ranks.value_rank(pair.a[i]);
    return ranks;
}

SparseDag::SparseDag(const SequencePair& pair, bool keep_links)
    : pair_(&pair), keep_links_(keep_links), layout_(join_matches(pair)), ranks_(compress(pair, layout_)) {
    inc_.assign(layout_.size(), 0);
    dec_.assign(layout_.size(), 0);
    if (keep_links_) {
        pred_.assign(layout_.size(), kNoVertex);
        succ_.assign(layout_.size(), kNoVertex);
    }
}

MatchPoint SparseDag::match(VertexId v) const {
    const auto i = layout_.row_of(v);
    return {i, layout_.columns[v], pair_->a[i]};
}

VertexRecord SparseDag::vertex(VertexId v) const {
    VertexRecord rec;
    rec.id = v;
    rec.match = match(v);
    rec.r_j = ranks_.column_rank[rec.match.j];
    rec.r_v = ranks_.row_value_rank[rec.match.i];
    rec.inc = inc_[v];
    rec.dec = dec_[v];
    if (keep_links_) {
        if (pred_[v] != kNoVertex) rec.pred = pred_[v];
        if (succ_[v] != kNoVertex) rec.succ = succ_[v];
    }
    return rec;
}

std::size_t SparseDag::element_count() const noexcept {
    return layout_.row_offsets.size() + layout_.columns.size() + ranks_.column_rank.size() +
           ranks_.row_value_rank.size() + ranks_.values.size() + inc_.size() + dec_.size() + pred_.size() +
           succ_.size();
}

namespace {

std::vector<RankedPoint> column_points(const SparseDag& dag, bool mirrored) {
    const auto& pair = dag.pair();
    const auto& ranks = dag.ranks();
    std::vector<RankedPoint> points;
    points.reserve(ranks.max_j);
    for (std::size_t j = 0; j < pair.m(); ++j) {
        const auto rj = ranks.column_rank[j];
        if (rj == 0) continue;
        const auto x = mirrored ? ranks.max_j - rj + 1 : rj;
        points.push_back({x, ranks.value_rank(pair.b[j])});
    }
    return points;
}

}  // namespace

DominanceIndex make_forward_index(const SparseDag& dag) {
    return DominanceIndex::create(dag.ranks().max_j, dag.ranks().values.size(), column_points(dag, false));
}

DominanceIndex make_backward_index(const SparseDag& dag) {
    return DominanceIndex::create(dag.ranks().max_j, dag.ranks().values.size(), column_points(dag, true));
}

void forward_inc(SparseDag& dag, DominanceIndex& index, ProbeCounter& probes) {
    const auto& layout = dag.layout_;
    const auto& ranks = dag.ranks_;
    for (std::size_t i = 0; i < dag.pair().n(); ++i) {
        const auto rv = ranks.row_value_rank[i];
        for (auto v = layout.row_offsets[i]; v < layout.row_offsets[i + 1]; ++v) {
            const auto rj = ranks.column_rank[layout.columns[v]];
            const auto best = index.max_in_prefix(rj - 1, rv - 1, probes);
            dag.inc_[v] = best.score + 1;
            if (dag.keep_links_ && best.payload) dag.pred_[v] = *best.payload;
            index.raise_value({rj, rv}, dag.inc_[v], static_cast<VertexId>(v), probes);
        }
    }
}

void backward_dec(SparseDag& dag, DominanceIndex& index, ProbeCounter& probes) {
    const auto& layout = dag.layout_;
    const auto& ranks = dag.ranks_;
    for (auto i = dag.pair().n(); i-- > 0;) {
        const auto rv = ranks.row_value_rank[i];
        for (auto v = layout.row_offsets[i + 1]; v-- > layout.row_offsets[i];) {
            const auto mirrored = ranks.max_j - ranks.column_rank[layout.columns[v]] + 1;
            const auto best = index.max_in_prefix(mirrored - 1, rv - 1, probes);
            dag.dec_[v] = best.score + 1;
            if (dag.keep_links_ && best.payload) dag.succ_[v] = *best.payload;
            index.raise_value({mirrored, rv}, dag.dec_[v], static_cast<VertexId>(v), probes);
        }
    }
}

PeakScan peak_scan(const SparseDag& dag) {
    PeakScan out;
    const auto inc = dag.inc();
    const auto dec = dag.dec();
    for (std::size_t v = 0; v < inc.size(); ++v) {
        const std::size_t cand = std::size_t{inc[v]} + dec[v] - 1;
        if (cand > out.length) {
            out.length = cand;
            out.peak = static_cast<VertexId>(v);
        }
    }
    return out;
}

void check_links(const SparseDag& dag) {
    if (!dag.keeps_links()) return;
    for (VertexId v = 0; v < dag.size(); ++v) {
        const auto rec = dag.vertex(v);
        if (rec.pred.has_value() != (rec.inc > 1) || rec.succ.has_value() != (rec.dec > 1)) {
            throw ContractViolation("check_links: vertex " + std::to_string(v) + " has a missing or stray link");
        }
        if (rec.pred) {
            const auto u = dag.match(*rec.pred);
            if (!(u.i < rec.match.i && u.j < rec.match.j && u.value < rec.match.value)) {
                throw ContractViolation("check_links: pred of vertex " + std::to_string(v) + " does not dominate it");
            }
            if (dag.inc()[*rec.pred] + 1 != rec.inc) {
                throw ContractViolation("check_links: pred of vertex " + std::to_string(v) + " has wrong length");
            }
        }
        if (rec.succ) {
            const auto w = dag.match(*rec.succ);
            if (!(w.i > rec.match.i && w.j > rec.match.j && w.value < rec.match.value)) {
                throw ContractViolation("check_links: succ of vertex " + std::to_string(v) + " is not dominated");
            }
            if (dag.dec()[*rec.succ] + 1 != rec.dec) {
                throw ContractViolation("check_links: succ of vertex " + std::to_string(v) + " has wrong length");
            }
        }
    }
}

Witness sparse_witness(const SparseDag& dag, VertexId peak) {
    if (!dag.keeps_links()) throw ContractViolation("sparse_witness: links were not kept");
    Witness w;
    for (std::optional<VertexId> v = peak; v; v = dag.vertex(*v).pred) {
        if (w.points.size() > dag.size()) throw ContractViolation("sparse_witness: pred chain does not end");
        w.points.push_back(dag.match(*v));
    }
    std::reverse(w.points.begin(), w.points.end());
    w.peak_pos = w.points.size() - 1;
    for (auto v = dag.vertex(peak).succ; v; v = dag.vertex(*v).succ) {
        if (w.points.size() > dag.size()) throw ContractViolation("sparse_witness: succ chain does not end");
        w.points.push_back(dag.match(*v));
    }
    return w;
}

LcbsOutcome sparse_lcbs(const SequencePair& pair, bool want_witness) {
    const auto t0 = std::chrono::steady_clock::now();

    SparseDag dag(pair, want_witness);
    ProbeCounter probes;
    std::size_t index_elements = 0;
    {
        auto index = make_forward_index(dag);
        index_elements = index.element_count();
        forward_inc(dag, index, probes);
    }
    {
        auto index = make_backward_index(dag);
        index_elements = std::max(index_elements, index.element_count());
        backward_dec(dag, index, probes);
    }
    const auto scan = peak_scan(dag);

    LcbsOutcome out;
    out.length = scan.length;
    if (scan.peak) out.peak = dag.match(*scan.peak);
    if (want_witness) {
        check_links(dag);
        out.witness = scan.peak ? sparse_witness(dag, *scan.peak) : Witness{};
    }

    out.stats.engine = EngineId::sparse;
    out.stats.match_count = dag.size();
    out.stats.aux_elements = dag.element_count() + index_elements;
    out.stats.probes = probes.touched;
    out.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace lcbs
