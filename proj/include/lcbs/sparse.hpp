#pragma once

// Output-sensitive engine. Every match (i, j) is a vertex; vertices are
// visited in (i, j) order, which is topological for the strict-dominance
// edges. A forward scan over a (j-rank, value-rank) dominance index yields
// inc, a backward scan with mirrored j-ranks yields dec, and the peak is the
// vertex maximising inc + dec - 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcbs/core.hpp"
#include "lcbs/dominance_index.hpp"

namespace lcbs {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = UINT32_MAX;

/// All matches in (i asc, j asc) order, stored row-compressed: the columns
/// of row i are columns[row_offsets[i] .. row_offsets[i + 1]).
/// Vertex ids are positions in `columns`.
struct MatchLayout {
    std::vector<std::size_t> row_offsets;
    std::vector<std::uint32_t> columns;

    std::size_t size() const noexcept { return columns.size(); }
    std::size_t row_of(VertexId v) const;
};

/// Sorts `a`, binary-searches every element of `b`, then buckets the hits by
/// row. O((n + m) log n + M) time. Throws std::length_error when M does not
/// fit a 32-bit vertex id.
MatchLayout join_matches(const SequencePair& pair);

/// Expanded form of join_matches.
std::vector<MatchPoint> enumerate_matches(const SequencePair& pair);

struct Ranks {
    std::vector<std::uint32_t> column_rank;   // per column of b; 0 if the column has no match
    std::vector<std::uint32_t> row_value_rank;  // per row of a
    std::vector<Symbol> values;               // sorted distinct values of a and b
    std::uint32_t max_j = 0;                  // number of distinct matched columns

    std::uint32_t value_rank(Symbol s) const;
};

/// r_J = 1 + rank of j among the distinct matched columns,
/// r_V = 1 + rank of the value among the distinct values of a and b.
Ranks compress(const SequencePair& pair, const MatchLayout& layout);

struct VertexRecord {
    VertexId id = 0;
    MatchPoint match;
    std::uint32_t r_j = 0;
    std::uint32_t r_v = 0;
    std::uint32_t inc = 0;
    std::uint32_t dec = 0;
    std::optional<VertexId> pred;
    std::optional<VertexId> succ;
};

/// Vertex store of one instance. inc/dec are zero until the scans run;
/// pred/succ are kept only when `keep_links` is set. `pair` must outlive
/// the store.
class SparseDag {
public:
    SparseDag(const SequencePair& pair, bool keep_links);

    const SequencePair& pair() const noexcept { return *pair_; }
    const MatchLayout& layout() const noexcept { return layout_; }
    const Ranks& ranks() const noexcept { return ranks_; }
    bool keeps_links() const noexcept { return keep_links_; }

    std::size_t size() const noexcept { return layout_.size(); }
    MatchPoint match(VertexId v) const;
    VertexRecord vertex(VertexId v) const;

    std::span<const std::uint32_t> inc() const noexcept { return inc_; }
    std::span<const std::uint32_t> dec() const noexcept { return dec_; }

    /// Elements held by the store (layout, ranks, per-vertex arrays).
    std::size_t element_count() const noexcept;

private:
    friend void forward_inc(SparseDag&, DominanceIndex&, ProbeCounter&);
    friend void backward_dec(SparseDag&, DominanceIndex&, ProbeCounter&);

    const SequencePair* pair_;
    bool keep_links_;
    MatchLayout layout_;
    Ranks ranks_;
    std::vector<std::uint32_t> inc_;
    std::vector<std::uint32_t> dec_;
    std::vector<VertexId> pred_;
    std::vector<VertexId> succ_;
};

/// Index keyed by (r_J, r_V) over every matched column.
DominanceIndex make_forward_index(const SparseDag& dag);
/// Index keyed by (MAX_J - r_J + 1, r_V) over every matched column.
DominanceIndex make_backward_index(const SparseDag& dag);

/// inc[v] = 1 + max inc[u] over u with i_u < i_v, j_u < j_v, value_u < value_v.
void forward_inc(SparseDag& dag, DominanceIndex& index, ProbeCounter& probes);
/// dec[v] = 1 + max dec[w] over w with i_w > i_v, j_w > j_v, value_w < value_v.
void backward_dec(SparseDag& dag, DominanceIndex& index, ProbeCounter& probes);

struct PeakScan {
    std::size_t length = 0;
    std::optional<VertexId> peak;
};

/// max inc + dec - 1; ties go to the smallest (i, j).
PeakScan peak_scan(const SparseDag& dag);

/// Throws ContractViolation unless exactly the vertices with inc (dec) above
/// 1 carry a pred (succ) link, each joining strictly dominating vertices with
/// the required value order and a length one shorter. No-op without links.
void check_links(const SparseDag& dag);

/// Rising half (pred chain, reversed) followed by the falling half (succ
/// chain without the repeated peak).
Witness sparse_witness(const SparseDag& dag, VertexId peak);

LcbsOutcome sparse_lcbs(const SequencePair& pair, bool want_witness);

}  // namespace lcbs
