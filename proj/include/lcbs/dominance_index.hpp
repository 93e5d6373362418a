#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lcbs {

/// A point on the compressed grid; both ranks are 1-based.
struct RankedPoint {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend bool operator==(const RankedPoint&, const RankedPoint&) = default;
};

using Payload = std::uint32_t;

struct DominanceHit {
    std::uint32_t score = 0;
    std::optional<Payload> payload;
};

struct ProbeCounter {
    std::uint64_t touched = 0;
};

/// Prefix-rectangle maximum over scored points, max-update only.
///
/// Layout is a Fenwick tree over x whose every node owns a Fenwick tree over
/// the distinct y ranks that can ever land in it. The node contents are fixed
/// at construction from the point universe, so memory is
/// O(|universe| log X) and both operations cost O(log X log |universe|).
class DominanceIndex {
public:
    /// Empty index over [1..x_capacity] x [1..y_capacity]. Only points in
    /// `universe` may be raised later (duplicates are fine).
    /// Throws ContractViolation for a universe point outside the capacity.
    static DominanceIndex create(std::size_t x_capacity, std::size_t y_capacity,
                                 std::span<const RankedPoint> universe);

    /// Raises the score stored at `p` to at least `score`. The payload is
    /// replaced only on a strict improvement.
    void raise_value(RankedPoint p, std::uint32_t score, Payload payload);
    void raise_value(RankedPoint p, std::uint32_t score, Payload payload, ProbeCounter& probes);

    /// Max score among raised points with x <= x_bound and y <= y_bound,
    /// with one payload attaining it. Bound 0 is the empty range.
    DominanceHit max_in_prefix(std::size_t x_bound, std::size_t y_bound) const;
    DominanceHit max_in_prefix(std::size_t x_bound, std::size_t y_bound, ProbeCounter& probes) const;

    std::size_t x_capacity() const noexcept { return x_capacity_; }
    std::size_t y_capacity() const noexcept { return y_capacity_; }

    /// Allocated storage in elements (cells, their y keys, node offsets).
    std::size_t element_count() const noexcept { return cells_.size() + keys_.size() + offsets_.size(); }

private:
    struct Cell {
        std::uint32_t score = 0;
        Payload payload = 0;
    };

    DominanceIndex() = default;

    std::size_t x_capacity_ = 0;
    std::size_t y_capacity_ = 0;
    std::vector<std::size_t> offsets_;  // node k owns [offsets_[k], offsets_[k + 1])
    std::vector<std::uint32_t> keys_;   // sorted distinct y ranks per node
    std::vector<Cell> cells_;
};

}  // namespace lcbs
