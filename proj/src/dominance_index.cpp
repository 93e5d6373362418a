#include "lcbs/dominance_index.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "lcbs/core.hpp"

namespace lcbs {

namespace {

constexpr std::size_t lowbit(std::size_t k) noexcept { return k & (~k + 1); }

}  // namespace

DominanceIndex DominanceIndex::create(std::size_t x_capacity, std::size_t y_capacity,
                                      std::span<const RankedPoint> universe) {
    DominanceIndex index;
    index.x_capacity_ = x_capacity;
    index.y_capacity_ = y_capacity;

    // (node, y) pairs, one per outer node on each point's update path.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (const auto& p : universe) {
        if (p.x == 0 || p.x > x_capacity || p.y == 0 || p.y > y_capacity) {
            throw ContractViolation("DominanceIndex::create: point (" + std::to_string(p.x) + ", " +
                                    std::to_string(p.y) + ") outside capacity");
        }
        for (std::size_t k = p.x; k <= x_capacity; k += lowbit(k)) {
            slots.emplace_back(static_cast<std::uint32_t>(k), p.y);
        }
    }
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

    index.offsets_.assign(x_capacity + 2, 0);
    for (const auto& [node, y] : slots) ++index.offsets_[node + 1];
    for (std::size_t k = 1; k < index.offsets_.size(); ++k) index.offsets_[k] += index.offsets_[k - 1];
    index.keys_.reserve(slots.size());
    for (const auto& slot : slots) index.keys_.push_back(slot.second);
    index.cells_.assign(slots.size(), Cell{});
    return index;
}

void DominanceIndex::raise_value(RankedPoint p, std::uint32_t score, Payload payload) {
    ProbeCounter ignored;
    raise_value(p, score, payload, ignored);
}

void DominanceIndex::raise_value(RankedPoint p, std::uint32_t score, Payload payload, ProbeCounter& probes) {
    if (p.x == 0 || p.x > x_capacity_ || p.y == 0 || p.y > y_capacity_) {
        throw ContractViolation("DominanceIndex::raise_value: point (" + std::to_string(p.x) + ", " +
                                std::to_string(p.y) + ") outside capacity");
    }
    if (score == 0) throw ContractViolation("DominanceIndex::raise_value: score must be positive");

    for (std::size_t k = p.x; k <= x_capacity_; k += lowbit(k)) {
        const auto first = keys_.begin() + static_cast<std::ptrdiff_t>(offsets_[k]);
        const auto last = keys_.begin() + static_cast<std::ptrdiff_t>(offsets_[k + 1]);
        const auto it = std::lower_bound(first, last, p.y);
        if (it == last || *it != p.y) {
            throw ContractViolation("DominanceIndex::raise_value: point (" + std::to_string(p.x) + ", " +
                                    std::to_string(p.y) + ") was not in the construction universe");
        }
        Cell* node = cells_.data() + offsets_[k];
        const auto size = static_cast<std::size_t>(last - first);
        for (auto t = static_cast<std::size_t>(it - first) + 1; t <= size; t += lowbit(t)) {
            ++probes.touched;
            Cell& cell = node[t - 1];
            // Every enclosing inner node already holds at least this cell's score.
            if (cell.score >= score) break;
            cell = Cell{score, payload};
        }
    }
}

DominanceHit DominanceIndex::max_in_prefix(std::size_t x_bound, std::size_t y_bound) const {
    ProbeCounter ignored;
    return max_in_prefix(x_bound, y_bound, ignored);
}

DominanceHit DominanceIndex::max_in_prefix(std::size_t x_bound, std::size_t y_bound, ProbeCounter& probes) const {
    if (x_bound > x_capacity_ || y_bound > y_capacity_) {
        throw ContractViolation("DominanceIndex::max_in_prefix: bounds (" + std::to_string(x_bound) + ", " +
                                std::to_string(y_bound) + ") outside capacity");
    }
    DominanceHit hit;
    if (y_bound == 0) return hit;
    const auto y = static_cast<std::uint32_t>(y_bound);
    for (std::size_t k = x_bound; k > 0; k -= lowbit(k)) {
        const auto first = keys_.begin() + static_cast<std::ptrdiff_t>(offsets_[k]);
        const auto last = keys_.begin() + static_cast<std::ptrdiff_t>(offsets_[k + 1]);
        const Cell* node = cells_.data() + offsets_[k];
        for (auto t = static_cast<std::size_t>(std::upper_bound(first, last, y) - first); t > 0; t -= lowbit(t)) {
            ++probes.touched;
            const Cell& cell = node[t - 1];
            if (cell.score > hit.score) {
                hit.score = cell.score;
                hit.payload = cell.payload;
            }
        }
    }
    return hit;
}

}  // namespace lcbs
