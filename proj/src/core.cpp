#include "lcbs/core.hpp"

#include <algorithm>
#include <limits>

namespace lcbs {

std::vector<Symbol> Witness::values() const {
    std::vector<Symbol> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.value);
    return out;
}

std::string_view to_string(EngineId engine) noexcept {
    switch (engine) {
        case EngineId::dense: return "dense";
        case EngineId::rolling: return "rolling";
        case EngineId::sparse: return "sparse";
        case EngineId::oracle: return "oracle";
    }
    return "unknown";
}

std::optional<EngineId> parse_engine(std::string_view name) noexcept {
    for (auto e : {EngineId::dense, EngineId::rolling, EngineId::sparse, EngineId::oracle}) {
        if (to_string(e) == name) return e;
    }
    return std::nullopt;
}

ValidationReport validate_witness(const SequencePair& pair, const Witness& w) {
    ValidationReport report;
    auto fail = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const auto len = w.points.size();
    if (len == 0) {
        if (w.peak_pos) fail("peak position given for an empty witness");
        return report;
    }
    if (!w.peak_pos) {
        fail("peak position missing");
    } else if (*w.peak_pos >= len) {
        fail("peak position " + std::to_string(*w.peak_pos) + " out of range");
    }

    for (std::size_t k = 0; k < len; ++k) {
        const auto& p = w.points[k];
        const auto at = " at position " + std::to_string(k);
        if (p.i >= pair.n()) fail("i out of range" + at);
        if (p.j >= pair.m()) fail("j out of range" + at);
        if (p.i < pair.n() && pair.a[p.i] != p.value) fail("a[i] differs from value" + at);
        if (p.j < pair.m() && pair.b[p.j] != p.value) fail("b[j] differs from value" + at);
    }

    for (std::size_t k = 1; k < len; ++k) {
        const auto& prev = w.points[k - 1];
        const auto& cur = w.points[k];
        const auto at = " at position " + std::to_string(k);
        if (cur.i <= prev.i) fail("i not strictly increasing" + at);
        if (cur.j <= prev.j) fail("j not strictly increasing" + at);
        if (!w.peak_pos || *w.peak_pos >= len) continue;
        if (k <= *w.peak_pos) {
            if (cur.value <= prev.value) fail("values not strictly rising before peak" + at);
        } else {
            if (cur.value >= prev.value) fail("values not strictly falling after peak" + at);
        }
    }
    return report;
}

std::size_t count_matches_bounded(const SequencePair& pair, std::size_t limit) {
    std::vector<Symbol> sorted_a = pair.a;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::size_t total = 0;
    for (Symbol s : pair.b) {
        const auto [lo, hi] = std::equal_range(sorted_a.begin(), sorted_a.end(), s);
        total += static_cast<std::size_t>(hi - lo);
        if (total > limit) return total;
    }
    return total;
}

std::size_t count_matches(const SequencePair& pair) {
    return count_matches_bounded(pair, std::numeric_limits<std::size_t>::max());
}

}  // namespace lcbs
