#include "lcbs/oracle.hpp"

#include <algorithm>
#include <string>

namespace lcbs::oracle {

namespace {

class ChainSearch {
public:
    ChainSearch(const SequencePair& pair, std::vector<MatchPoint> matches)
        : n_(pair.n()), m_(pair.m()), matches_(std::move(matches)) {}

    BruteResult run() {
        for (std::size_t k = 0; k < matches_.size(); ++k) {
            chain_.push_back(k);
            extend(k, true, 0);
            chain_.pop_back();
        }
        return std::move(best_);
    }

private:
    void extend(std::size_t last, bool rising, std::size_t peak) {
        if (chain_.size() > best_.length) record(rising ? chain_.size() - 1 : peak);

        const auto& tail = matches_[last];
        // No chain can use more than one match per remaining row/column.
        const auto room = std::min(n_ - 1 - tail.i, m_ - 1 - tail.j);
        if (chain_.size() + room <= best_.length) return;

        for (std::size_t q = last + 1; q < matches_.size(); ++q) {
            const auto& next = matches_[q];
            if (next.i <= tail.i || next.j <= tail.j || next.value == tail.value) continue;
            chain_.push_back(q);
            if (rising && next.value > tail.value) {
                extend(q, true, 0);
            } else if (rising) {
                extend(q, false, chain_.size() - 2);
            } else if (next.value < tail.value) {
                extend(q, false, peak);
            }
            chain_.pop_back();
        }
    }

    void record(std::size_t peak) {
        best_.length = chain_.size();
        best_.witness.points.clear();
        for (auto k : chain_) best_.witness.points.push_back(matches_[k]);
        best_.witness.peak_pos = peak;
    }

    std::size_t n_;
    std::size_t m_;
    std::vector<MatchPoint> matches_;
    std::vector<std::size_t> chain_;
    BruteResult best_;
};

}  // namespace

BruteResult brute_lcbs(const SequencePair& pair, const OracleLimits& limits) {
    std::vector<MatchPoint> matches;
    for (std::size_t i = 0; i < pair.n(); ++i) {
        for (std::size_t j = 0; j < pair.m(); ++j) {
            if (pair.a[i] == pair.b[j]) matches.push_back({i, j, pair.a[i]});
        }
    }
    const bool short_inputs = pair.n() <= limits.max_length && pair.m() <= limits.max_length;
    if (matches.size() > limits.max_matches && !short_inputs) {
        throw OracleRefused("brute_lcbs: " + std::to_string(matches.size()) + " matches on a " +
                            std::to_string(pair.n()) + "x" + std::to_string(pair.m()) +
                            " instance exceed the enumeration limits");
    }
    return ChainSearch(pair, std::move(matches)).run();
}

std::size_t brute_lbs(std::span<const Symbol> a) {
    const auto n = a.size();
    if (n > 5000) throw std::invalid_argument("brute_lbs: sequence longer than 5000");
    std::vector<std::size_t> rise(n, 1), fall(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < k; ++p) {
            if (a[p] < a[k]) rise[k] = std::max(rise[k], rise[p] + 1);
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t q = k + 1; q < n; ++q) {
            if (a[q] < a[k]) fall[k] = std::max(fall[k], fall[q] + 1);
        }
    }
    std::size_t best = 0;
    for (std::size_t k = 0; k < n; ++k) best = std::max(best, rise[k] + fall[k] - 1);
    return best;
}

DominanceHit brute_dominance(std::span<const DominanceEntry> entries, std::size_t x_bound, std::size_t y_bound) {
    DominanceHit hit;
    for (const auto& e : entries) {
        if (e.point.x <= x_bound && e.point.y <= y_bound && e.score > hit.score) {
            hit.score = e.score;
            hit.payload = e.payload;
        }
    }
    return hit;
}

}  // namespace lcbs::oracle
