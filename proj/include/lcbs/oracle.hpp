#pragma once

// Brute-force references. Slow on purpose; correctness only.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lcbs/core.hpp"
#include "lcbs/dominance_index.hpp"

namespace lcbs::oracle {

/// The instance is too large for exhaustive enumeration.
class OracleRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    std::size_t max_matches = 22;
    std::size_t max_length = 12;  // applies to both n and m
};

struct BruteResult {
    std::size_t length = 0;
    Witness witness;
};

/// Depth-first enumeration over chains of matches in (i, j) order, tracking
/// whether the chain is still rising. Refuses (OracleRefused) unless
/// M <= limits.max_matches or both n, m <= limits.max_length.
BruteResult brute_lcbs(const SequencePair& pair, const OracleLimits& limits = {});

/// Longest strictly bitonic subsequence of one sequence, quadratic DP.
/// Throws std::invalid_argument for n > 5000.
std::size_t brute_lbs(std::span<const Symbol> a);

struct DominanceEntry {
    RankedPoint point;
    std::uint32_t score = 0;
    Payload payload = 0;
};

/// Linear scan; ties go to the earliest entry.
DominanceHit brute_dominance(std::span<const DominanceEntry> entries, std::size_t x_bound, std::size_t y_bound);

}  // namespace lcbs::oracle
