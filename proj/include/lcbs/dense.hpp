#pragma once

// Baseline engine: forward and reversed LCIS tables, peak selection by
// inc + dec - 1, witness from the two parent chains.

#include <cstddef>
#include <vector>

#include "lcbs/core.hpp"
#include "lcbs/lcis.hpp"

namespace lcbs {

/// Walks parent links starting at `start` until a chain head is reached.
/// With `reverse` set the result runs from the head to `start`.
/// Throws ContractViolation when the walk does not terminate.
std::vector<MatchPoint> reconstruct_points(const LcisTables& parents, const MatchPoint& start, bool reverse);

/// Symbol form of reconstruct_points, read from `a`.
std::vector<Symbol> reconstruct(const LcisTables& parents, const MatchPoint& start, bool reverse,
                                std::span<const Symbol> a);

/// Peaks with equal inc + dec - 1 are broken by smallest i, then smallest j.
LcbsOutcome dense_lcbs(const SequencePair& pair, bool want_witness);

}  // namespace lcbs
