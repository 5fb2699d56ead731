#pragma once

#include <vector>

#include "crn/bigint.hpp"

namespace crn {

using BigMatrix = std::vector<std::vector<BigInt>>;

struct EliminationResult {
    int rank = 0;
    std::vector<int> pivot_cols;  // ascending
};

// One-step fraction-free (Bareiss) row elimination, in place. All divisions
// are exact over the integers; no floating point anywhere.
EliminationResult fraction_free_eliminate(BigMatrix& m);

int exact_rank(BigMatrix m);

// Basis of { v : m v = 0 } as primitive integer vectors (content 1, first
// nonzero entry positive), one per free column of the RREF, in free-column
// order. Deterministic for a given input.
std::vector<std::vector<BigInt>> integer_nullspace(const BigMatrix& m);

}  // namespace crn
