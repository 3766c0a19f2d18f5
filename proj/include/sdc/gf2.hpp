#pragma once

#include <optional>
#include <vector>

#include "sdc/bitvec.hpp"

namespace sdc {

struct RrefResult {
    BitMatrix reduced;          // reduced row echelon form, zero rows kept at the bottom
    int rank = 0;
    std::vector<int> pivot_cols; // 1-based, increasing
};

RrefResult rref(const BitMatrix& m);

// Basis of { x : m x^T = 0 }; rows() == cols(m) - rank(m).
BitMatrix nullspace(const BitMatrix& m);

struct Gf2Solution {
    BitVector particular;
    BitMatrix kernel;
};

// Solve m x^T = b^T.  Empty optional when inconsistent.
std::optional<Gf2Solution> solve(const BitMatrix& m, const BitVector& b);

int rank(const BitMatrix& m);

} // namespace sdc
