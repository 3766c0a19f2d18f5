#pragma once

#include <string>

#include "sdc/linear_code.hpp"

namespace sdc {

// Recipe for the two-coordinate extension: parent id plus the odd-weight x.
struct ExtensionRecipe {
    std::string parent;
    BitVector x;

    std::string to_line() const;                      // "parent:bitstring"
    static ExtensionRecipe from_line(std::string_view line);
};

// The four cosets of C0 = C n <x>^perp inside (C0)^perp for odd-weight x:
// C = C0 u C2 and x + C = C1 u C3.  C1 is the C0-coset containing x itself
// (so the split is unchanged by x -> x + w, w in C0); C3 is the other half.
struct CosetSplit {
    LinearCode c0;
    BitVector rep_c2; // c = c0 u (rep_c2 + c0)
    BitVector rep_c1; // x + c = (rep_c1 + c0) u (rep_c3 + c0)
    BitVector rep_c3;
};

CosetSplit split_cosets(const LinearCode& c, const BitVector& x);

// Two-coordinate extension (0,0,C0) u (1,1,C2) u (1,0,C1) u (0,1,C3):
// a self-dual [n+2, n/2+1] code.  The two new coordinates are prefixed.
LinearCode tsai_extend(const LinearCode& c, const BitVector& x);

} // namespace sdc
